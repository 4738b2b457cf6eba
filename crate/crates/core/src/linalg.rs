//! Thin wrappers over the dense linear-algebra backend.

use faer::{Mat, MatRef};
use num_complex::Complex64;

use crate::{Error, Result};

/// Eigendecomposition of a Hermitian matrix: returns (eigenvalues, eigenvectors)
/// with real eigenvalues in ascending order and eigenvectors as matrix columns.
pub fn hermitian_eigen(mat: MatRef<'_, Complex64>) -> Result<(Vec<f64>, Mat<Complex64>)> {
    let evd = mat
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Numerical(format!("hermitian eigendecomposition failed: {e:?}")))?;
    let s = evd.S();
    let evals = (0..mat.nrows()).map(|i| s[i].re).collect();
    Ok((evals, evd.U().to_owned()))
}

/// Apply exp(−i·H·τ)·x given the eigendecomposition of Hermitian H.
pub fn phase_apply(
    evals: &[f64],
    evecs: MatRef<'_, Complex64>,
    tau: f64,
    x: &[Complex64],
) -> Vec<Complex64> {
    let n = evals.len();
    debug_assert_eq!(x.len(), n);
    // w = U† x
    let mut w = vec![Complex64::ZERO; n];
    matvec_adjoint(&mut w, evecs, x, Complex64::ONE);
    // w_j *= exp(−i λ_j τ)
    for (wj, &lam) in w.iter_mut().zip(evals) {
        *wj *= Complex64::from_polar(1.0, -lam * tau);
    }
    // result = U w
    let mut out = vec![Complex64::ZERO; n];
    matvec(&mut out, evecs, &w, Complex64::ONE, faer::Accum::Replace);
    out
}

/// exp(−i·H·τ)·x for Hermitian H, via a fresh eigendecomposition.
pub fn expm_mul(h: MatRef<'_, Complex64>, tau: f64, x: &[Complex64]) -> Result<Vec<Complex64>> {
    let (evals, evecs) = hermitian_eigen(h)?;
    Ok(phase_apply(&evals, evecs.as_ref(), tau, x))
}

/// out = alpha·A·x (+ out when accumulating).
pub fn matvec(
    out: &mut [Complex64],
    a: MatRef<'_, Complex64>,
    x: &[Complex64],
    alpha: Complex64,
    accum: faer::Accum,
) {
    let dst = faer::ColMut::from_slice_mut(out);
    faer::linalg::matmul::matmul(
        dst,
        accum,
        a,
        faer::ColRef::from_slice(x),
        alpha,
        faer::Par::Seq,
    );
}

/// out = alpha·A†·x without materializing the adjoint.
pub fn matvec_adjoint(
    out: &mut [Complex64],
    a: MatRef<'_, Complex64>,
    x: &[Complex64],
    alpha: Complex64,
) {
    let dst = faer::ColMut::from_slice_mut(out).as_mat_mut();
    faer::linalg::matmul::matmul_with_conj(
        dst,
        faer::Accum::Replace,
        a.transpose(),
        faer::Conj::Yes,
        faer::ColRef::from_slice(x).as_mat(),
        faer::Conj::No,
        alpha,
        faer::Par::Seq,
    );
}
