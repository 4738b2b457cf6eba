//! Truncated Fock-space primitives for one or two oscillators.
//!
//! States live in the number basis |n⟩, n = 0..=n_max. A two-oscillator
//! state uses the row-major joint index n₁·d₂ + n₂ (oscillator 1 slow).
//! Operators are dense complex matrices; at the dimensions used here
//! (≤ 441) sparse storage buys nothing.

use std::f64::consts::PI;
use std::io::Write;

use faer::Mat;
use num_complex::Complex64;

use crate::linalg;
use crate::{Error, Result};

#[inline]
fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Per-oscillator truncation sizes of a state or operator.
///
/// `Single(d)` is one oscillator with d = n_max + 1 levels; `Pair(d1, d2)`
/// is the tensor product of two, with total dimension d1·d2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dims {
    Single(usize),
    Pair(usize, usize),
}

impl Dims {
    pub fn single_for(n_max: usize) -> Dims {
        Dims::Single(n_max + 1)
    }

    pub fn total(self) -> usize {
        match self {
            Dims::Single(d) => d,
            Dims::Pair(d1, d2) => d1 * d2,
        }
    }

    pub fn n_oscillators(self) -> usize {
        match self {
            Dims::Single(_) => 1,
            Dims::Pair(_, _) => 2,
        }
    }

    /// Joint dims of a tensor product; both factors must be single oscillators.
    pub fn joined(a: Dims, b: Dims) -> Result<Dims> {
        match (a, b) {
            (Dims::Single(d1), Dims::Single(d2)) => Ok(Dims::Pair(d1, d2)),
            _ => Err(Error::InvalidDimension(
                "tensor products are limited to two oscillators".into(),
            )),
        }
    }

    /// Photon-number parity sign (−1)^n (product over oscillators) of basis index `idx`.
    pub(crate) fn parity_sign(self, idx: usize) -> f64 {
        let n = match self {
            Dims::Single(_) => idx,
            Dims::Pair(_, d2) => idx / d2 + idx % d2,
        };
        if n.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// True when basis index `idx` has any oscillator in its top two levels.
    pub(crate) fn in_top_two(self, idx: usize) -> bool {
        match self {
            Dims::Single(d) => idx + 2 >= d,
            Dims::Pair(d1, d2) => {
                let (n1, n2) = (idx / d2, idx % d2);
                n1 + 2 >= d1 || n2 + 2 >= d2
            }
        }
    }
}

/// A pure state as complex amplitudes over the (joint) Fock basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
    dims: Dims,
}

impl StateVector {
    /// Wrap raw amplitudes; the length must match the dims.
    pub fn from_amplitudes(amps: Vec<Complex64>, dims: Dims) -> Result<Self> {
        if amps.len() != dims.total() {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for dims of total {}",
                amps.len(),
                dims.total()
            )));
        }
        Ok(StateVector { amps, dims })
    }

    /// |0⟩ (or |0,0⟩) for the given dims.
    pub fn vacuum(dims: Dims) -> Self {
        let mut amps = vec![Complex64::ZERO; dims.total()];
        amps[0] = Complex64::ONE;
        StateVector { amps, dims }
    }

    /// Single-oscillator number state |n⟩.
    pub fn fock(n: usize, n_max: usize) -> Result<Self> {
        if n > n_max {
            return Err(Error::InvalidDimension(format!(
                "Fock level {n} exceeds truncation {n_max}"
            )));
        }
        let mut amps = vec![Complex64::ZERO; n_max + 1];
        amps[n] = Complex64::ONE;
        Ok(StateVector {
            amps,
            dims: Dims::single_for(n_max),
        })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rescale to unit norm; returns the pre-normalization norm.
    pub fn normalize(&mut self) -> f64 {
        let n = self.norm();
        if n > 0.0 {
            let inv = c(1.0 / n);
            for z in &mut self.amps {
                *z *= inv;
            }
        }
        n
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!(
                "inner product between dims {:?} and {:?}",
                self.dims, other.dims
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// F = |⟨self|other⟩|², symmetric and global-phase invariant.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Kronecker product with oscillator-1-slow ordering.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let dims = Dims::joined(self.dims, other.dims)?;
        let d2 = other.amps.len();
        let mut amps = vec![Complex64::ZERO; dims.total()];
        for (i, &a) in self.amps.iter().enumerate() {
            for (j, &b) in other.amps.iter().enumerate() {
                amps[i * d2 + j] = a * b;
            }
        }
        Ok(StateVector { amps, dims })
    }

    /// ⟨(−1)^(a†a)⟩, the product over oscillators for a joint state.
    pub fn parity_expectation(&self) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .map(|(i, z)| self.dims.parity_sign(i) * z.norm_sqr())
            .sum()
    }

    /// Population in the top two Fock levels of any oscillator.
    pub fn top_two_population(&self) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| self.dims.in_top_two(*i))
            .map(|(_, z)| z.norm_sqr())
            .sum()
    }

    pub fn scaled(&self, z: Complex64) -> StateVector {
        StateVector {
            amps: self.amps.iter().map(|a| a * z).collect(),
            dims: self.dims,
        }
    }

    /// Σ cᵢ·ψᵢ over matching dims. Not normalized.
    pub fn superpose(terms: &[(Complex64, &StateVector)]) -> Result<StateVector> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::InvalidInput("empty superposition".into()))?;
        let dims = first.dims;
        let mut amps = vec![Complex64::ZERO; dims.total()];
        for (coeff, state) in terms {
            if state.dims != dims {
                return Err(Error::DimensionMismatch(
                    "superposition over mismatched dims".into(),
                ));
            }
            for (acc, z) in amps.iter_mut().zip(&state.amps) {
                *acc += coeff * z;
            }
        }
        Ok(StateVector { amps, dims })
    }
}

/// A dense operator on the (joint) Fock space.
#[derive(Clone, Debug)]
pub struct Operator {
    mat: Mat<Complex64>,
    dims: Dims,
}

impl Operator {
    pub fn zeros(dims: Dims) -> Self {
        Operator {
            mat: Mat::zeros(dims.total(), dims.total()),
            dims,
        }
    }

    pub fn identity(dims: Dims) -> Self {
        Operator {
            mat: Mat::identity(dims.total(), dims.total()),
            dims,
        }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn mat(&self) -> faer::MatRef<'_, Complex64> {
        self.mat.as_ref()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.mat[(i, j)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.mat[(i, j)] = v;
    }

    pub fn adjoint(&self) -> Operator {
        Operator {
            mat: self.mat.adjoint().to_owned(),
            dims: self.dims,
        }
    }

    pub fn scaled(&self, z: Complex64) -> Operator {
        Operator {
            mat: &self.mat * faer::Scale(z),
            dims: self.dims,
        }
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if psi.dims != self.dims {
            return Err(Error::DimensionMismatch(format!(
                "operator dims {:?} applied to state dims {:?}",
                self.dims, psi.dims
            )));
        }
        let mut out = vec![Complex64::ZERO; psi.dim()];
        linalg::matvec(
            &mut out,
            self.mat.as_ref(),
            psi.amplitudes(),
            Complex64::ONE,
            faer::Accum::Replace,
        );
        StateVector::from_amplitudes(out, self.dims)
    }

    /// ⟨ψ|A|ψ⟩.
    pub fn expectation(&self, psi: &StateVector) -> Result<Complex64> {
        psi.inner(&self.apply(psi)?)
    }

    /// Kronecker product with oscillator-1-slow ordering.
    pub fn tensor(&self, other: &Operator) -> Result<Operator> {
        let dims = Dims::joined(self.dims, other.dims)?;
        let (d1, d2) = (self.dim(), other.dim());
        let mut mat = Mat::zeros(d1 * d2, d1 * d2);
        for i1 in 0..d1 {
            for j1 in 0..d1 {
                let a = self.mat[(i1, j1)];
                if a == Complex64::ZERO {
                    continue;
                }
                for i2 in 0..d2 {
                    for j2 in 0..d2 {
                        mat[(i1 * d2 + i2, j1 * d2 + j2)] = a * other.mat[(i2, j2)];
                    }
                }
            }
        }
        Ok(Operator { mat, dims })
    }

    /// max |A − A†| over entries; zero for Hamiltonian-role operators.
    pub fn hermiticity_error(&self) -> f64 {
        (&self.mat - &self.mat.adjoint().to_owned()).norm_max()
    }

    pub fn matmul(&self, other: &Operator) -> Result<Operator> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(
                "operator product over mismatched dims".into(),
            ));
        }
        let mut mat = Mat::zeros(self.dim(), self.dim());
        faer::linalg::matmul::matmul(
            mat.as_mut(),
            faer::Accum::Replace,
            self.mat.as_ref(),
            other.mat.as_ref(),
            Complex64::ONE,
            faer::Par::Seq,
        );
        Ok(Operator {
            mat,
            dims: self.dims,
        })
    }

    /// [A, B] = AB − BA.
    pub fn commutator(&self, other: &Operator) -> Result<Operator> {
        let ab = self.matmul(other)?;
        let ba = other.matmul(self)?;
        Ok(&ab - &ba)
    }
}

impl std::ops::Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        assert_eq!(self.dims, rhs.dims, "operator sum over mismatched dims");
        Operator {
            mat: &self.mat + &rhs.mat,
            dims: self.dims,
        }
    }
}

impl std::ops::Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        assert_eq!(self.dims, rhs.dims, "operator difference over mismatched dims");
        Operator {
            mat: &self.mat - &rhs.mat,
            dims: self.dims,
        }
    }
}

/// Annihilation operator a on a single oscillator: a|n⟩ = √n |n−1⟩,
/// i.e. entries a[n−1, n] = √n.
pub fn annihilation_operator(n_max: usize) -> Result<Operator> {
    if n_max < 1 {
        return Err(Error::InvalidDimension(
            "annihilation operator needs n_max >= 1".into(),
        ));
    }
    let dims = Dims::single_for(n_max);
    let mut op = Operator::zeros(dims);
    for n in 1..=n_max {
        op.set(n - 1, n, c((n as f64).sqrt()));
    }
    Ok(op)
}

/// Creation operator a† = (a)†.
pub fn creation_operator(n_max: usize) -> Result<Operator> {
    Ok(annihilation_operator(n_max)?.adjoint())
}

/// Number operator a†a = diag(0, 1, …, n_max).
pub fn number_operator(n_max: usize) -> Result<Operator> {
    if n_max < 1 {
        return Err(Error::InvalidDimension(
            "number operator needs n_max >= 1".into(),
        ));
    }
    let mut op = Operator::zeros(Dims::single_for(n_max));
    for n in 0..=n_max {
        op.set(n, n, c(n as f64));
    }
    Ok(op)
}

/// Photon-number parity (−1)^(a†a), the product parity on a joint space.
pub fn parity_operator(dims: Dims) -> Operator {
    let mut op = Operator::zeros(dims);
    for i in 0..dims.total() {
        op.set(i, i, c(dims.parity_sign(i)));
    }
    op
}

/// Pre-renormalization norm deficit 1 − Σ_{n≤n_max} |cₙ|² of a truncated
/// coherent state; the tail population lost to truncation.
pub fn coherent_truncation_deficit(alpha: Complex64, n_max: usize) -> f64 {
    let amps = coherent_amplitudes(alpha, n_max);
    let kept: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    (1.0 - kept).max(0.0)
}

fn coherent_amplitudes(alpha: Complex64, n_max: usize) -> Vec<Complex64> {
    // cₙ = e^(−|α|²/2) αⁿ/√(n!), built by the stable recurrence cₙ = cₙ₋₁·α/√n.
    let mut amps = Vec::with_capacity(n_max + 1);
    let mut cur = c((-alpha.norm_sqr() / 2.0).exp());
    amps.push(cur);
    for n in 1..=n_max {
        cur *= alpha / c((n as f64).sqrt());
        amps.push(cur);
    }
    amps
}

/// Coherent state |α⟩ truncated at n_max and renormalized.
///
/// Warns on stderr when the truncation is too tight for the amplitude
/// (recommended |α|² + 6|α| ≤ n_max); the dropped tail is available from
/// [`coherent_truncation_deficit`].
pub fn coherent_state(alpha: Complex64, n_max: usize) -> Result<StateVector> {
    if n_max < 1 {
        return Err(Error::InvalidDimension(
            "coherent state needs n_max >= 1".into(),
        ));
    }
    let a = alpha.norm();
    if a * a + 6.0 * a > n_max as f64 {
        eprintln!(
            "warning: coherent amplitude |alpha|={a:.3} is large for truncation n_max={n_max} \
             (deficit {:.3e})",
            coherent_truncation_deficit(alpha, n_max)
        );
    }
    let mut state = StateVector::from_amplitudes(coherent_amplitudes(alpha, n_max), Dims::single_for(n_max))?;
    state.normalize();
    Ok(state)
}

/// Photon-number parity sector of a cat state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Cat state (|α⟩ ± |−α⟩)/√(2(1 ± e^(−2|α|²))), renormalized after truncation.
///
/// The even cat has support on even Fock levels only, the odd cat on odd
/// levels only; the opposite-parity amplitudes cancel exactly.
pub fn cat_state(alpha: Complex64, parity: Parity, n_max: usize) -> Result<StateVector> {
    let plus = coherent_state(alpha, n_max)?;
    let minus = coherent_state(-alpha, n_max)?;
    let sign = match parity {
        Parity::Even => Complex64::ONE,
        Parity::Odd => -Complex64::ONE,
    };
    let mut state = StateVector::superpose(&[(Complex64::ONE, &plus), (sign, &minus)])?;
    let norm = state.normalize();
    if norm < 1e-12 {
        return Err(Error::ZeroState(format!(
            "{parity:?} cat state is undefined at alpha = {alpha}"
        )));
    }
    Ok(state)
}

/// F = |⟨ψ|φ⟩|².
pub fn fidelity(psi: &StateVector, phi: &StateVector) -> Result<f64> {
    psi.fidelity(phi)
}

/// Rectangular phase-space grid for Wigner evaluation.
#[derive(Clone, Debug)]
pub struct WignerGrid {
    xs: Vec<f64>,
    ps: Vec<f64>,
    step: f64,
}

impl WignerGrid {
    /// Uniform grid over x ∈ [x0, x1], p ∈ [p0, p1] with the given step.
    pub fn new(x_range: (f64, f64), p_range: (f64, f64), step: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 || x_range.1 < x_range.0 || p_range.1 < p_range.0 {
            return Err(Error::InvalidInput("degenerate Wigner grid".into()));
        }
        let axis = |lo: f64, hi: f64| {
            let count = ((hi - lo) / step).round() as usize + 1;
            (0..count).map(|i| lo + step * i as f64).collect::<Vec<_>>()
        };
        Ok(WignerGrid {
            xs: axis(x_range.0, x_range.1),
            ps: axis(p_range.0, p_range.1),
            step,
        })
    }

    /// Square grid centered on the origin: both axes span [−extent, extent].
    pub fn centered(extent: f64, step: f64) -> Result<Self> {
        Self::new((-extent, extent), (-extent, extent), step)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ps(&self) -> &[f64] {
        &self.ps
    }

    pub fn step(&self) -> f64 {
        self.step
    }
}

/// Wigner function sampled on a grid; rows run over p, columns over x.
#[derive(Clone, Debug)]
pub struct WignerMap {
    grid: WignerGrid,
    values: Vec<f64>,
}

impl WignerMap {
    pub fn grid(&self) -> &WignerGrid {
        &self.grid
    }

    pub fn value(&self, ix: usize, ip: usize) -> f64 {
        self.values[ip * self.grid.xs.len() + ix]
    }

    /// Riemann-sum integral over the grid; → 1 for a unit state on a grid
    /// large enough to hold its support.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.step * self.grid.step
    }

    /// CSV with `# key=value` metadata, a header row of x values, and one
    /// row per p value (p first, then W(x, p) across the row).
    pub fn write_csv<W: Write>(&self, meta: &[(&str, String)], mut w: W) -> std::io::Result<()> {
        for (k, v) in meta {
            writeln!(w, "# {k}={v}")?;
        }
        write!(w, "p\\x")?;
        for x in &self.grid.xs {
            write!(w, ",{}", fmt_sig9(*x))?;
        }
        writeln!(w)?;
        for (ip, p) in self.grid.ps.iter().enumerate() {
            write!(w, "{}", fmt_sig9(*p))?;
            for ix in 0..self.grid.xs.len() {
                write!(w, ",{}", fmt_sig9(self.value(ix, ip)))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Format with 9 significant digits, normalizing negative zero.
pub(crate) fn fmt_sig9(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.8e}")
}

/// ⟨ψ|D(γ)P|ψ⟩ from the exact matrix elements of the displacement
/// operator, ⟨n+k|D(γ)|n⟩ = e^(−|γ|²/2)·γᵏ·√(n!/(n+k)!)·L_n^(k)(|γ|²),
/// evaluated by diagonal with the generalized-Laguerre recurrence. The
/// elements are those of the untruncated oscillator, so the result is
/// exact for any state supported on the kept levels, at any γ.
fn displaced_parity_expectation(amps: &[Complex64], gamma: Complex64) -> f64 {
    let dim = amps.len();
    let x = gamma.norm_sqr();
    let pref = (-x / 2.0).exp();
    let sign = |n: usize| if n.is_multiple_of(2) { 1.0 } else { -1.0 };

    let mut total = Complex64::ZERO;
    for k in 0..dim {
        // A(k, n) = γᵏ·√(n!/(n+k)!), advanced along the diagonal m = n + k
        let mut coeff = Complex64::ONE;
        for j in 1..=k {
            coeff *= gamma / c((j as f64).sqrt());
        }
        // L_n^(k)(x) recurrence state
        let mut l_prev = 0.0;
        let mut l_cur = 1.0;
        for n in 0..dim - k {
            if n > 0 {
                let nf = n as f64;
                let kf = k as f64;
                let l_next =
                    ((2.0 * nf - 1.0 + kf - x) * l_cur - (nf - 1.0 + kf) * l_prev) / nf;
                l_prev = l_cur;
                l_cur = l_next;
                coeff *= (nf / (nf + kf)).sqrt();
            }
            let upper = c(pref * l_cur) * coeff; // ⟨n+k|D(γ)|n⟩
            total += amps[n + k].conj() * upper * c(sign(n)) * amps[n];
            if k > 0 {
                // ⟨n|D(γ)|n+k⟩ = (−1)ᵏ·conj over γ of the upper element
                let lower = c(pref * l_cur * sign(k)) * coeff.conj();
                total += amps[n].conj() * lower * c(sign(n + k)) * amps[n + k];
            }
        }
    }
    total.re
}

/// Wigner function in the displaced-parity convention:
/// W(β) = (2/π)·⟨ψ|D(β) P D†(β)|ψ⟩ with β = x + ip.
///
/// This normalization integrates to 1 over the plane and puts the vacuum
/// peak at W(0,0) = 2/π. Evaluated as (2/π)·⟨ψ|D(2β)P|ψ⟩, using
/// D(β)PD†(β) = D(2β)P and the exact displacement matrix elements, so
/// the map stays accurate arbitrarily far from the origin.
pub fn wigner(psi: &StateVector, grid: &WignerGrid) -> Result<WignerMap> {
    if let Dims::Pair(_, _) = psi.dims() {
        return Err(Error::InvalidInput(
            "Wigner evaluation is defined for single-oscillator states".into(),
        ));
    }
    let mut values = vec![0.0; grid.xs.len() * grid.ps.len()];
    for (ip, &p) in grid.ps.iter().enumerate() {
        for (ix, &x) in grid.xs.iter().enumerate() {
            let gamma = Complex64::new(2.0 * x, 2.0 * p);
            let expect = displaced_parity_expectation(psi.amplitudes(), gamma);
            values[ip * grid.xs.len() + ix] = 2.0 / PI * expect;
        }
    }
    Ok(WignerMap {
        grid: grid.clone(),
        values,
    })
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_state(dim: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_filter_map(
            "needs nonzero norm",
            move |parts| {
                let amps: Vec<Complex64> =
                    parts.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
                let mut psi = StateVector::from_amplitudes(amps, Dims::Single(dim)).unwrap();
                if psi.normalize() > 1e-3 {
                    Some(psi)
                } else {
                    None
                }
            },
        )
    }

    proptest! {
        #[test]
        fn fidelity_is_global_phase_invariant(psi in arb_state(8), chi in 0.0..(2.0 * PI)) {
            let rotated = psi.scaled(Complex64::from_polar(1.0, chi));
            let f = psi.fidelity(&rotated).unwrap();
            prop_assert!((f - 1.0).abs() < 1e-12);
        }

        #[test]
        fn fidelity_is_symmetric(a in arb_state(6), b in arb_state(6)) {
            let fab = a.fidelity(&b).unwrap();
            let fba = b.fidelity(&a).unwrap();
            prop_assert!((fab - fba).abs() < 1e-12);
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&fab));
        }

        #[test]
        fn tensor_scalar_associativity(a in arb_state(5), b in arb_state(4), re in -1.0f64..1.0, im in -1.0f64..1.0) {
            let z = Complex64::new(re, im);
            let lhs = a.scaled(z).tensor(&b).unwrap();
            let rhs = a.tensor(&b).unwrap().scaled(z);
            for (x, y) in lhs.amplitudes().iter().zip(rhs.amplitudes()) {
                prop_assert!((x - y).norm() < 1e-12);
            }
        }

        #[test]
        fn cat_parity_sectors_are_exact(al in 0.3f64..2.2) {
            let even = cat_state(Complex64::new(al, 0.0), Parity::Even, 20).unwrap();
            for n in (1..=19).step_by(2) {
                prop_assert!(even.amplitudes()[n].norm() < 1e-15);
            }
        }
    }
}
