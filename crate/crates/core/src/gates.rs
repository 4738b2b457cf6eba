//! Gate protocols on KPO cat qubits.
//!
//! The computational basis states are the bifurcated branches |0̄⟩ ≈ |α₀⟩
//! and |1̄⟩ ≈ |−α₀⟩ with α₀ = √(p₀/K). All four protocols are adiabatic:
//!
//! - initialization — ramp the pump 0 → p₀ from the vacuum; parity
//!   symmetry forces the even cat, i.e. (|0̄⟩ + |1̄⟩)/√2;
//! - R_z(φ) — a weak resonant drive E(t)·(a + a†) shifts the branch
//!   energies by ±2E√(p₀/K), so the branches accumulate opposite dynamical
//!   phases; E(t) = πφ/(8·T_g·√(p₀/K))·sin(πt/T_g) realizes the angle φ;
//! - R_x(θ) — a detuning pulse Δ(t) = Δ₀·sin²(πt/T_g) splits the even/odd
//!   cat energies, rotating about X by an angle θ(Δ₀) extracted after the
//!   fact ([`extract_theta`]);
//! - ZZ gate U(Θ) — a linear exchange coupling g(t)·(a₁a₂† + a₁†a₂) shifts
//!   aligned/anti-aligned branch pairs by ±2g·p₀/K;
//!   g(t) = πΘ/(8·T_g·p₀/K)·sin(πt/T_g) realizes U(Θ) = e^(−iΘZ₁Z₂/2).
//!
//! The qubit subspace is defined through the exactly orthogonal cat pair
//! |C₊⟩, |C₋⟩; |0̄⟩ and |1̄⟩ are derived as (|C₊⟩ ± |C₋⟩)/√2, so projectors
//! are exact and leakage is well defined. Gate fidelities are state
//! fidelities in the full Fock space against the ideal gate embedded
//! through this basis.

use std::f64::consts::PI;

use faer::Mat;
use num_complex::Complex64;

use crate::evolve::{integrate, SimResult, TimeDependentHamiltonian};
use crate::fock::{cat_state, number_operator, Dims, Operator, Parity, StateVector};
use crate::hamiltonian::{
    coupling_hamiltonian, drive_hamiltonian, kpo_hamiltonian, KpoParams, PulseSchedule,
};
use crate::{Error, Result};

#[inline]
fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

const I_UNIT: Complex64 = Complex64::new(0.0, 1.0);
const TAU: f64 = 2.0 * PI;

/// Truncation leakage above this triggers a stderr warning after a gate.
const LEAKAGE_WARN: f64 = 1e-3;

/// The orthonormal cat-qubit basis of one oscillator at pump p₀.
///
/// ⟨C₊|C₋⟩ = 0 exactly (opposite parity sectors), so the derived
/// computational states are exactly orthonormal; they agree with the
/// coherent branches up to O(e^(−2p₀/K)).
#[derive(Clone, Debug)]
pub struct QubitBasis {
    alpha0: f64,
    n_max: usize,
    cat_even: StateVector,
    cat_odd: StateVector,
    zero_bar: StateVector,
    one_bar: StateVector,
}

impl QubitBasis {
    pub fn new(p0_over_k: f64, n_max: usize) -> Result<Self> {
        if !p0_over_k.is_finite() || p0_over_k <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "qubit basis needs a positive pump, got p0/K = {p0_over_k}"
            )));
        }
        let alpha0 = p0_over_k.sqrt();
        let cat_even = cat_state(c(alpha0), Parity::Even, n_max)?;
        let cat_odd = cat_state(c(alpha0), Parity::Odd, n_max)?;
        let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
        let zero_bar = StateVector::superpose(&[
            (inv_sqrt2, &cat_even),
            (inv_sqrt2, &cat_odd),
        ])?;
        let one_bar = StateVector::superpose(&[
            (inv_sqrt2, &cat_even),
            (-inv_sqrt2, &cat_odd),
        ])?;
        Ok(QubitBasis {
            alpha0,
            n_max,
            cat_even,
            cat_odd,
            zero_bar,
            one_bar,
        })
    }

    pub fn from_params(params: &KpoParams) -> Result<Self> {
        Self::new(params.pump / params.kerr, params.n_max)
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn cat_even(&self) -> &StateVector {
        &self.cat_even
    }

    pub fn cat_odd(&self) -> &StateVector {
        &self.cat_odd
    }

    pub fn zero_bar(&self) -> &StateVector {
        &self.zero_bar
    }

    pub fn one_bar(&self) -> &StateVector {
        &self.one_bar
    }

    /// (|0̄⟩ + |1̄⟩)/√2, the post-initialization state; equals |C₊⟩.
    pub fn plus_state(&self) -> StateVector {
        self.cat_even.clone()
    }

    /// Amplitudes (⟨C₊|ψ⟩, ⟨C₋|ψ⟩) in the cat basis.
    pub fn cat_amplitudes(&self, psi: &StateVector) -> Result<(Complex64, Complex64)> {
        Ok((self.cat_even.inner(psi)?, self.cat_odd.inner(psi)?))
    }

    /// Amplitudes (⟨0̄|ψ⟩, ⟨1̄|ψ⟩) plus leakage 1 − ‖projection‖².
    pub fn project_single(&self, psi: &StateVector) -> Result<([Complex64; 2], f64)> {
        let amps = [self.zero_bar.inner(psi)?, self.one_bar.inner(psi)?];
        let kept: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        Ok((amps, (1.0 - kept).max(0.0)))
    }

    /// The four two-qubit basis states |0̄0̄⟩, |0̄1̄⟩, |1̄0̄⟩, |1̄1̄⟩.
    pub fn pair_states(&self) -> Result<[StateVector; 4]> {
        Ok([
            self.zero_bar.tensor(&self.zero_bar)?,
            self.zero_bar.tensor(&self.one_bar)?,
            self.one_bar.tensor(&self.zero_bar)?,
            self.one_bar.tensor(&self.one_bar)?,
        ])
    }

    /// Amplitudes over |0̄0̄⟩…|1̄1̄⟩ plus leakage.
    pub fn project_pair(&self, psi: &StateVector) -> Result<([Complex64; 4], f64)> {
        let basis = self.pair_states()?;
        let mut amps = [Complex64::ZERO; 4];
        for (a, b) in amps.iter_mut().zip(&basis) {
            *a = b.inner(psi)?;
        }
        let kept: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        Ok((amps, (1.0 - kept).max(0.0)))
    }

    /// c₀|0̄⟩ + c₁|1̄⟩.
    pub fn embed_single(&self, amps: [Complex64; 2]) -> Result<StateVector> {
        StateVector::superpose(&[(amps[0], &self.zero_bar), (amps[1], &self.one_bar)])
    }

    /// Σ cᵢ over the two-qubit basis states.
    pub fn embed_pair(&self, amps: [Complex64; 4]) -> Result<StateVector> {
        let basis = self.pair_states()?;
        StateVector::superpose(&[
            (amps[0], &basis[0]),
            (amps[1], &basis[1]),
            (amps[2], &basis[2]),
            (amps[3], &basis[3]),
        ])
    }

    /// Apply a 2×2 qubit gate inside the subspace, leaving the orthogonal
    /// complement untouched.
    pub fn apply_ideal_single(
        &self,
        gate: &Mat<Complex64>,
        psi: &StateVector,
    ) -> Result<StateVector> {
        assert_eq!((gate.nrows(), gate.ncols()), (2, 2));
        let (amps, _) = self.project_single(psi)?;
        let new = [
            gate[(0, 0)] * amps[0] + gate[(0, 1)] * amps[1],
            gate[(1, 0)] * amps[0] + gate[(1, 1)] * amps[1],
        ];
        StateVector::superpose(&[
            (Complex64::ONE, psi),
            (new[0] - amps[0], &self.zero_bar),
            (new[1] - amps[1], &self.one_bar),
        ])
    }

    /// Apply a 4×4 two-qubit gate inside the subspace.
    pub fn apply_ideal_pair(
        &self,
        gate: &Mat<Complex64>,
        psi: &StateVector,
    ) -> Result<StateVector> {
        assert_eq!((gate.nrows(), gate.ncols()), (4, 4));
        let basis = self.pair_states()?;
        let mut amps = [Complex64::ZERO; 4];
        for (a, b) in amps.iter_mut().zip(&basis) {
            *a = b.inner(psi)?;
        }
        let mut terms: Vec<(Complex64, &StateVector)> = vec![(Complex64::ONE, psi)];
        for i in 0..4 {
            let mut new = Complex64::ZERO;
            for j in 0..4 {
                new += gate[(i, j)] * amps[j];
            }
            terms.push((new - amps[i], &basis[i]));
        }
        StateVector::superpose(&terms)
    }
}

/// Project onto the computational subspace: amplitudes over |0̄⟩,|1̄⟩
/// (single oscillator) or |0̄0̄⟩…|1̄1̄⟩ (pair), plus leakage 1 − ‖proj‖².
pub fn project_to_qubit(
    psi: &StateVector,
    basis: &QubitBasis,
) -> Result<(Vec<Complex64>, f64)> {
    match psi.dims() {
        Dims::Single(_) => {
            let (amps, leak) = basis.project_single(psi)?;
            Ok((amps.to_vec(), leak))
        }
        Dims::Pair(_, _) => {
            let (amps, leak) = basis.project_pair(psi)?;
            Ok((amps.to_vec(), leak))
        }
    }
}

/// The four protocols of the gate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateKind {
    Init,
    Rz,
    Rx,
    Zz,
}

/// Ideal gate matrices:
///
/// ```text
/// R_z(φ) = e^(−iφZ/2),  R_x(θ) = e^(−iθX/2),  U(Θ) = e^(−iΘZ₁Z₂/2)
/// ```
///
/// 2×2 for R_z/R_x, 4×4 for U; unitary by construction.
pub fn ideal_gate(kind: GateKind, angle: f64) -> Result<Mat<Complex64>> {
    let half = angle / 2.0;
    match kind {
        GateKind::Rz => {
            let mut m = Mat::zeros(2, 2);
            m[(0, 0)] = Complex64::from_polar(1.0, -half);
            m[(1, 1)] = Complex64::from_polar(1.0, half);
            Ok(m)
        }
        GateKind::Rx => {
            let mut m = Mat::zeros(2, 2);
            let cos = c(half.cos());
            let msin = -I_UNIT * c(half.sin());
            m[(0, 0)] = cos;
            m[(1, 1)] = cos;
            m[(0, 1)] = msin;
            m[(1, 0)] = msin;
            Ok(m)
        }
        GateKind::Zz => {
            let mut m = Mat::zeros(4, 4);
            m[(0, 0)] = Complex64::from_polar(1.0, -half);
            m[(1, 1)] = Complex64::from_polar(1.0, half);
            m[(2, 2)] = Complex64::from_polar(1.0, half);
            m[(3, 3)] = Complex64::from_polar(1.0, -half);
            Ok(m)
        }
        GateKind::Init => Err(Error::InvalidInput(
            "initialization has no ideal gate matrix".into(),
        )),
    }
}

/// Drive amplitude of the R_z pulse E(t) = A·sin(πt/T_g) with
/// A = πφ/(8·T_g·√(p₀/K)), so that φ = 4√(p₀/K)·∫E dt.
pub fn rz_drive_amplitude(phi: f64, t_g: f64, p0_over_k: f64) -> f64 {
    PI * phi / (8.0 * t_g * p0_over_k.sqrt())
}

/// Coupling amplitude of the ZZ pulse: g(t) = A·sin(πt/T_g) with
/// A = πΘ/(8·T_g·p₀/K), so that Θ = (4p₀/K)·∫g dt.
pub fn zz_coupling_amplitude(theta: f64, t_g: f64, p0_over_k: f64) -> f64 {
    PI * theta / (8.0 * t_g * p0_over_k)
}

/// Smooth pump ramp 0 → p₀ over [0, t_init]: the first half-window of a
/// sine-squared envelope (duration 2·t_init), which starts and ends the
/// ramp with zero slope.
pub fn init_ramp(p0: f64, t_init: f64) -> PulseSchedule {
    PulseSchedule::sine_squared(p0, 2.0 * t_init)
}

/// A fully specified gate protocol: what to run and for how long.
#[derive(Clone, Debug)]
pub struct GateProtocol {
    pub kind: GateKind,
    /// Target angle: φ for rz, Θ for zz, the detuning peak Δ₀ for rx,
    /// and unused (0) for init.
    pub angle: f64,
    pub gate_time: f64,
    pub params: KpoParams,
    /// Second oscillator for the two-qubit gate.
    pub params2: Option<KpoParams>,
    /// The scheduled control: E(t), Δ(t), g(t), or the pump ramp p(t).
    pub schedule: PulseSchedule,
}

fn require_operating_point(params: &KpoParams, what: &str) -> Result<()> {
    if params.detuning != 0.0 {
        return Err(Error::InvalidInput(format!(
            "{what} holds the static detuning at zero; got {}",
            params.detuning
        )));
    }
    if params.pump <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "{what} requires a positive operating pump p0"
        )));
    }
    Ok(())
}

impl GateProtocol {
    /// R_z(φ) at gate time T_g: drive pulse from the closed-form amplitude.
    pub fn rz(phi: f64, t_g: f64, params: &KpoParams) -> Result<Self> {
        require_operating_point(params, "rz")?;
        let amp = rz_drive_amplitude(phi, t_g, params.pump / params.kerr);
        Ok(GateProtocol {
            kind: GateKind::Rz,
            angle: phi,
            gate_time: t_g,
            params: *params,
            params2: None,
            schedule: PulseSchedule::sine(amp, t_g),
        })
    }

    /// R_x via detuning pulse Δ(t) = Δ₀·sin²(πt/T_g); the realized angle
    /// θ(Δ₀) is recovered afterwards with [`extract_theta`].
    pub fn rx(delta0: f64, t_g: f64, params: &KpoParams) -> Result<Self> {
        require_operating_point(params, "rx")?;
        if delta0 < 0.0 {
            return Err(Error::InvalidInput(format!(
                "detuning peak must be nonnegative, got {delta0}"
            )));
        }
        Ok(GateProtocol {
            kind: GateKind::Rx,
            angle: delta0,
            gate_time: t_g,
            params: *params,
            params2: None,
            schedule: PulseSchedule::sine_squared(delta0, t_g),
        })
    }

    /// U(Θ) on two oscillators held at the same operating point.
    pub fn zz(theta: f64, t_g: f64, params1: &KpoParams, params2: &KpoParams) -> Result<Self> {
        require_operating_point(params1, "zz")?;
        require_operating_point(params2, "zz")?;
        let r1 = params1.pump / params1.kerr;
        let r2 = params2.pump / params2.kerr;
        if (r1 - r2).abs() > 1e-12 * r1.max(1.0) {
            return Err(Error::InvalidInput(format!(
                "zz requires both oscillators at the same p0/K (got {r1} and {r2})"
            )));
        }
        let amp = zz_coupling_amplitude(theta, t_g, r1);
        Ok(GateProtocol {
            kind: GateKind::Zz,
            angle: theta,
            gate_time: t_g,
            params: *params1,
            params2: Some(*params2),
            schedule: PulseSchedule::sine(amp, t_g),
        })
    }

    /// Adiabatic initialization: pump ramped 0 → p₀ over t_init at Δ = 0.
    pub fn init(params: &KpoParams, t_init: f64, ramp: PulseSchedule) -> Result<Self> {
        require_operating_point(params, "init")?;
        if !t_init.is_finite() || t_init <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "initialization time must be positive, got {t_init}"
            )));
        }
        let start = ramp.eval(0.0)?;
        let end = ramp.eval(t_init)?;
        if start.abs() > 1e-9 * params.pump.max(1.0) {
            return Err(Error::InvalidInput(format!(
                "initialization ramp must start at zero pump, got {start}"
            )));
        }
        if (end - params.pump).abs() > 1e-9 * params.pump.max(1.0) {
            return Err(Error::InvalidInput(format!(
                "initialization ramp must reach p0 = {} at t_init, got {end}",
                params.pump
            )));
        }
        Ok(GateProtocol {
            kind: GateKind::Init,
            angle: 0.0,
            gate_time: t_init,
            params: *params,
            params2: None,
            schedule: ramp,
        })
    }

    /// Assemble H(t) = base + schedule(t)·control for this protocol.
    pub fn hamiltonian(&self) -> Result<TimeDependentHamiltonian> {
        let n_max = self.params.n_max;
        match self.kind {
            GateKind::Rz => {
                let base = kpo_hamiltonian(&self.params)?;
                let drive = drive_hamiltonian(1.0, n_max)?;
                TimeDependentHamiltonian::new(base, vec![(drive, self.schedule)], self.gate_time)
            }
            GateKind::Rx => {
                let base = kpo_hamiltonian(&self.params)?;
                let n_op = number_operator(n_max)?;
                TimeDependentHamiltonian::new(base, vec![(n_op, self.schedule)], self.gate_time)
            }
            GateKind::Zz => {
                let params2 = self.params2.as_ref().expect("zz carries second params");
                let h1 = kpo_hamiltonian(&self.params)?;
                let h2 = kpo_hamiltonian(params2)?;
                let eye1 = Operator::identity(Dims::single_for(n_max));
                let eye2 = Operator::identity(Dims::single_for(params2.n_max));
                let base = &h1.tensor(&eye2)? + &eye1.tensor(&h2)?;
                let coupling = coupling_hamiltonian(1.0, n_max, params2.n_max)?;
                TimeDependentHamiltonian::new(
                    base,
                    vec![(coupling, self.schedule)],
                    self.gate_time,
                )
            }
            GateKind::Init => {
                let zero_pump = KpoParams::new(self.params.kerr, 0.0, 0.0, n_max)?;
                let base = kpo_hamiltonian(&zero_pump)?;
                let a = crate::fock::annihilation_operator(n_max)?;
                let a2 = a.matmul(&a)?;
                let pump_op = (&a2.adjoint() + &a2).scaled(c(-0.5));
                TimeDependentHamiltonian::new(base, vec![(pump_op, self.schedule)], self.gate_time)
            }
        }
    }

    /// Integrate the protocol from `psi0`, warning on unusual truncation
    /// leakage.
    pub fn run(&self, psi0: &StateVector, step: f64, sample_every: usize) -> Result<SimResult> {
        let h = self.hamiltonian()?;
        let result = integrate(&h, psi0, step, sample_every)?;
        if result.leakage > LEAKAGE_WARN {
            eprintln!(
                "warning: {:?} gate leaked {:.3e} into the top Fock levels \
                 (angle {:.4}, T_g {:.3}); consider a larger n_max",
                self.kind, result.leakage, self.angle, self.gate_time
            );
        }
        Ok(result)
    }
}

/// Run R_z(φ) on `psi0` at the standard operating point.
pub fn apply_rz(
    phi: f64,
    t_g: f64,
    params: &KpoParams,
    psi0: &StateVector,
    step: f64,
) -> Result<SimResult> {
    GateProtocol::rz(phi, t_g, params)?.run(psi0, step, 0)
}

/// Run the detuning pulse with peak Δ₀ on `psi0`.
pub fn apply_rx(
    delta0: f64,
    t_g: f64,
    params: &KpoParams,
    psi0: &StateVector,
    step: f64,
) -> Result<SimResult> {
    GateProtocol::rx(delta0, t_g, params)?.run(psi0, step, 0)
}

/// Run U(Θ) on a two-oscillator state.
pub fn apply_zz(
    theta: f64,
    t_g: f64,
    params1: &KpoParams,
    params2: &KpoParams,
    psi0: &StateVector,
    step: f64,
) -> Result<SimResult> {
    GateProtocol::zz(theta, t_g, params1, params2)?.run(psi0, step, 0)
}

/// Outcome of the initialization protocol.
#[derive(Clone, Debug)]
pub struct InitResult {
    pub sim: SimResult,
    /// Fidelity of the final state to the even cat at p₀.
    pub cat_fidelity: f64,
}

/// Adiabatic initialization from the vacuum; reports the fidelity to the
/// target even cat state.
pub fn initialize_qubit(
    params: &KpoParams,
    t_init: f64,
    ramp: PulseSchedule,
    step: f64,
) -> Result<InitResult> {
    let protocol = GateProtocol::init(params, t_init, ramp)?;
    let psi0 = StateVector::vacuum(Dims::single_for(params.n_max));
    let sim = protocol.run(&psi0, step, 0)?;
    let target = cat_state(c(params.branch_amplitude()), Parity::Even, params.n_max)?;
    let cat_fidelity = sim.final_state.fidelity(&target)?;
    Ok(InitResult { sim, cat_fidelity })
}

/// Wrap an angle into (−2π, 0]; tiny positive rounding snaps to 0 instead
/// of aliasing to −2π.
fn wrap_theta(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y < 1e-9 {
        0.0
    } else {
        y - TAU
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Recover the R_x rotation angle realized between `psi_in` and `psi_out`.
///
/// Primary route: in the cat basis R_x(θ) is diagonal — |C₊⟩ gains
/// e^(−iθ/2) and |C₋⟩ gains e^(+iθ/2) — so the amplitude ratio c₋/c₊
/// advances by e^(iθ) and θ follows from its argument, reported in
/// (−2π, 0]. This is cross-validated against a golden-section maximization
/// of F(θ) = |⟨ψ_out|R_x(θ)ψ_in⟩|² (tolerance 1e−6 rad); disagreement
/// beyond 1e−4 rad is an error. Returns (θ, F(θ)).
pub fn extract_theta(
    psi_out: &StateVector,
    psi_in: &StateVector,
    basis: &QubitBasis,
) -> Result<(f64, f64)> {
    let (cp_in, cm_in) = basis.cat_amplitudes(psi_in)?;
    let (cp_out, cm_out) = basis.cat_amplitudes(psi_out)?;
    let floor = 1e-8;
    if cp_in.norm() < floor || cm_in.norm() < floor {
        return Err(Error::UnidentifiableAngle(format!(
            "input state has cat amplitudes ({:.3e}, {:.3e}); both parity \
             sectors must be populated",
            cp_in.norm(),
            cm_in.norm()
        )));
    }
    if cp_out.norm() < floor || cm_out.norm() < floor {
        return Err(Error::UnidentifiableAngle(
            "output state lost one parity sector".into(),
        ));
    }

    let theta_proj = wrap_theta(
        (cm_out / cp_out).arg() - (cm_in / cp_in).arg(),
    );

    // F(θ) in closed form over the two cat amplitudes, with the complement
    // overlap entering as a θ-independent constant (identity off-subspace).
    let a_term = cp_out.conj() * cp_in;
    let b_term = cm_out.conj() * cm_in;
    let rest = psi_out.inner(psi_in)? - a_term - b_term;
    let f_of = |theta: f64| -> f64 {
        let half = theta / 2.0;
        (a_term * Complex64::from_polar(1.0, -half)
            + b_term * Complex64::from_polar(1.0, half)
            + rest)
            .norm_sqr()
    };

    // coarse scan then golden-section refinement; F is 2π-periodic in θ
    let m = 256;
    let mut best_k = 0;
    let mut best_f = f64::MIN;
    for k in 0..m {
        let theta = -TAU * k as f64 / m as f64;
        let f = f_of(theta);
        if f > best_f {
            best_f = f;
            best_k = k;
        }
    }
    let spacing = TAU / m as f64;
    let center = -TAU * best_k as f64 / m as f64;
    let (mut lo, mut hi) = (center - spacing, center + spacing);
    let gr = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - gr * (hi - lo);
    let mut x2 = lo + gr * (hi - lo);
    let (mut f1, mut f2) = (f_of(x1), f_of(x2));
    while hi - lo > 1e-6 {
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f_of(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f_of(x2);
        }
    }
    let theta_search = wrap_theta(0.5 * (lo + hi));

    if circular_distance(theta_proj, theta_search) > 1e-4 {
        return Err(Error::AngleMismatch {
            projected: theta_proj,
            searched: theta_search,
        });
    }
    Ok((theta_proj, f_of(theta_proj)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::fidelity;
    use crate::DEFAULT_STEP;

    fn operating_params() -> KpoParams {
        KpoParams::at_pump(4.0, 20).unwrap()
    }

    #[test]
    fn basis_is_orthonormal_and_near_coherent() {
        let basis = QubitBasis::new(4.0, 20).unwrap();
        assert!((basis.zero_bar().norm() - 1.0).abs() < 1e-12);
        let overlap = basis.zero_bar().inner(basis.one_bar()).unwrap().norm();
        assert!(overlap <= (-8.0f64).exp() + 1e-10);

        // |0̄⟩ agrees with the coherent branch up to O(e^(−2p₀/K))
        let coh = crate::fock::coherent_state(c(2.0), 20).unwrap();
        let f = basis.zero_bar().fidelity(&coh).unwrap();
        assert!(f > 1.0 - 1e-6, "fidelity to coherent branch {f}");
    }

    #[test]
    fn ideal_gates_match_the_defining_matrices() {
        // R_z(0) = I
        let rz0 = ideal_gate(GateKind::Rz, 0.0).unwrap();
        assert!((rz0[(0, 0)] - Complex64::ONE).norm() < 1e-15);
        assert!((rz0[(1, 1)] - Complex64::ONE).norm() < 1e-15);

        // R_x(π) = −iX
        let rx = ideal_gate(GateKind::Rx, PI).unwrap();
        assert!(rx[(0, 0)].norm() < 1e-15);
        assert!((rx[(0, 1)] + I_UNIT).norm() < 1e-15);
        assert!((rx[(1, 0)] + I_UNIT).norm() < 1e-15);

        // U(π/2) = diag(e^(−iπ/4), e^(iπ/4), e^(iπ/4), e^(−iπ/4))
        let u = ideal_gate(GateKind::Zz, PI / 2.0).unwrap();
        let em = Complex64::from_polar(1.0, -PI / 4.0);
        let ep = Complex64::from_polar(1.0, PI / 4.0);
        for (i, expect) in [em, ep, ep, em].iter().enumerate() {
            assert!((u[(i, i)] - expect).norm() < 1e-15);
        }

        assert!(ideal_gate(GateKind::Init, 0.0).is_err());
    }

    #[test]
    fn ideal_gates_are_unitary_and_compose() {
        for (kind, angle) in [
            (GateKind::Rz, 0.7),
            (GateKind::Rx, -1.3),
            (GateKind::Zz, 2.1),
        ] {
            let g = ideal_gate(kind, angle).unwrap();
            let gh = g.adjoint().to_owned();
            let prod = &gh * &g;
            let n = prod.nrows();
            let eye = Mat::<Complex64>::identity(n, n);
            assert!((&prod - &eye).norm_max() < 1e-14);
        }

        // R_z(a)·R_z(b) = R_z(a+b), exactly (diagonal phases add)
        let (a, b) = (0.9, -0.4);
        let ga = ideal_gate(GateKind::Rz, a).unwrap();
        let gb = ideal_gate(GateKind::Rz, b).unwrap();
        let gab = ideal_gate(GateKind::Rz, a + b).unwrap();
        assert!((&(&ga * &gb) - &gab).norm_max() < 1e-14);
    }

    #[test]
    fn projection_of_basis_states() {
        let basis = QubitBasis::new(4.0, 20).unwrap();

        // |C₊⟩ → (1/√2, 1/√2) with negligible leakage
        let (amps, leak) = basis.project_single(&basis.plus_state()).unwrap();
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((amps[0] - c(inv_sqrt2)).norm() < 1e-12);
        assert!((amps[1] - c(inv_sqrt2)).norm() < 1e-12);
        assert!(leak < 1e-12);

        // a bare Fock state sits mostly outside the qubit subspace
        let two = StateVector::fock(2, 20).unwrap();
        let (_, leak) = basis.project_single(&two).unwrap();
        assert!(leak > 0.5, "leakage {leak}");

        // |0̄⟩⊗|1̄⟩ projects onto index 1 of the pair basis
        let pair = basis.zero_bar().tensor(basis.one_bar()).unwrap();
        let (amps, leak) = basis.project_pair(&pair).unwrap();
        assert!((amps[1] - Complex64::ONE).norm() < 1e-6);
        for i in [0usize, 2, 3] {
            assert!(amps[i].norm() < 1e-6);
        }
        assert!(leak < 1e-10);

        let (vec_amps, _) = project_to_qubit(&pair, &basis).unwrap();
        assert_eq!(vec_amps.len(), 4);
    }

    #[test]
    fn schedule_closure_recovers_requested_angles() {
        // Simpson quadrature over the constructed pulses re-derives the angle
        let simpson = |s: &PulseSchedule, t_g: f64| -> f64 {
            let panels = 2000;
            let h = t_g / panels as f64;
            let mut acc = s.eval(0.0).unwrap() + s.eval(t_g).unwrap();
            for i in 1..panels {
                let w = if i % 2 == 0 { 2.0 } else { 4.0 };
                acc += w * s.eval(h * i as f64).unwrap();
            }
            acc * h / 3.0
        };
        let params = operating_params();

        let phi = 1.234;
        let rz = GateProtocol::rz(phi, 2.0, &params).unwrap();
        let recovered = 4.0 * 2.0 * simpson(&rz.schedule, 2.0);
        assert!(((recovered - phi) / phi).abs() < 1e-9, "phi {recovered}");

        let theta = 2.345;
        let zz = GateProtocol::zz(theta, 2.0, &params, &params).unwrap();
        let recovered = 4.0 * 4.0 * simpson(&zz.schedule, 2.0);
        assert!(
            ((recovered - theta) / theta).abs() < 1e-9,
            "theta {recovered}"
        );
    }

    #[test]
    fn extract_theta_identity_and_synthetic_rotation() {
        let basis = QubitBasis::new(4.0, 20).unwrap();
        let psi_in = basis
            .embed_single([c(1.0 / 2.0f64.sqrt()), I_UNIT * c(1.0 / 2.0f64.sqrt())])
            .unwrap();

        let (theta, f) = extract_theta(&psi_in, &psi_in, &basis).unwrap();
        assert_eq!(theta, 0.0);
        assert!((f - 1.0).abs() < 1e-12);

        let target = -PI / 2.0;
        let gate = ideal_gate(GateKind::Rx, target).unwrap();
        let psi_out = basis.apply_ideal_single(&gate, &psi_in).unwrap();
        let (theta, f) = extract_theta(&psi_out, &psi_in, &basis).unwrap();
        assert!((theta - target).abs() < 1e-8, "theta {theta}");
        assert!((f - 1.0).abs() < 1e-10);
    }

    #[test]
    fn extract_theta_rejects_single_sector_inputs() {
        let basis = QubitBasis::new(4.0, 20).unwrap();
        let even_only = basis.plus_state();
        match extract_theta(&even_only, &even_only, &basis) {
            Err(Error::UnidentifiableAngle(_)) => {}
            other => panic!("expected UnidentifiableAngle, got {other:?}"),
        }
    }

    #[test]
    fn rz_protocol_rotates_the_plus_state() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let psi_in = basis.plus_state();

        let phi = PI / 2.0;
        let res = apply_rz(phi, 2.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
        let ideal = basis
            .embed_single([
                Complex64::from_polar(1.0, -phi / 2.0) * inv_sqrt2,
                Complex64::from_polar(1.0, phi / 2.0) * inv_sqrt2,
            ])
            .unwrap();
        let f = res.final_state.fidelity(&ideal).unwrap();
        assert!(f >= 0.98, "Rz(π/2) fidelity {f}");
        assert!(res.norm_drift < 1e-9);
        assert!(res.leakage < 1e-6, "truncation leakage {}", res.leakage);
    }

    #[test]
    fn rz_identity_pulse_is_near_perfect() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let psi_in = basis.plus_state();
        let res = apply_rz(0.0, 2.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let f = res.final_state.fidelity(&psi_in).unwrap();
        assert!(f > 1.0 - 1e-10, "phi=0 fidelity deficit {}", 1.0 - f);
    }

    #[test]
    fn rz_longer_gate_time_does_not_hurt() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let psi_in = basis.plus_state();
        let phi = PI;
        let fid_for = |t_g: f64| {
            let res = apply_rz(phi, t_g, &params, &psi_in, DEFAULT_STEP).unwrap();
            let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
            let ideal = basis
                .embed_single([
                    Complex64::from_polar(1.0, -phi / 2.0) * inv_sqrt2,
                    Complex64::from_polar(1.0, phi / 2.0) * inv_sqrt2,
                ])
                .unwrap();
            res.final_state.fidelity(&ideal).unwrap()
        };
        let f2 = fid_for(2.0);
        let f4 = fid_for(4.0);
        assert!(f4 >= f2 - 1e-6, "T_g=2: {f2}, T_g=4: {f4}");
    }

    #[test]
    fn rz_opposite_angles_conjugate_the_qubit_amplitudes() {
        // Z-rotation symmetry on a real input state: the qubit amplitudes
        // at −φ are the conjugates of those at φ, up to the overall
        // dynamical phase of the ground manifold. Compared through the
        // phase-free pairing c₀·c₁* and the amplitude magnitudes.
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let psi_in = basis.plus_state(); // real amplitudes
        let phi = 0.8;
        let plus = apply_rz(phi, 2.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let minus = apply_rz(-phi, 2.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let (ap, _) = basis.project_single(&plus.final_state).unwrap();
        let (am, _) = basis.project_single(&minus.final_state).unwrap();
        // phase-free conjugation: c₀·c₁* at −φ equals the conjugate at +φ
        let pair_plus = ap[0] * ap[1].conj();
        let pair_minus = am[0] * am[1].conj();
        assert!(
            (pair_minus - pair_plus.conj()).norm() < 1e-6,
            "pairing {pair_minus:?} vs conj {pair_plus:?}"
        );
        // the underlying parity symmetry swaps the components exactly
        assert!((am[0] - ap[1]).norm() < 1e-9);
        assert!((am[1] - ap[0]).norm() < 1e-9);
    }

    #[test]
    fn rx_zero_detuning_is_identity() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
        let psi_in = basis
            .embed_single([inv_sqrt2, I_UNIT * inv_sqrt2])
            .unwrap();
        let res = apply_rx(0.0, 10.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let f = res.final_state.fidelity(&psi_in).unwrap();
        assert!(f > 1.0 - 1e-8, "identity fidelity deficit {}", 1.0 - f);
        // parity is conserved whenever the drive is absent
        assert!(res.parity_change() < 1e-8);
    }

    #[test]
    fn rx_detuning_pulse_realizes_a_rotation() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
        let psi_in = basis
            .embed_single([inv_sqrt2, I_UNIT * inv_sqrt2])
            .unwrap();
        let res = apply_rx(1.0, 10.0, &params, &psi_in, DEFAULT_STEP).unwrap();
        let (theta, f) = extract_theta(&res.final_state, &psi_in, &basis).unwrap();
        assert!(theta < -0.05, "detuning pulse should rotate, theta {theta}");
        assert!(f >= 0.98, "Rx fidelity {f}");
    }

    #[test]
    fn zz_protocol_entangles_with_the_right_phases() {
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let plus = basis.plus_state();
        let psi_in = plus.tensor(&plus).unwrap();

        let theta = PI / 2.0;
        let res = apply_zz(theta, 2.0, &params, &params, &psi_in, DEFAULT_STEP).unwrap();
        let ideal = basis
            .apply_ideal_pair(&ideal_gate(GateKind::Zz, theta).unwrap(), &psi_in)
            .unwrap();
        let f = res.final_state.fidelity(&ideal).unwrap();
        assert!(f >= 0.98, "U(π/2) fidelity {f}");

        let trivial = apply_zz(0.0, 2.0, &params, &params, &psi_in, DEFAULT_STEP).unwrap();
        let f0 = trivial.final_state.fidelity(&psi_in).unwrap();
        assert!(f0 > 1.0 - 1e-10, "theta=0 fidelity deficit {}", 1.0 - f0);
    }

    #[test]
    fn init_ramp_shape_and_quench_limit() {
        let ramp = init_ramp(4.0, 100.0);
        assert!(ramp.eval(0.0).unwrap().abs() < 1e-12);
        assert!((ramp.eval(100.0).unwrap() - 4.0).abs() < 1e-12);
        // zero slope at the endpoint: the envelope flattens into p₀
        let near_end = ramp.eval(99.9).unwrap();
        assert!((near_end - 4.0).abs() < 1e-4);

        // instantaneous quench leaves the vacuum: F(|0⟩, |C₊⟩) from the
        // closed-form overlap ⟨0|C₊⟩ = 2e^(−p/2K)/√(2(1+e^(−2p/K)))
        let vac = StateVector::vacuum(Dims::single_for(20));
        let cat = cat_state(c(2.0), Parity::Even, 20).unwrap();
        let f = fidelity(&vac, &cat).unwrap();
        let expect = 4.0 * (-4.0f64).exp() / (2.0 * (1.0 + (-8.0f64).exp()));
        assert!((f - expect).abs() < 1e-9, "quench fidelity {f} vs {expect}");
    }

    #[test]
    fn initialization_reaches_the_even_cat() {
        let params = operating_params();
        let t_init = 20.0;
        let res = initialize_qubit(&params, t_init, init_ramp(4.0, t_init), DEFAULT_STEP).unwrap();
        assert!(res.cat_fidelity > 0.99, "cat fidelity {}", res.cat_fidelity);
        // H₁ preserves the parity of the vacuum along the whole ramp
        assert!(res.sim.parity_change() < 1e-8);
    }

    #[test]
    fn rx_protocol_records_its_detuning_peak() {
        let params = operating_params();
        let proto = GateProtocol::rx(1.75, 10.0, &params).unwrap();
        assert_eq!(proto.angle, proto.schedule.amplitude());
        assert_eq!(proto.schedule.kind(), crate::hamiltonian::PulseKind::SineSquared);
    }

    #[test]
    fn protocol_constructors_validate_inputs() {
        let params = operating_params();
        let detuned = KpoParams::new(1.0, 4.0, 0.3, 20).unwrap();
        assert!(GateProtocol::rz(1.0, 2.0, &detuned).is_err());
        assert!(GateProtocol::rx(-0.5, 10.0, &params).is_err());

        let other = KpoParams::at_pump(2.0, 20).unwrap();
        assert!(GateProtocol::zz(1.0, 2.0, &params, &other).is_err());

        // ramp that fails to reach p0
        let bad_ramp = PulseSchedule::linear_ramp(3.0, 10.0);
        assert!(GateProtocol::init(&params, 10.0, bad_ramp).is_err());
    }

    #[test]
    fn gate_set_generates_entanglement() {
        // H-like composite from R_z and R_x on each qubit, then one U(π/2):
        // the projected two-qubit state must have two sizable Schmidt
        // coefficients, witnessing entanglement beyond single-qubit action.
        let params = operating_params();
        let basis = QubitBasis::from_params(&params).unwrap();
        let step = DEFAULT_STEP;

        // calibrate a detuning peak whose rotation angle is nearest −π/2
        let probe_in = basis
            .embed_single([c(1.0 / 2.0f64.sqrt()), I_UNIT * c(1.0 / 2.0f64.sqrt())])
            .unwrap();
        let mut best = (f64::MAX, 0.0);
        for delta0 in [0.75, 1.0, 1.25, 1.5, 1.75, 2.0] {
            let res = apply_rx(delta0, 10.0, &params, &probe_in, step).unwrap();
            let (theta, _) = extract_theta(&res.final_state, &probe_in, &basis).unwrap();
            let miss = (theta + PI / 2.0).abs();
            if miss < best.0 {
                best = (miss, delta0);
            }
        }
        let delta0 = best.1;

        // single-qubit composite |0̄⟩ → R_z(π/2)·R_x(θ*)·R_z(π/2)|0̄⟩
        let one_qubit = {
            let s1 = apply_rz(PI / 2.0, 2.0, &params, basis.zero_bar(), step).unwrap();
            let s2 = apply_rx(delta0, 10.0, &params, &s1.final_state, step).unwrap();
            let s3 = apply_rz(PI / 2.0, 2.0, &params, &s2.final_state, step).unwrap();
            s3.final_state
        };

        let joint = one_qubit.tensor(&one_qubit).unwrap();
        let res = apply_zz(PI / 2.0, 2.0, &params, &params, &joint, step).unwrap();
        let (amps, _) = basis.project_pair(&res.final_state).unwrap();

        // Schmidt coefficients of the 2×2 amplitude matrix
        let m00 = amps[0];
        let m01 = amps[1];
        let m10 = amps[2];
        let m11 = amps[3];
        let trace = amps.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let det = (m00 * m11 - m01 * m10).norm();
        let disc = (trace * trace - 4.0 * det * det).max(0.0).sqrt();
        let s1 = ((trace + disc) / 2.0).sqrt();
        let s2 = ((trace - disc) / 2.0).sqrt();
        assert!(
            s1 > 0.1 && s2 > 0.1,
            "Schmidt coefficients {s1:.3}, {s2:.3} (delta0 {delta0})"
        );
    }
}
