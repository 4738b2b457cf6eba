//! KPO Hamiltonian terms and the pulse schedules that drive them.
//!
//! In the rotating frame (ħ = 1) a single KPO is
//!
//! ```text
//! H₁ = Δ·a†a + (K/2)·a†²a² − (p/2)·(a†² + a²)
//! ```
//!
//! with detuning Δ, Kerr coefficient K, and pump amplitude p. Gates add a
//! linear drive E(t)·(a + a†) or an exchange coupling g(t)·(a₁a₂† + a₁†a₂);
//! the time dependence always enters through a [`PulseSchedule`] so the
//! builders here stay stateless.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::fock::{annihilation_operator, number_operator, Dims, Operator};
use crate::{Error, Result};

#[inline]
fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Envelope shape of a scalar control parameter over a gate window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PulseKind {
    Constant,
    LinearRamp,
    Sine,
    SineSquared,
}

/// A scalar function of time on [0, T]:
///
/// - constant:     offset + A
/// - linear_ramp:  offset + A·t/T
/// - sine:         offset + A·sin(πt/T)
/// - sine_squared: offset + A·sin²(πt/T)
///
/// Sine and sine-squared envelopes vanish at both endpoints (the latter
/// with zero slope), which is what makes them adiabatic-friendly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PulseSchedule {
    kind: PulseKind,
    amplitude: f64,
    duration: f64,
    offset: f64,
}

impl PulseSchedule {
    pub fn new(kind: PulseKind, amplitude: f64, duration: f64) -> Self {
        assert!(
            duration > 0.0 && duration.is_finite(),
            "schedule duration must be positive"
        );
        PulseSchedule {
            kind,
            amplitude,
            duration,
            offset: 0.0,
        }
    }

    pub fn constant(amplitude: f64, duration: f64) -> Self {
        Self::new(PulseKind::Constant, amplitude, duration)
    }

    pub fn linear_ramp(amplitude: f64, duration: f64) -> Self {
        Self::new(PulseKind::LinearRamp, amplitude, duration)
    }

    pub fn sine(amplitude: f64, duration: f64) -> Self {
        Self::new(PulseKind::Sine, amplitude, duration)
    }

    pub fn sine_squared(amplitude: f64, duration: f64) -> Self {
        Self::new(PulseKind::SineSquared, amplitude, duration)
    }

    /// Add a constant baseline to the envelope.
    pub fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    pub fn kind(&self) -> PulseKind {
        self.kind
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Evaluate at time t ∈ [0, T]; out-of-range times are an error
    /// (a relative slack of 1e−9·T absorbs integrator endpoint rounding).
    pub fn eval(&self, t: f64) -> Result<f64> {
        let slack = 1e-9 * self.duration.max(1.0);
        if !t.is_finite() || t < -slack || t > self.duration + slack {
            return Err(Error::ScheduleOutOfRange {
                t,
                duration: self.duration,
            });
        }
        let t = t.clamp(0.0, self.duration);
        let shape = match self.kind {
            PulseKind::Constant => 1.0,
            PulseKind::LinearRamp => t / self.duration,
            PulseKind::Sine => (PI * t / self.duration).sin(),
            PulseKind::SineSquared => {
                let s = (PI * t / self.duration).sin();
                s * s
            }
        };
        Ok(self.offset + self.amplitude * shape)
    }
}

/// Physical parameters of one KPO (ħ = 1; rates in units of K).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KpoParams {
    /// Kerr coefficient K > 0.
    pub kerr: f64,
    /// Pump amplitude p ≥ 0.
    pub pump: f64,
    /// Detuning Δ ≥ 0.
    pub detuning: f64,
    /// Fock truncation: levels 0..=n_max are kept.
    pub n_max: usize,
}

impl KpoParams {
    pub fn new(kerr: f64, pump: f64, detuning: f64, n_max: usize) -> Result<Self> {
        if !kerr.is_finite() || kerr <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "Kerr coefficient must be positive, got {kerr}"
            )));
        }
        if detuning < 0.0 || !detuning.is_finite() {
            return Err(Error::InvalidInput(format!(
                "detuning must be nonnegative, got {detuning}"
            )));
        }
        if !pump.is_finite() || pump < 0.0 {
            return Err(Error::InvalidInput(format!(
                "pump amplitude must be nonnegative, got {pump}"
            )));
        }
        if n_max < 1 {
            return Err(Error::InvalidDimension(
                "truncation needs n_max >= 1".into(),
            ));
        }
        Ok(KpoParams {
            kerr,
            pump,
            detuning,
            n_max,
        })
    }

    /// K = 1 operating point at pump p₀ with zero detuning.
    pub fn at_pump(p0: f64, n_max: usize) -> Result<Self> {
        Self::new(1.0, p0, 0.0, n_max)
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }

    /// α₀ = √(p/K), the coherent amplitude of the bifurcated branches.
    pub fn branch_amplitude(&self) -> f64 {
        (self.pump / self.kerr).sqrt()
    }
}

/// H₁ = Δ·a†a + (K/2)·a†²a² − (p/2)·(a†² + a²).
///
/// Hermitian by construction and parity-symmetric (a → −a), so it never
/// mixes the even and odd cat sectors.
pub fn kpo_hamiltonian(params: &KpoParams) -> Result<Operator> {
    let a = annihilation_operator(params.n_max)?;
    let a2 = a.matmul(&a)?;
    let kerr = a2.adjoint().matmul(&a2)?;
    let pump = &a2.adjoint() + &a2;
    let n_op = number_operator(params.n_max)?;

    let h = &(&n_op.scaled(c(params.detuning)) + &kerr.scaled(c(params.kerr / 2.0)))
        - &pump.scaled(c(params.pump / 2.0));
    Ok(h)
}

/// Drive term H_z = E·(a + a†). Flips photon-number parity.
pub fn drive_hamiltonian(e_amp: f64, n_max: usize) -> Result<Operator> {
    let a = annihilation_operator(n_max)?;
    Ok((&a + &a.adjoint()).scaled(c(e_amp)))
}

/// Linear exchange coupling H_U = g·(a₁a₂† + a₁†a₂) on the joint space.
/// Conserves the total photon number N₁ + N₂.
pub fn coupling_hamiltonian(g: f64, n_max1: usize, n_max2: usize) -> Result<Operator> {
    let a1 = annihilation_operator(n_max1)?;
    let a2 = annihilation_operator(n_max2)?;
    let eye1 = Operator::identity(Dims::single_for(n_max1));
    let eye2 = Operator::identity(Dims::single_for(n_max2));
    let a1_joint = a1.tensor(&eye2)?;
    let a2_joint = eye1.tensor(&a2)?;
    let cross = a1_joint.matmul(&a2_joint.adjoint())?;
    Ok((&cross + &cross.adjoint()).scaled(c(g)))
}
