//! Deterministic simulator for qubits encoded in Kerr-nonlinear parametric
//! oscillators (KPOs).
//!
//! A KPO pumped above its bifurcation threshold holds two stable coherent
//! states |±α₀⟩ with α₀ = √(p₀/K); these serve as the computational basis
//! states |0̄⟩ and |1̄⟩ of a qubit. This crate simulates that encoding in a
//! truncated Fock space:
//!
//! - [`fock`] — states, operators, tensor products, fidelity, parity, and
//!   Wigner functions on one or two truncated oscillators;
//! - [`hamiltonian`] — the KPO Hamiltonian, drive/coupling terms, and the
//!   pulse schedules that steer them;
//! - [`evolve`] — fixed-step RK4 integration of iψ̇ = H(t)ψ plus an
//!   independent piecewise-exponential reference propagator;
//! - [`gates`] — adiabatic initialization and the R_z(φ), R_x(θ), ZZ(Θ)
//!   gate protocols, with projection onto the qubit subspace;
//! - [`experiments`] — config-driven fidelity sweeps with CSV output,
//!   backing the `kpo-sim` command-line tool.
//!
//! Throughout the crate ħ = 1 and the Kerr coefficient K = 1, so rates are
//! in units of K and times in units of 1/K.

pub mod evolve;
pub mod experiments;
pub mod fock;
pub mod gates;
pub mod hamiltonian;
pub mod linalg;

pub use evolve::{integrate, propagate_reference, SimResult, TimeDependentHamiltonian};
pub use fock::{
    annihilation_operator, cat_state, coherent_state, creation_operator, fidelity,
    number_operator, parity_operator, wigner, Dims, Operator, Parity, StateVector, WignerGrid,
    WignerMap,
};
pub use gates::{
    apply_rx, apply_rz, apply_zz, extract_theta, ideal_gate, init_ramp, initialize_qubit,
    project_to_qubit, GateKind, GateProtocol, InitResult, QubitBasis,
};
pub use hamiltonian::{
    coupling_hamiltonian, drive_hamiltonian, kpo_hamiltonian, KpoParams, PulseKind, PulseSchedule,
};

/// Default integrator step in units of 1/K.
pub const DEFAULT_STEP: f64 = 1e-3;

/// Default Fock-space truncation (levels 0..=N_MAX per oscillator).
pub const DEFAULT_N_MAX: usize = 20;

/// Errors produced by construction, integration, and sweep operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("state is numerically zero: {0}")]
    ZeroState(String),
    #[error("invalid state or parameters: {0}")]
    InvalidInput(String),
    #[error("time {t} outside schedule domain [0, {duration}]")]
    ScheduleOutOfRange { t: f64, duration: f64 },
    #[error("integration diverged: norm drift {drift:.3e} exceeds 1e-6; reduce the step size")]
    IntegrationDiverged { drift: f64 },
    #[error("rotation angle unidentifiable: {0}")]
    UnidentifiableAngle(String),
    #[error(
        "angle extraction mismatch: projection gives {projected} rad, \
         fidelity search gives {searched} rad"
    )]
    AngleMismatch { projected: f64, searched: f64 },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
