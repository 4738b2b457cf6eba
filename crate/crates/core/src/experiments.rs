//! Config-driven fidelity sweeps with deterministic CSV output.
//!
//! Each sweep runs one gate protocol across a grid of angles (or detuning
//! peaks, or ramp durations), one independent simulation per row. Rows are
//! computed in parallel and written in grid order, so the output bytes do
//! not depend on the worker count. Config files are flat `key = value`
//! text; see [`SweepConfig`].

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::fock::{cat_state, fmt_sig9, wigner, Parity, StateVector, WignerGrid, WignerMap};
use crate::gates::{
    apply_rx, apply_rz, apply_zz, extract_theta, ideal_gate, init_ramp, initialize_qubit,
    GateKind, QubitBasis,
};
use crate::hamiltonian::KpoParams;
use crate::{Error, Result};

#[inline]
fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Which experiment a config drives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentKind {
    RzSweep,
    RxSweep,
    ZzSweep,
    InitCheck,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::RzSweep => "rz_sweep",
            ExperimentKind::RxSweep => "rx_sweep",
            ExperimentKind::ZzSweep => "zz_sweep",
            ExperimentKind::InitCheck => "init_check",
        }
    }

    fn from_name(s: &str) -> Result<Self> {
        match s {
            "rz_sweep" => Ok(ExperimentKind::RzSweep),
            "rx_sweep" => Ok(ExperimentKind::RxSweep),
            "zz_sweep" => Ok(ExperimentKind::ZzSweep),
            "init_check" => Ok(ExperimentKind::InitCheck),
            other => Err(Error::Config(format!("unknown experiment '{other}'"))),
        }
    }
}

/// Sweep parameters: grid, physics, integrator, and output policy.
///
/// # Config file format
///
/// Flat `key = value` lines, `#` comments, unknown keys rejected:
///
/// ```text
/// experiment  = rz_sweep       # rz_sweep | rx_sweep | zz_sweep | init_check
/// grid_start  = -3.141592653589793
/// grid_stop   = 3.141592653589793
/// grid_count  = 41
/// grid_values = 5, 10, 20, 50, 100   # optional, overrides start/stop/count
/// p0_over_k   = 4.0            # operating pump p0/K
/// tg_k        = 2.0            # gate time, units 1/K
/// n_max       = 20             # Fock truncation per oscillator
/// step_k      = 0.001          # RK4 step, units 1/K
/// t_init_k    = 100.0          # initialization ramp length, units 1/K
/// workers     = 0              # sweep worker threads, 0 = default
/// out         = rz.csv         # optional output path (stdout when absent)
/// wigner      = false          # init_check: dump a Wigner map of the final state
/// wigner_extent = 6.0
/// wigner_step = 0.1
/// strict      = false          # escalate range warnings to errors
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub experiment: ExperimentKind,
    pub grid_start: f64,
    pub grid_stop: f64,
    pub grid_count: usize,
    /// Explicit grid values; overrides start/stop/count when present.
    pub grid_values: Option<Vec<f64>>,
    pub p0_over_k: f64,
    pub tg_k: f64,
    pub n_max: usize,
    pub step_k: f64,
    pub t_init_k: f64,
    pub workers: usize,
    /// Output CSV path; None writes to stdout.
    pub out: Option<String>,
    pub wigner: bool,
    pub wigner_extent: f64,
    pub wigner_step: f64,
    pub strict: bool,
}

impl SweepConfig {
    /// Standard defaults for each experiment (p₀ = 4K, n_max = 20).
    pub fn default_for(kind: ExperimentKind) -> Self {
        let (grid_start, grid_stop, grid_count, grid_values, tg_k) = match kind {
            ExperimentKind::RzSweep => (-PI, PI, 41, None, 2.0),
            ExperimentKind::RxSweep => (0.0, 2.5, 26, None, 10.0),
            ExperimentKind::ZzSweep => (0.0, PI, 33, None, 2.0),
            ExperimentKind::InitCheck => (
                5.0,
                100.0,
                5,
                Some(vec![5.0, 10.0, 20.0, 50.0, 100.0]),
                2.0,
            ),
        };
        SweepConfig {
            experiment: kind,
            grid_start,
            grid_stop,
            grid_count,
            grid_values,
            p0_over_k: 4.0,
            tg_k,
            n_max: crate::DEFAULT_N_MAX,
            step_k: crate::DEFAULT_STEP,
            t_init_k: 100.0,
            workers: 0,
            out: None,
            wigner: false,
            wigner_extent: 6.0,
            wigner_step: 0.1,
            strict: false,
        }
    }

    /// Parse the flat key=value format. Every field is optional except
    /// `experiment`; omitted keys take the experiment's defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected 'key = value'", lineno + 1))
            })?;
            pairs.push((key.trim().to_string(), value.trim().to_string()));
        }
        let experiment = pairs
            .iter()
            .find(|(k, _)| k == "experiment")
            .map(|(_, v)| ExperimentKind::from_name(v))
            .transpose()?
            .ok_or_else(|| Error::Config("missing 'experiment' key".into()))?;

        let mut cfg = SweepConfig::default_for(experiment);
        for (key, value) in &pairs {
            let parse_f64 = || -> Result<f64> {
                value
                    .parse()
                    .map_err(|_| Error::Config(format!("bad number for '{key}': '{value}'")))
            };
            let parse_usize = || -> Result<usize> {
                value
                    .parse()
                    .map_err(|_| Error::Config(format!("bad integer for '{key}': '{value}'")))
            };
            let parse_bool = || -> Result<bool> {
                match value.as_str() {
                    "true" => Ok(true),
                    "false" => Ok(false),
                    _ => Err(Error::Config(format!(
                        "bad boolean for '{key}': '{value}'"
                    ))),
                }
            };
            match key.as_str() {
                "experiment" => {}
                "grid_start" => cfg.grid_start = parse_f64()?,
                "grid_stop" => cfg.grid_stop = parse_f64()?,
                "grid_count" => cfg.grid_count = parse_usize()?,
                "grid_values" => {
                    let vals = value
                        .split(',')
                        .map(|s| {
                            s.trim().parse::<f64>().map_err(|_| {
                                Error::Config(format!("bad grid value '{}'", s.trim()))
                            })
                        })
                        .collect::<Result<Vec<f64>>>()?;
                    cfg.grid_values = Some(vals);
                }
                "p0_over_k" => cfg.p0_over_k = parse_f64()?,
                "tg_k" => cfg.tg_k = parse_f64()?,
                "n_max" => cfg.n_max = parse_usize()?,
                "step_k" => cfg.step_k = parse_f64()?,
                "t_init_k" => cfg.t_init_k = parse_f64()?,
                "workers" => cfg.workers = parse_usize()?,
                "out" => cfg.out = Some(value.clone()),
                "wigner" => cfg.wigner = parse_bool()?,
                "wigner_extent" => cfg.wigner_extent = parse_f64()?,
                "wigner_step" => cfg.wigner_step = parse_f64()?,
                "strict" => cfg.strict = parse_bool()?,
                other => {
                    return Err(Error::Config(format!("unknown config key '{other}'")));
                }
            }
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Serialize in the config-file format; `parse` round-trips this
    /// losslessly (floats use the shortest exact representation).
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(" = ");
            s.push_str(&v);
            s.push('\n');
        };
        kv("experiment", self.experiment.name().into());
        kv("grid_start", format!("{:?}", self.grid_start));
        kv("grid_stop", format!("{:?}", self.grid_stop));
        kv("grid_count", self.grid_count.to_string());
        if let Some(values) = &self.grid_values {
            let joined = values
                .iter()
                .map(|v| format!("{v:?}"))
                .collect::<Vec<_>>()
                .join(", ");
            kv("grid_values", joined);
        }
        kv("p0_over_k", format!("{:?}", self.p0_over_k));
        kv("tg_k", format!("{:?}", self.tg_k));
        kv("n_max", self.n_max.to_string());
        kv("step_k", format!("{:?}", self.step_k));
        kv("t_init_k", format!("{:?}", self.t_init_k));
        kv("workers", self.workers.to_string());
        if let Some(out) = &self.out {
            kv("out", out.clone());
        }
        kv("wigner", self.wigner.to_string());
        kv("wigner_extent", format!("{:?}", self.wigner_extent));
        kv("wigner_step", format!("{:?}", self.wigner_step));
        kv("strict", self.strict.to_string());
        s
    }

    /// The sweep grid: explicit values, or a uniform grid over
    /// [start, stop] with `count` points.
    pub fn grid(&self) -> Vec<f64> {
        if let Some(values) = &self.grid_values {
            return values.clone();
        }
        let n = self.grid_count;
        (0..n)
            .map(|i| {
                self.grid_start
                    + (self.grid_stop - self.grid_start) * (i as f64 / (n - 1) as f64)
            })
            .collect()
    }

    /// Check hard invariants and collect range warnings. With
    /// `strict = true`, any warning becomes an error.
    pub fn validate(&self) -> Result<Vec<String>> {
        if self.grid().len() < 2 {
            return Err(Error::Config("grid needs at least 2 points".into()));
        }
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.tg_k) || !positive(self.t_init_k) || !positive(self.step_k) {
            return Err(Error::Config(
                "tg_k, t_init_k and step_k must all be positive".into(),
            ));
        }
        if !positive(self.p0_over_k) {
            return Err(Error::Config("p0_over_k must be positive".into()));
        }
        if self.n_max < 1 {
            return Err(Error::Config("n_max must be at least 1".into()));
        }
        if !positive(self.wigner_extent) || !positive(self.wigner_step) {
            return Err(Error::Config(
                "wigner_extent and wigner_step must be positive".into(),
            ));
        }

        let mut warnings = Vec::new();
        let (lo, hi, what) = match self.experiment {
            ExperimentKind::RzSweep => (-PI - 1e-9, PI + 1e-9, "phi in [-pi, pi]"),
            ExperimentKind::RxSweep => (-1e-12, 2.5 + 1e-9, "delta0/K in [0, 2.5]"),
            ExperimentKind::ZzSweep => (-1e-12, PI + 1e-9, "Theta in [0, pi]"),
            ExperimentKind::InitCheck => (1.0, 200.0, "t_init*K in [1, 200]"),
        };
        for v in self.grid() {
            if v < lo || v > hi {
                warnings.push(format!(
                    "grid value {v} outside the tested range ({what})"
                ));
            }
        }
        if self.n_max < 10 || self.n_max > 48 {
            warnings.push(format!("n_max = {} outside the tested 10..=48", self.n_max));
        }
        let alpha = self.p0_over_k.sqrt();
        if self.p0_over_k * 1.0 + 6.0 * alpha > self.n_max as f64 {
            warnings.push(format!(
                "truncation n_max = {} is tight for p0/K = {} (want |alpha|^2 + 6|alpha| <= n_max)",
                self.n_max, self.p0_over_k
            ));
        }
        if self.step_k > 0.005 {
            warnings.push(format!(
                "step_k = {} is coarse; the protocols are validated at 0.001",
                self.step_k
            ));
        }

        if self.strict && !warnings.is_empty() {
            return Err(Error::Config(format!(
                "strict mode: {}",
                warnings.join("; ")
            )));
        }
        Ok(warnings)
    }

    fn params(&self) -> Result<KpoParams> {
        KpoParams::new(1.0, self.p0_over_k, 0.0, self.n_max)
    }
}

/// One row of an R_z sweep.
#[derive(Clone, Copy, Debug)]
pub struct RzRow {
    pub phi: f64,
    pub fidelity: f64,
    pub leakage: f64,
    pub norm_drift: f64,
}

/// One row of an R_x sweep.
#[derive(Clone, Copy, Debug)]
pub struct RxRow {
    pub delta0_over_k: f64,
    pub theta: f64,
    pub fidelity: f64,
    pub leakage: f64,
}

/// One row of a ZZ sweep.
#[derive(Clone, Copy, Debug)]
pub struct ZzRow {
    pub theta_zz: f64,
    pub fidelity: f64,
    pub leakage: f64,
}

/// One row of an initialization check.
#[derive(Clone, Copy, Debug)]
pub struct InitRow {
    pub t_init_k: f64,
    pub fidelity: f64,
    pub parity: f64,
}

fn run_rows<T: Send, F: Fn(f64) -> Result<T> + Sync>(
    cfg: &SweepConfig,
    row: F,
    on_error: impl Fn(f64) -> T + Sync,
) -> Result<Vec<T>> {
    let grid = cfg.grid();
    let compute = || {
        grid.par_iter()
            .map(|&v| match row(v) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("warning: sweep row at {v} failed: {e}");
                    on_error(v)
                }
            })
            .collect::<Vec<T>>()
    };
    if cfg.workers == 0 {
        Ok(compute())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
        Ok(pool.install(compute))
    }
}

/// R_z(φ) on (|0̄⟩+|1̄⟩)/√2 across the angle grid, fidelity against
/// (e^(−iφ/2)|0̄⟩ + e^(iφ/2)|1̄⟩)/√2.
pub fn run_rz_sweep(cfg: &SweepConfig) -> Result<Vec<RzRow>> {
    cfg.validate()?;
    let params = cfg.params()?;
    let basis = QubitBasis::from_params(&params)?;
    let psi_in = basis.plus_state();
    let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
    run_rows(
        cfg,
        |phi| {
            let res = apply_rz(phi, cfg.tg_k, &params, &psi_in, cfg.step_k)?;
            let ideal = basis.embed_single([
                Complex64::from_polar(1.0, -phi / 2.0) * inv_sqrt2,
                Complex64::from_polar(1.0, phi / 2.0) * inv_sqrt2,
            ])?;
            Ok(RzRow {
                phi,
                fidelity: res.final_state.fidelity(&ideal)?,
                leakage: res.leakage,
                norm_drift: res.norm_drift,
            })
        },
        |phi| RzRow {
            phi,
            fidelity: f64::NAN,
            leakage: f64::NAN,
            norm_drift: f64::NAN,
        },
    )
}

/// Detuning pulses on (|0̄⟩+i|1̄⟩)/√2 across the Δ₀ grid, reporting the
/// extracted rotation angle θ(Δ₀) and the maximized fidelity.
pub fn run_rx_sweep(cfg: &SweepConfig) -> Result<Vec<RxRow>> {
    cfg.validate()?;
    let params = cfg.params()?;
    let basis = QubitBasis::from_params(&params)?;
    let inv_sqrt2 = c(1.0 / 2.0f64.sqrt());
    let psi_in = basis.embed_single([
        inv_sqrt2,
        Complex64::new(0.0, 1.0) * inv_sqrt2,
    ])?;
    run_rows(
        cfg,
        |delta0| {
            let res = apply_rx(delta0, cfg.tg_k, &params, &psi_in, cfg.step_k)?;
            let (theta, fidelity) = extract_theta(&res.final_state, &psi_in, &basis)?;
            Ok(RxRow {
                delta0_over_k: delta0,
                theta,
                fidelity,
                leakage: res.leakage,
            })
        },
        |delta0| RxRow {
            delta0_over_k: delta0,
            theta: f64::NAN,
            fidelity: f64::NAN,
            leakage: f64::NAN,
        },
    )
}

/// U(Θ) on the product of plus states across the angle grid, fidelity
/// against the ideal diagonal-phase output.
pub fn run_zz_sweep(cfg: &SweepConfig) -> Result<Vec<ZzRow>> {
    cfg.validate()?;
    let params = cfg.params()?;
    let basis = QubitBasis::from_params(&params)?;
    let plus = basis.plus_state();
    let psi_in = plus.tensor(&plus)?;
    run_rows(
        cfg,
        |theta| {
            let res = apply_zz(theta, cfg.tg_k, &params, &params, &psi_in, cfg.step_k)?;
            let ideal = basis.apply_ideal_pair(&ideal_gate(GateKind::Zz, theta)?, &psi_in)?;
            Ok(ZzRow {
                theta_zz: theta,
                fidelity: res.final_state.fidelity(&ideal)?,
                leakage: res.leakage,
            })
        },
        |theta| ZzRow {
            theta_zz: theta,
            fidelity: f64::NAN,
            leakage: f64::NAN,
        },
    )
}

/// Initialization check over a grid of ramp durations; optionally returns
/// the Wigner map of the final state of the last (longest) row.
pub fn run_init_check(cfg: &SweepConfig) -> Result<(Vec<InitRow>, Option<WignerMap>)> {
    cfg.validate()?;
    let params = cfg.params()?;
    let rows = run_rows(
        cfg,
        |t_init| {
            let res = initialize_qubit(
                &params,
                t_init,
                init_ramp(params.pump, t_init),
                cfg.step_k,
            )?;
            let parity = res
                .sim
                .parity_trace
                .last()
                .map(|&(_, p)| p)
                .unwrap_or(f64::NAN);
            Ok((res, t_init, parity))
        },
        |t_init| {
            (
                // placeholder carrying NaNs; unwrapped below
                crate::gates::InitResult {
                    sim: crate::evolve::SimResult {
                        final_state: StateVector::vacuum(crate::fock::Dims::single_for(
                            cfg.n_max,
                        )),
                        norm_drift: f64::NAN,
                        leakage: f64::NAN,
                        parity_trace: Vec::new(),
                        steps: 0,
                        samples: None,
                    },
                    cat_fidelity: f64::NAN,
                },
                t_init,
                f64::NAN,
            )
        },
    )?;

    let map = if cfg.wigner {
        let (last, t_init, _) = rows.last().expect("grid has at least 2 points");
        if last.cat_fidelity.is_nan() {
            eprintln!("warning: skipping Wigner dump, the t_init={t_init} row failed");
            None
        } else {
            let grid = WignerGrid::centered(cfg.wigner_extent, cfg.wigner_step)?;
            Some(wigner(&last.sim.final_state, &grid)?)
        }
    } else {
        None
    };

    let out = rows
        .iter()
        .map(|(res, t_init, parity)| InitRow {
            t_init_k: *t_init,
            fidelity: res.cat_fidelity,
            parity: *parity,
        })
        .collect();
    Ok((out, map))
}

/// Wigner map of the ideal even cat at the config's operating point
/// (the `wigner` CLI subcommand).
pub fn run_wigner_map(cfg: &SweepConfig) -> Result<WignerMap> {
    let alpha = cfg.p0_over_k.sqrt();
    let cat = cat_state(c(alpha), Parity::Even, cfg.n_max)?;
    let grid = WignerGrid::centered(cfg.wigner_extent, cfg.wigner_step)?;
    wigner(&cat, &grid)
}

fn header_common(cfg: &SweepConfig, w: &mut String) {
    use std::fmt::Write as _;
    let _ = writeln!(w, "# experiment={}", cfg.experiment.name());
    let _ = writeln!(w, "# version={}", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(w, "# kerr_k=1");
    let _ = writeln!(w, "# p0_over_k={}", fmt_sig9(cfg.p0_over_k));
    let _ = writeln!(w, "# n_max={}", cfg.n_max);
    let _ = writeln!(w, "# step_k={}", fmt_sig9(cfg.step_k));
    let _ = writeln!(
        w,
        "# basis=orthonormal cat pair; |0bar>,|1bar> = (|C+> +- |C->)/sqrt(2)"
    );
    let _ = writeln!(
        w,
        "# fidelity=full Fock-space state fidelity vs the ideal gate embedded in the cat basis"
    );
}

/// Render an R_z sweep as CSV text (header block plus data rows).
pub fn render_rz_csv(cfg: &SweepConfig, rows: &[RzRow]) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    header_common(cfg, &mut s);
    let _ = writeln!(s, "# tg_k={}", fmt_sig9(cfg.tg_k));
    let _ = writeln!(s, "# columns=phi,fidelity,leakage,norm_drift");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            fmt_sig9(r.phi),
            fmt_sig9(r.fidelity),
            fmt_sig9(r.leakage),
            fmt_sig9(r.norm_drift)
        );
    }
    s
}

/// Render an R_x sweep as CSV text.
pub fn render_rx_csv(cfg: &SweepConfig, rows: &[RxRow]) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    header_common(cfg, &mut s);
    let _ = writeln!(s, "# tg_k={}", fmt_sig9(cfg.tg_k));
    let _ = writeln!(s, "# theta_branch=(-2pi, 0]");
    let _ = writeln!(s, "# columns=delta0_over_k,theta,fidelity,leakage");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            fmt_sig9(r.delta0_over_k),
            fmt_sig9(r.theta),
            fmt_sig9(r.fidelity),
            fmt_sig9(r.leakage)
        );
    }
    s
}

/// Render a ZZ sweep as CSV text.
pub fn render_zz_csv(cfg: &SweepConfig, rows: &[ZzRow]) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    header_common(cfg, &mut s);
    let _ = writeln!(s, "# tg_k={}", fmt_sig9(cfg.tg_k));
    let _ = writeln!(s, "# columns=theta_zz,fidelity,leakage");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{}",
            fmt_sig9(r.theta_zz),
            fmt_sig9(r.fidelity),
            fmt_sig9(r.leakage)
        );
    }
    s
}

/// Render an initialization check as CSV text.
pub fn render_init_csv(cfg: &SweepConfig, rows: &[InitRow]) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    header_common(cfg, &mut s);
    let _ = writeln!(s, "# ramp=sine-squared half-window, 0 -> p0 over t_init");
    let _ = writeln!(s, "# columns=t_init_k,fidelity,parity");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{}",
            fmt_sig9(r.t_init_k),
            fmt_sig9(r.fidelity),
            fmt_sig9(r.parity)
        );
    }
    s
}

/// Wigner CSV metadata shared by the init-check side output and the
/// standalone `wigner` subcommand.
pub fn wigner_metadata(cfg: &SweepConfig, state: &str) -> Vec<(&'static str, String)> {
    vec![
        ("state", state.to_string()),
        ("version", env!("CARGO_PKG_VERSION").to_string()),
        ("p0_over_k", fmt_sig9(cfg.p0_over_k)),
        ("n_max", cfg.n_max.to_string()),
        (
            "convention",
            "W(beta)=(2/pi)<D(beta) P D(beta)^dag>; integral 1; vacuum peak 2/pi".to_string(),
        ),
    ]
}

/// Run the experiment named by the config and render its CSV; the
/// entry point behind the CLI subcommands.
pub fn run_to_csv(cfg: &SweepConfig) -> Result<(String, Option<String>)> {
    match cfg.experiment {
        ExperimentKind::RzSweep => {
            let rows = run_rz_sweep(cfg)?;
            Ok((render_rz_csv(cfg, &rows), None))
        }
        ExperimentKind::RxSweep => {
            let rows = run_rx_sweep(cfg)?;
            Ok((render_rx_csv(cfg, &rows), None))
        }
        ExperimentKind::ZzSweep => {
            let rows = run_zz_sweep(cfg)?;
            Ok((render_zz_csv(cfg, &rows), None))
        }
        ExperimentKind::InitCheck => {
            let (rows, map) = run_init_check(cfg)?;
            let wigner_csv = map
                .map(|m| {
                    let mut buf = Vec::new();
                    m.write_csv(&wigner_metadata(cfg, "init_final_state"), &mut buf)?;
                    Ok::<_, Error>(String::from_utf8(buf).expect("csv is utf-8"))
                })
                .transpose()?;
            Ok((render_init_csv(cfg, &rows), wigner_csv))
        }
    }
}
