//! `kpo-sim` — KPO cat-qubit gate sweeps from the command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use kpo_sim::experiments::{
    run_to_csv, run_wigner_map, wigner_metadata, ExperimentKind, SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "kpo-sim",
    version,
    about = "Kerr-parametric-oscillator cat-qubit simulator",
    long_about = "Simulates adiabatic initialization and the Rz/Rx/ZZ gate set of \
                  Kerr-parametric-oscillator cat qubits, sweeping gate parameters and \
                  writing per-row fidelities as CSV."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Initialization fidelity and parity across ramp durations
    InitCheck(RunArgs),
    /// R_z(phi) fidelity sweep
    RzSweep(RunArgs),
    /// Detuning-pulse sweep with rotation-angle extraction
    RxSweep(RunArgs),
    /// Two-qubit U(Theta) fidelity sweep
    ZzSweep(RunArgs),
    /// Wigner map of the even cat state at the operating point
    Wigner(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Flat key=value config file (defaults cover the standard experiments)
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output CSV path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads for sweep rows (0 = library default)
    #[arg(long)]
    workers: Option<usize>,

    /// Integrator step in units of 1/K
    #[arg(long)]
    step: Option<f64>,

    /// Fock truncation per oscillator
    #[arg(long)]
    nmax: Option<usize>,
}

fn load_config(args: &RunArgs, kind: Option<ExperimentKind>) -> kpo_sim::Result<SweepConfig> {
    let mut cfg = match (&args.config, kind) {
        (Some(path), _) => SweepConfig::from_file(path)?,
        (None, Some(kind)) => SweepConfig::default_for(kind),
        (None, None) => SweepConfig::default_for(ExperimentKind::InitCheck),
    };
    if let Some(kind) = kind {
        if args.config.is_some() && cfg.experiment != kind {
            return Err(kpo_sim::Error::Config(format!(
                "config is for '{}' but the subcommand runs '{}'",
                cfg.experiment.name(),
                kind.name()
            )));
        }
        cfg.experiment = kind;
    }
    if let Some(w) = args.workers {
        cfg.workers = w;
    }
    if let Some(s) = args.step {
        cfg.step_k = s;
    }
    if let Some(n) = args.nmax {
        cfg.n_max = n;
    }
    Ok(cfg)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> kpo_sim::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Side-output path for the init-check Wigner map: `<out>.wigner.csv`.
fn wigner_side_path(out: &std::path::Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".wigner.csv");
    PathBuf::from(name)
}

fn run(cli: Cli) -> kpo_sim::Result<()> {
    let (args, kind) = match &cli.command {
        Command::InitCheck(a) => (a, Some(ExperimentKind::InitCheck)),
        Command::RzSweep(a) => (a, Some(ExperimentKind::RzSweep)),
        Command::RxSweep(a) => (a, Some(ExperimentKind::RxSweep)),
        Command::ZzSweep(a) => (a, Some(ExperimentKind::ZzSweep)),
        Command::Wigner(a) => (a, None),
    };

    if let Command::Wigner(_) = &cli.command {
        let cfg = load_config(args, None)?;
        let out = args.out.clone().or_else(|| cfg.out.clone().map(Into::into));
        let map = run_wigner_map(&cfg)?;
        let mut buf = Vec::new();
        map.write_csv(&wigner_metadata(&cfg, "even_cat"), &mut buf)?;
        return write_output(&out, &String::from_utf8(buf).expect("csv is utf-8"));
    }

    let cfg = load_config(args, kind)?;
    for warning in cfg.validate()? {
        eprintln!("warning: {warning}");
    }
    let out = args.out.clone().or_else(|| cfg.out.clone().map(Into::into));
    let (csv, wigner_csv) = run_to_csv(&cfg)?;
    write_output(&out, &csv)?;
    if let Some(wigner_csv) = wigner_csv {
        match &out {
            Some(p) => std::fs::write(wigner_side_path(p), &wigner_csv)?,
            None => std::io::stdout().write_all(wigner_csv.as_bytes())?,
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
