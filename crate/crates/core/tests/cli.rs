//! End-to-end checks of the `kpo-sim` binary: config files, CSV output,
//! exit codes, and cross-run determinism through the real executable.

use std::path::Path;
use std::process::Command;

fn kpo_sim() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kpo-sim"))
}

fn small_rz_config() -> String {
    [
        "experiment = rz_sweep",
        "grid_start = -1.0",
        "grid_stop = 1.0",
        "grid_count = 3",
        "p0_over_k = 2.0",
        "n_max = 12",
        "tg_k = 2.0",
    ]
    .join("\n")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn rz_sweep_writes_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("rz.cfg");
    let out = dir.path().join("rz.csv");
    std::fs::write(&config, small_rz_config()).unwrap();

    let status = kpo_sim()
        .args(["rz-sweep", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());

    let text = read(&out);
    assert!(text.contains("# experiment=rz_sweep"));
    assert!(text.contains("# columns=phi,fidelity,leakage,norm_drift"));
    let data_rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data_rows.len(), 3);
    for row in data_rows {
        assert_eq!(row.split(',').count(), 4);
    }
}

#[test]
fn sweeps_are_byte_identical_across_runs_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("rz.cfg");
    std::fs::write(&config, small_rz_config()).unwrap();

    let run = |workers: &str, out: &Path| {
        let status = kpo_sim()
            .args(["rz-sweep", "--workers", workers, "--config"])
            .arg(&config)
            .arg("--out")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    };
    let out1 = dir.path().join("a.csv");
    let out2 = dir.path().join("b.csv");
    let out3 = dir.path().join("c.csv");
    run("1", &out1);
    run("2", &out2);
    run("2", &out3);
    assert_eq!(read(&out1), read(&out2));
    assert_eq!(read(&out2), read(&out3));
}

#[test]
fn stdout_mode_and_flag_overrides() {
    let output = kpo_sim()
        .args([
            "wigner",
            "--nmax",
            "8",
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("# state=even_cat"));
    assert!(text.contains("# n_max=8"));
    assert!(text.lines().any(|l| l.starts_with("p\\x,")));
}

#[test]
fn init_check_emits_wigner_side_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("init.cfg");
    let out = dir.path().join("init.csv");
    std::fs::write(
        &config,
        [
            "experiment = init_check",
            "grid_values = 2.0, 4.0",
            "p0_over_k = 2.0",
            "n_max = 12",
            "wigner = true",
            "wigner_extent = 2.0",
            "wigner_step = 0.5",
        ]
        .join("\n"),
    )
    .unwrap();

    let status = kpo_sim()
        .args(["init-check", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(read(&out).contains("# columns=t_init_k,fidelity,parity"));

    let side = dir.path().join("init.csv.wigner.csv");
    let wigner_text = read(&side);
    assert!(wigner_text.contains("# state=init_final_state"));
    assert!(wigner_text.contains("vacuum peak 2/pi"));
}

#[test]
fn validation_and_io_failures_exit_nonzero() {
    // config/subcommand mismatch
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("rz.cfg");
    std::fs::write(&config, small_rz_config()).unwrap();
    let output = kpo_sim()
        .args(["zz-sweep", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(!output.status.success());
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("error:"), "stderr was: {stderr}");

    // strict mode escalates a range warning to an error
    let strict_cfg = dir.path().join("strict.cfg");
    std::fs::write(
        &strict_cfg,
        [
            "experiment = rz_sweep",
            "grid_start = -6.5", // outside the tested [-pi, pi]
            "grid_stop = 6.5",
            "grid_count = 3",
            "n_max = 12",
            "p0_over_k = 2.0",
            "strict = true",
        ]
        .join("\n"),
    )
    .unwrap();
    let output = kpo_sim()
        .args(["rz-sweep", "--config"])
        .arg(&strict_cfg)
        .output()
        .unwrap();
    assert!(!output.status.success());

    // unreadable config path
    let output = kpo_sim()
        .args(["rz-sweep", "--config", "/nonexistent/path.cfg"])
        .output()
        .unwrap();
    assert!(!output.status.success());

    // unknown key
    let bad_cfg = dir.path().join("bad.cfg");
    std::fs::write(&bad_cfg, "experiment = rz_sweep\nturbo = yes\n").unwrap();
    let output = kpo_sim()
        .args(["rz-sweep", "--config"])
        .arg(&bad_cfg)
        .output()
        .unwrap();
    assert!(!output.status.success());
}
