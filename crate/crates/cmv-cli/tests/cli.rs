//! End-to-end runs of the `cmv` binary: exit codes, report layout, and
//! reproducibility of the output bytes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn cmv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const COMMON_NOISE: &str = r#"{
    "seed": 4242,
    "family": {"kind": "common_noise", "a": -0.5, "a_bar": 0.2, "sigma": 1.0, "rho": 0.4},
    "n_particles": 64,
    "t_horizon": 0.2,
    "dt": 0.01,
    "m_y": 30,
    "basis_size": 6
}"#;

#[test]
fn config_errors_exit_2_and_point_at_the_problem() {
    let dir = tempfile::tempdir().unwrap();
    let missing_seed = write_config(
        dir.path(),
        "no_seed.json",
        r#"{"family": {"kind": "common_noise", "a": 0.0, "a_bar": 0.0, "sigma": 1.0, "rho": 0.0},
            "n_particles": 16, "t_horizon": 0.1, "dt": 0.01}"#,
    );
    let out = cmv(&[
        "simulate",
        "--config",
        missing_seed.to_str().unwrap(),
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("seed"), "stderr names the field: {stderr}");

    let malformed = write_config(dir.path(), "broken.json", "{\n  \"seed\": 1,\n");
    let out = cmv(&["simulate", "--config", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("line"),
        "stderr points at the line: {stderr}"
    );
}

#[test]
fn common_noise_ks_and_martingale_pass_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "config.json", COMMON_NOISE);
    let out_dir = dir.path().join("out");
    let out = cmv(&[
        "verify",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--check",
        "ks,martingale",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let summary: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(out_dir.join("verify_summary.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(summary["overall_pass"], serde_json::json!(true));

    // with no sensor the mass is identically one: the statistics are exact
    let martingale: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(out_dir.join("verify_martingale.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(martingale["report"]["mean"], serde_json::json!(1.0));
    assert_eq!(martingale["report"]["z_score"], serde_json::json!(0.0));
}

#[test]
fn verify_refuses_mixed_report_directories() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "config.json", COMMON_NOISE);
    let other = write_config(
        dir.path(),
        "other.json",
        &COMMON_NOISE.replace("\"seed\": 4242", "\"seed\": 4243"),
    );
    let out_dir = dir.path().join("out");

    let first = cmv(&[
        "verify",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--check",
        "ks",
    ]);
    assert_eq!(first.status.code(), Some(0));

    let second = cmv(&[
        "verify",
        "--config",
        other.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--check",
        "ks",
    ]);
    assert_eq!(second.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&second.stderr);
    assert!(stderr.contains("refusing to mix"), "stderr: {stderr}");
}

#[test]
fn check_selection_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "config.json", COMMON_NOISE);

    let unknown = cmv(&[
        "verify",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.path().join("a").to_str().unwrap(),
        "--check",
        "zakai,bogus",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("bogus"));

    // no --check and no `checks` in the config
    let empty = cmv(&[
        "verify",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.path().join("b").to_str().unwrap(),
    ]);
    assert_eq!(empty.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&empty.stderr).contains("no checks selected"));
}

#[test]
fn oracle_requires_a_linear_family() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "tanh.json",
        r#"{
            "seed": 7,
            "family": {"kind": "bounded_smooth", "drift_gain": 0.5, "mean_gain": 0.3,
                       "sigma": 1.0, "rho": 0.2, "obs_gain": 0.5},
            "n_particles": 32,
            "t_horizon": 0.1,
            "dt": 0.01
        }"#,
    );
    let out = cmv(&[
        "oracle",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("linear"));
}

#[test]
fn simulate_outputs_are_stamped_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "config.json", COMMON_NOISE);
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));

    for out_dir in [&a, &b] {
        let run = cmv(&[
            "simulate",
            "--config",
            config.to_str().unwrap(),
            "--out",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(run.status.code(), Some(0));
    }
    let csv_a = std::fs::read(a.join("trajectory.csv")).unwrap();
    let csv_b = std::fs::read(b.join("trajectory.csv")).unwrap();
    assert_eq!(csv_a, csv_b);
    assert_eq!(
        std::fs::read(a.join("manifest.json")).unwrap(),
        std::fs::read(b.join("manifest.json")).unwrap()
    );

    let head = String::from_utf8(csv_a).unwrap();
    let first_line = head.lines().next().unwrap();
    assert!(
        first_line.starts_with("# config="),
        "stamp line: {first_line}"
    );
    assert!(first_line.contains(" coefficients="));
}
