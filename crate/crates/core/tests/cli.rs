use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qubit_thermalization::cli::{columns, validate, Mode, RunConfig};
use serde_json::Value;

fn qtherm(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtherm"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn qtherm")
}

fn run_ok(dir: &Path, args: &[&str]) -> String {
    let out = qtherm(dir, args);
    assert!(
        out.status.success(),
        "qtherm {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], rows: &[Vec<f64>], name: &str) -> Vec<f64> {
    let k = header.iter().position(|c| c == name).unwrap();
    rows.iter().map(|r| r[k]).collect()
}

fn golden(mode: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{mode}.header"));
    std::fs::read_to_string(path)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn headers_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, mode) in [
        ("analytic", Mode::Analytic),
        ("mc", Mode::Mc),
        ("two-qubit", Mode::TwoQubit),
        ("two-qubit-mc", Mode::TwoQubitMc),
        ("sweep", Mode::Sweep),
        ("entropy", Mode::Entropy),
    ] {
        let expected = golden(name);
        assert_eq!(columns(mode).join(","), expected, "{name}");
        let out = run_ok(
            dir.path(),
            &[
                "run",
                "--mode",
                name,
                "--t-points",
                "2",
                "--t-stop",
                "0.5",
                "--n-traj",
                "16",
            ],
        );
        assert_eq!(out.lines().next().unwrap(), expected, "{name}");
        assert_eq!(out.lines().count(), 3, "{name}: one record per grid point");
    }
}

#[test]
fn analytic_excited_population() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_ok(
        dir.path(),
        &[
            "run", "--mode", "analytic", "--state", "excited", "--lambda", "1",
        ],
    );
    let (header, rows) = parse_csv(&out);
    assert_eq!(rows.len(), 51);
    let t = column(&header, &rows, "t");
    let a = column(&header, &rows, "a");
    assert_eq!(t[0], 0.0);
    assert_eq!(t[50], 5.0);
    for (t, a) in t.iter().zip(&a) {
        assert!((a - 0.5 * (1.0 + (-2.0 * t).exp())).abs() < 1e-15, "t={t}");
    }
}

#[test]
fn entropy_of_clauser_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_ok(
        dir.path(),
        &[
            "run",
            "--mode",
            "entropy",
            "--state",
            "clauser-example",
            "--t-stop",
            "20",
            "--t-points",
            "41",
        ],
    );
    let (header, rows) = parse_csv(&out);
    let s = column(&header, &rows, "entropy");
    let ln2 = std::f64::consts::LN_2;
    assert!((s[0] - ln2).abs() < 1e-6);
    assert!((s[40] - 2.0 * ln2).abs() < 1e-6);
    assert!(s.windows(2).all(|w| w[1] >= w[0] - 1e-12));
}

#[test]
fn csv_and_json_carry_identical_values() {
    let dir = tempfile::tempdir().unwrap();
    for mode in ["mc", "two-qubit", "sweep"] {
        let common = [
            "run",
            "--mode",
            mode,
            "--t-points",
            "4",
            "--t-stop",
            "1.5",
            "--n-traj",
            "500",
            "--seed",
            "3",
            "--eps1",
            "2",
        ];
        let csv = run_ok(dir.path(), &common);
        let json = run_ok(dir.path(), &[&common[..], &["--format", "json"]].concat());
        let (header, rows) = parse_csv(&csv);
        let doc: Value = serde_json::from_str(&json).unwrap();
        let json_cols: Vec<String> = serde_json::from_value(doc["columns"].clone()).unwrap();
        assert_eq!(json_cols, header);
        let json_rows: Vec<Vec<f64>> = serde_json::from_value(doc["rows"].clone()).unwrap();
        assert_eq!(json_rows, rows, "{mode}");
    }
}

#[test]
fn json_embeds_resolved_config() {
    let dir = tempfile::tempdir().unwrap();
    let json = run_ok(
        dir.path(),
        &[
            "run",
            "--mode",
            "mc",
            "--t-points",
            "2",
            "--n-traj",
            "10",
            "--format",
            "json",
        ],
    );
    let doc: Value = serde_json::from_str(&json).unwrap();
    let cfg = &doc["config"];
    assert_eq!(cfg["seed"], 0);
    assert_eq!(cfg["mode"], "mc");
    assert_eq!(cfg["state"]["preset"], "excited");
    assert_eq!(cfg["lambda_b"], 1.0);
    let back: RunConfig = serde_json::from_value(cfg.clone()).unwrap();
    assert_eq!(back.n_traj, 10);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("exp.json"),
        r#"{"mode": "two-qubit", "eps1": 0.0, "lambda": 2.0, "lambda_b": 0.5, "t_points": 3,
            "state": {"separable": [{"weight": 1.0, "a": [0, 0, 1], "b": [1, 0, 0]}]}}"#,
    )
    .unwrap();
    let out = run_ok(
        dir.path(),
        &["run", "--config", "exp.json", "--t-stop", "1"],
    );
    let (header, rows) = parse_csv(&out);
    assert_eq!(column(&header, &rows, "t"), vec![0.0, 0.5, 1.0]);
    let c30 = column(&header, &rows, "c30");
    let c01 = column(&header, &rows, "c01");
    // With no splitting σ₁ commutes with the flips, so C₀₁ stays 1.
    for (k, t) in [0.0f64, 0.5, 1.0].iter().enumerate() {
        assert!((c30[k] - (-4.0 * t).exp()).abs() < 1e-15);
        assert!(c01[k] == 1.0);
    }
}

#[test]
fn identical_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "run",
        "--mode",
        "two-qubit-mc",
        "--t-points",
        "3",
        "--n-traj",
        "300",
        "--seed",
        "21",
        "--out",
        "r.csv",
    ];
    run_ok(dir.path(), &args);
    let first = std::fs::read(dir.path().join("r.csv")).unwrap();
    run_ok(dir.path(), &args);
    assert_eq!(first, std::fs::read(dir.path().join("r.csv")).unwrap());
}

#[test]
fn invalid_config_fails_with_one_line() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["run", "--lambda", "-1"][..],
        &["run", "--mode", "mc", "--n-traj", "1"],
        &["run", "--t-start", "2", "--t-stop", "1"],
        &["run", "--mode", "two-qubit", "--state", "plus"],
        &["run", "--bloch", "1,1,1"],
        &["run", "--config", "missing.json"],
    ] {
        let out = qtherm(dir.path(), args);
        assert!(!out.status.success(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn unwritable_output_path_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = qtherm(dir.path(), &["run", "--out", "no/such/dir/out.csv"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("no/such/dir/out.csv"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn validate_reports_derived_quantities() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_ok(
        dir.path(),
        &["validate", "--lambda", "1", "--eps1", "1", "--eps2", "0"],
    );
    assert!(out.contains("omega: 1\n"));
    assert!(out.contains("regime: critical\n"));
    assert!(out.ends_with("status: ok\n"));

    let out = run_ok(dir.path(), &["validate", "--lambda", "1", "--eps1", "2"]);
    assert!(out.contains("regime: underdamped\n"));
    let s3 = 3f64.sqrt();
    assert!(out.contains(&format!("r_plus: -1+{s3}i\n")), "{out}");
    assert!(out.contains(&format!("r_minus: -1-{s3}i\n")), "{out}");

    let out = qtherm(dir.path(), &["validate", "--lambda", "-1"]);
    assert!(!out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines()
            .any(|l| l.starts_with("error: ") && l.contains("lambda")),
        "{text}"
    );

    let report = validate(&RunConfig {
        lambda: -1.0,
        ..Default::default()
    });
    assert!(!report.is_ok());
}
