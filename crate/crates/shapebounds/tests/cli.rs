//! End-to-end tests of the command-line interface: subcommands, exit codes,
//! output formats, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shapebounds"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn write_square(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("square.json");
    std::fs::write(&path, "{\"vertices\": [[0,0],[1,0],[1,1],[0,1]]}").unwrap();
    path
}

#[test]
fn verify_thin_rectangle_family_passes() {
    let out = run(&["verify", "--shape", "family:rectangle:1:0.1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["shape"], "rectangle-1x0.1");
    let entries = report["entries"].as_array().unwrap();
    assert!(entries.len() >= 20);
    for e in entries {
        assert_eq!(e["pass"], true, "entry {} failed", e["id"]);
        assert!(e["margin"].as_f64().is_some());
        assert!(e["tol"].as_f64().is_some());
    }
}

#[test]
fn compute_square_reports_unit_beta() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_square(&dir);
    let out = run(&["compute", "--shape", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("\"beta\": 1.0"), "missing beta in {text}");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["shape"], "square");
    assert!((doc["measurements"]["area"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((doc["functionals"]["beta"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let torsion = doc["values"]["torsion"]["value"].as_f64().unwrap();
    assert!((torsion - 0.0351444).abs() / 0.0351444 < 1e-3);
    assert!(doc["bounds"]["web_torsion"].as_f64().unwrap() <= torsion * 1.001);
}

#[test]
fn compute_spatial_box_prints_closed_forms() {
    let out = run(&["compute", "--shape", "family:thinning_box:4:0.1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["closed_form"]["dimension"], 4);
    assert!((doc["closed_form"]["volume"].as_f64().unwrap() - 0.1).abs() < 1e-12);
    assert!(doc["functionals"]["beta"].as_f64().unwrap() > 0.0);
    // No solver ran, so no mesh data is present.
    assert!(doc.get("values").is_none());
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "not json at all").unwrap();
    let out = run(&["verify", "--shape", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());

    let out = run(&["compute", "--shape", "/definitely/not/a/file.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["compute", "--shape", "family:sector:7.0"]);
    assert_eq!(out.status.code(), Some(2), "sector opening beyond pi");

    let out = run(&["compute", "--shape", "family:unknown_kind:1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["sweep", "--family", "family:rectangle:1:0.1", "--param", "0.2"]);
    assert_eq!(out.status.code(), Some(2), "single-value sweep is rejected");

    // Clap-level usage errors also exit 2.
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn clockwise_polygon_is_rejected_as_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cw.json");
    std::fs::write(&path, "{\"vertices\": [[0,0],[0,1],[1,1],[1,0]]}").unwrap();
    let out = run(&["verify", "--shape", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv1 = dir.path().join("sweep1.csv");
    let csv2 = dir.path().join("sweep2.csv");
    for path in [&csv1, &csv2] {
        let out = run(&[
            "sweep",
            "--family",
            "family:rectangle:1:0.1",
            "--param",
            "0.4,0.2",
            "--fem-tol",
            "1e-4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&csv1).unwrap();
    let b = std::fs::read(&csv2).unwrap();
    assert_eq!(a, b, "sweep output must be byte-identical across runs");

    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "param,alpha,beta,F1,F2,F3,F4,gap1,gap2,gap3,gap4,gap1/param,gap2/param,gap3/param,beta/param,gap4/alpha^2"
    );
    assert_eq!(text.lines().count(), 3);
    assert!(!text.contains('\r'), "line endings must be bare LF");
}

#[test]
fn verify_output_is_deterministic() {
    let first = run(&["verify", "--shape", "family:regular_polygon:6:1"]);
    let second = run(&["verify", "--shape", "family:regular_polygon:6:1"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn suite_smoke_run_passes() {
    let out = run(&["suite", "--seeds", "2", "--fem-tol", "1e-3"]);
    assert!(
        out.status.success(),
        "suite failed: {}",
        stdout_str(&out)
    );
    let text = stdout_str(&out);
    assert!(text.contains("0 failures"), "{text}");
}

#[test]
fn closed_form_verify_exits_zero() {
    let out = run(&["verify", "--shape", "family:thinning_box:5:0.05"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    for e in report["entries"].as_array().unwrap() {
        assert_eq!(e["pass"], true);
    }
}
