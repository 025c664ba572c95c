mod common;

use std::process::{Command, Output};

use common::fixture;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bloch-periods"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn analyze_clean_operator_exits_zero() {
    let out = bin(&["analyze", "--input", &path("schrodinger_q2.json"), "--Nmax-shifts", "4"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["tests"].as_array().unwrap().len() > 3);
}

#[test]
fn float_potential_is_a_parse_error() {
    let out = bin(&["validate", "--input", &path("float_potential.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("write it as \"1/2\""));
}

#[test]
fn missing_conjugate_is_an_invariant_error() {
    let out = bin(&["validate", "--input", &path("missing_conjugate.json")]);
    assert_eq!(code(&out), 3);
}

#[test]
fn detected_period_exits_four() {
    let out = bin(&["analyze", "--input", &path("period_half.json"), "--tests", "charpoly,squarefree,c_alpha,periods"]);
    assert_eq!(code(&out), 4);
    let out = bin(&["decay", "--input", &path("period_half.json"), "--N-range", "4:16"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn resource_cap_exits_five() {
    let out = bin(&["sweep", "--input", &path("schrodinger_2x2.json"), "--N", "64", "--max-values", "1000"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(code(&bin(&["sweep", "--input", &path("free_1d.json"), "--N", "4", "--tau", "0"])), 2);
    assert_eq!(code(&bin(&["analyze", "--input", &path("free_1d.json"), "--tests", "bogus"])), 2);
    assert_eq!(code(&bin(&["analyze", "--input", "/nonexistent/spec.json"])), 2);
    assert_eq!(code(&bin(&["frobnicate"])), 2);
}

#[test]
fn validate_writes_canonical_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    let out = bin(&["validate", "--input", &path("schrodinger_2x2.json"), "--out", first.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = bin(&["validate", "--input", first.to_str().unwrap(), "--out", second.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn single_point_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bands.csv");
    let out = bin(&["sweep", "--input", &path("schrodinger_q2.json"), "--N", "1", "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 2, "{text}");
}

#[test]
fn empty_test_list_runs_nothing() {
    let out = bin(&["analyze", "--input", &path("free_1d.json"), "--tests", ""]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["tests"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_is_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (w, p) in [("1", &a), ("4", &b)] {
        let out = bin(&["sweep", "--input", &path("magnetic_square.json"), "--N", "12", "--workers", w, "--out", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
