use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn susyext(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_susyext"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn cubic(dir: &TempDir) -> std::path::PathBuf {
    let path = dir.path().join("cubic.json");
    let o = susyext(
        &["construct", "--case", "iii", "--l", "1", "--m1", "1", "--m2", "1", "--omega", "1", "--out", "cubic.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    path
}

#[test]
fn construct_writes_cubic_descriptor() {
    let dir = TempDir::new().unwrap();
    let path = cubic(&dir);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["mu"], 3);
    assert_eq!(v["case"], "iii");
    assert_eq!(v["omega"], "1");
}

#[test]
fn construct_rejects_violated_constraint() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["construct", "--case", "ii", "--l", "0", "--m1", "0", "--m2", "5", "--omega", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m2 < alpha + 2"));
}

#[test]
fn construct_constant_denominator() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["construct", "--case", "i", "--l", "2", "--m1", "0", "--m2", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mu"], 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("pure oscillator"));
}

#[test]
fn spectrum_formula_and_numeric() {
    let dir = TempDir::new().unwrap();
    cubic(&dir);
    let o = susyext(&["spectrum", "cubic.json", "--levels", "3"], dir.path());
    assert_eq!(stdout(&o), "nu\tenergy\n0\t4\n1\t6\n2\t8\n");
    let o = susyext(&["spectrum", "cubic.json", "--levels", "3", "--numeric"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    let err: f64 = last.split('\t').nth(1).unwrap().parse().unwrap();
    assert!(err <= 1e-6);
}

#[test]
fn spectrum_of_base_oscillator() {
    let dir = TempDir::new().unwrap();
    susyext(&["construct", "--case", "base", "--l", "1", "--out", "base.json"], dir.path());
    let o = susyext(&["spectrum", "base.json", "--levels", "2"], dir.path());
    assert_eq!(stdout(&o), "nu\tenergy\n0\t5/2\n1\t9/2\n");
}

#[test]
fn verify_selected_kind() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["verify", "--check", "reduction-e", "--out", "r.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let entries = rep["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert!(entries.iter().all(|e| e["status"] == "pass"));
}

#[test]
fn verify_all_on_small_alpha_set() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["verify", "--all", "--alpha-set", "3/2,5/2,7/2", "--out", "r.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let ids: Vec<&str> = rep["entries"].as_array().unwrap().iter().map(|e| e["check_id"].as_str().unwrap()).collect();
    let unique: std::collections::HashSet<_> = ids.iter().collect();
    assert_eq!(unique.len(), ids.len());
}

#[test]
fn verify_descriptor_that_cannot_be_built() {
    let dir = TempDir::new().unwrap();
    let path = cubic(&dir);
    let text = std::fs::read_to_string(&path).unwrap().replace("\"m2\": 1", "\"m2\": 4");
    std::fs::write(dir.path().join("bad.json"), text).unwrap();
    let o = susyext(&["verify", "bad.json", "--check", "ssusy"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_descriptor_checks() {
    let dir = TempDir::new().unwrap();
    cubic(&dir);
    let o = susyext(&["verify", "cubic.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ssusy[case=iii,l=1,m1=1,m2=1,omega=1]"));
}

#[test]
fn golden_reports_failing_rows() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["golden", "--out", "g.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("golden-type-ii-cubic[l=3,omega=1]"));
    assert!(!err.contains("golden-new-cubic"));
    assert!(stdout(&o).contains("PASS  golden-new-cubic[l=1,omega=1]"));
}

#[test]
fn sample_writes_csv() {
    let dir = TempDir::new().unwrap();
    cubic(&dir);
    let o = susyext(
        &["sample", "cubic.json", "--x-max", "10", "--points", "1000", "--nus", "0,1", "--out", "s.csv", "--convention", "constant-dropped"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,V,psi_0,psi_1"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 1000);
    let at_one: Vec<f64> = rows[99].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(at_one[0], 1.0);
    assert!((at_one[1] - (2.25 - 1.92)).abs() < 1e-12);
    // normalised: ∫ψ₀² dx ≈ 1 by the trapezoid rule
    let h = 0.01;
    let norm: f64 = rows
        .iter()
        .map(|r| r.split(',').nth(2).unwrap().parse::<f64>().unwrap().powi(2))
        .sum::<f64>()
        * h;
    assert!((norm - 1.0).abs() < 1e-6);
}

#[test]
fn sample_rejects_zero_points() {
    let dir = TempDir::new().unwrap();
    cubic(&dir);
    let o = susyext(&["sample", "cubic.json", "--points", "0", "--out", "s.csv"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    cubic(&dir);
    let a = susyext(&["eop", "cubic.json", "--count", "4"], dir.path());
    let b = susyext(&["eop", "cubic.json", "--count", "4"], dir.path());
    assert_eq!(a.stdout, b.stdout);
    let rows: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(rows[0]["family"], "I,II");
    assert_eq!(rows[0]["n"], 3);
}

#[test]
fn explore_lists_classes() {
    let dir = TempDir::new().unwrap();
    let o = susyext(&["explore-mu4", "--alpha", "9/2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class 0"));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let dir = TempDir::new().unwrap();
    assert_eq!(susyext(&["frobnicate"], dir.path()).status.code(), Some(2));
}
