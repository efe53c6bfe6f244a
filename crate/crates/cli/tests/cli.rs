use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn coxeter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn system(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_cycles() {
    let dir = TempDir::new().unwrap();
    let a2 = system(&dir, "a2.json", r#"{"rank": 3, "cyclic": [3, 3, 3]}"#);
    let h = system(&dir, "h.json", r#"{"rank": 3, "cyclic": [3, 3, 4]}"#);
    let a3 = system(&dir, "a3.json", r#"{"rank": 3, "matrix": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}"#);
    for (path, kind) in [(&a2, "Affine"), (&h, "Indefinite"), (&a3, "Finite")] {
        let v = json(&coxeter(&["classify", "--input", s(path)]));
        assert_eq!(v["system"]["kind"], kind);
        assert_eq!(v["schema_version"], 1);
    }
}

#[test]
fn cover_is_deterministic_and_formats_agree() {
    let dir = TempDir::new().unwrap();
    let h = system(&dir, "h.json", r#"{"rank": 3, "cyclic": [3, 3, 4]}"#);
    let first = coxeter(&["cover", "--input", s(&h), "--depth", "10", "--seed", "7"]);
    let second = coxeter(&["cover", "--input", s(&h), "--depth", "10", "--seed", "7"]);
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert_eq!(v["consistent"], true);
    assert!(v["summary"]["uncovered_certified"].as_u64().unwrap() >= 1);
    assert!(v["first_uncovered"]["coords_text"].is_string());

    let csv = coxeter(&["cover", "--input", s(&h), "--depth", "10", "--format", "csv"]);
    assert!(csv.status.success());
    let rows = String::from_utf8(csv.stdout).unwrap().lines().count() - 1;
    assert_eq!(rows, v["records"].as_array().unwrap().len());
}

#[test]
fn output_file_matches_stdout() {
    let dir = TempDir::new().unwrap();
    let a2 = system(&dir, "a2.json", r#"{"rank": 3, "cyclic": [3, 3, 3]}"#);
    let out = dir.path().join("report.json");
    let to_file = coxeter(&["cover", "--input", s(&a2), "--depth", "6", "--output", s(&out)]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = coxeter(&["cover", "--input", s(&a2), "--depth", "6"]);
    assert_eq!(fs::read(&out).unwrap(), to_stdout.stdout);
}

#[test]
fn rank_two_infinite_is_covered() {
    let dir = TempDir::new().unwrap();
    let a1 = system(&dir, "a1.json", r#"{"rank": 2, "matrix": [[1, "inf"], ["inf", 1]]}"#);
    let v = json(&coxeter(&["cover", "--input", s(&a1), "--depth", "12"]));
    assert_eq!(v["summary"]["covered"], 24);
    assert_eq!(v["consistent"], true);
}

#[test]
fn preproj_transcript() {
    let dir = TempDir::new().unwrap();
    let a2 = system(&dir, "a2.json", r#"{"rank": 3, "cyclic": [3, 3, 3]}"#);
    let v = json(&coxeter(&[
        "preproj", "--input", s(&a2), "--element", "std:2,1", "--mu-max", "3", "--root", "1,0,0",
    ]));
    assert_eq!(v["records"].as_array().unwrap().len(), 12);
    assert_eq!(v["layer_sizes"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["query"]["verdict"]["status"], "Yes");
    assert_eq!(v["standard"]["members_step_law"], true);
}

#[test]
fn growth_and_truncation() {
    let dir = TempDir::new().unwrap();
    let a2 = system(&dir, "a2.json", r#"{"rank": 3, "cyclic": [3, 3, 3]}"#);
    let v = json(&coxeter(&["growth", "--input", s(&a2), "--radius", "5", "--depth", "10"]));
    assert_eq!(v["sphere_sizes"][1], 3);
    assert_eq!(v["roots_per_depth"], serde_json::json!(vec![3; 10]));

    let out = coxeter(&["growth", "--input", s(&a2), "--radius", "40", "--depth", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["truncated"]["spheres"], true);
}

#[test]
fn atilde_verify_defaults() {
    let v = json(&coxeter(&["atilde-verify", "--depth", "10"]));
    assert_eq!(v["records"].as_array().unwrap().len(), 7);
    assert_eq!(v["rank_two"]["roots"], 20);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let a2 = system(&dir, "a2.json", r#"{"rank": 3, "cyclic": [3, 3, 3]}"#);
    let bad = system(&dir, "bad.json", r#"{"rank": 3, "cyclic": [3, 2, 3]}"#);
    let path = system(&dir, "path.json", r#"{"rank": 3, "matrix": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}"#);
    let code = |args: &[&str]| coxeter(args).status.code();
    assert_eq!(code(&["preproj", "--input", s(&a2), "--element", "std:1,1"]), Some(2));
    assert_eq!(code(&["preproj", "--input", s(&a2), "--element", "orient:5"]), Some(2));
    assert_eq!(code(&["preproj", "--input", s(&a2), "--element", "std:1,2", "--root", "1,1,1"]), Some(2));
    assert_eq!(code(&["classify", "--input", s(&bad)]), Some(1));
    assert_eq!(code(&["classify", "--input", "/nonexistent/system.json"]), Some(1));
    assert_eq!(code(&["cover", "--input", s(&path)]), Some(1));
    assert_eq!(code(&["cover", "--input", s(&a2), "--format", "xml"]), Some(1));
    assert_eq!(code(&["cover"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
}
