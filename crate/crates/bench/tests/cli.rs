use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergman-bench")).args(args).output().expect("spawn bergman-bench")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn report(dir: &Path, suite: &str) -> Value {
    let mut v: Value = serde_json::from_slice(&std::fs::read(dir.join(format!("{suite}.json"))).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("wall_time_s");
    v
}

#[test]
fn list_names_every_suite() {
    let o = bench(&["list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for s in ["geometry", "lemma4", "thm6", "lifting", "a2-diverge", "ball-thm13"] {
        assert!(text.lines().any(|l| l.starts_with(s)), "{s} missing from:\n{text}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&bench(&["run", "no-such-suite"])), 2);
    assert_eq!(code(&bench(&["frobnicate"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"seed": 1, "colour": "red"}"#).unwrap();
    let out = dir.path().join("out");
    assert_eq!(code(&bench(&["run", "lemma4", "--config", bad.to_str().unwrap(), "--out", out.to_str().unwrap()])), 2);

    std::fs::write(&bad, r#"{"tolerances": {"not a check": 1.0}}"#).unwrap();
    assert_eq!(code(&bench(&["run", "lemma4", "--config", bad.to_str().unwrap(), "--out", out.to_str().unwrap()])), 2);
}

#[test]
fn failing_override_exits_1_and_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let cfg = dir.path().join("strict.json");
    // a relative error of exactly zero is not attainable in floating point
    std::fs::write(&cfg, r#"{"tolerances": {"disk rho quotient relative error": 0.0}}"#).unwrap();
    let o = bench(&["run", "lemma4", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stdout));
    let r = report(&out, "lemma4");
    assert_eq!(r["passed"], Value::Bool(false));
    assert!(out.join("lemma4-ratios.csv").exists());
}

#[test]
fn echoed_config_replays_identically() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let o = bench(&["run", "lemma5", "--seed", "7", "--out", a.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let first = report(&a, "lemma5");
    assert_eq!(first["config"]["seed"], 7);

    let cfg = dir.path().join("echo.json");
    std::fs::write(&cfg, serde_json::to_string(&first["config"]).unwrap()).unwrap();
    let o = bench(&["run", "lemma5", "--config", cfg.to_str().unwrap(), "--out", b.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(first, report(&b, "lemma5"));
    assert_eq!(
        std::fs::read(a.join("lemma5-ratios.csv")).unwrap(),
        std::fs::read(b.join("lemma5-ratios.csv")).unwrap()
    );
}
