use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn gendo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gendo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(args: &[&str], file: &str) {
    let o = gendo(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let expected = std::fs::read_to_string(data(file)).unwrap();
    assert_eq!(stdout(&o), expected, "output of {args:?} differs from {file}");
}

fn dim(o: &Output) -> u64 {
    let v: Value = serde_json::from_str(&stdout(o)).unwrap();
    v["dim"].as_u64().unwrap()
}

#[test]
fn construct_goldens() {
    golden(&["construct", "nakayama", "--n", "2", "--m", "2"], "nakayama_2_2.json");
    golden(&["--field", "F2", "construct", "mbs", "--n", "2", "--eps", "1"], "mbs_2_1_f2.json");
}

#[test]
fn classify_goldens() {
    golden(&["classify", "--family", "A", "--rank", "4", "--f", "1/2", "--vertex", "1"], "classify_a4_half_1.json");
    golden(&["classify", "--family", "D", "--rank", "6", "--f", "1/3", "--vertex", "1"], "classify_d6_third_1.json");
}

#[test]
fn construct_dimensions() {
    assert_eq!(dim(&gendo(&["construct", "nakayama", "--n", "2", "--m", "2"])), 10);
    assert_eq!(dim(&gendo(&["--field", "F2", "construct", "mbs", "--n", "2", "--eps", "1"])), 10);
    let q = data("a3.json");
    let q = q.to_str().unwrap();
    let kq = dim(&gendo(&["construct", "path", "--quiver", q]));
    let triv = dim(&gendo(&["construct", "triv-kq", "--quiver", q]));
    assert_eq!((kq, triv), (6, 12));
}

#[test]
fn output_is_byte_stable_for_a_seed() {
    let args = ["--seed", "7", "--field", "F2", "verify", "sixcase", "--eps", "0"];
    let (a, b) = (gendo(&args), gendo(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn classify_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = gendo(&["classify", "--family", "A", "--rank", "1", "--f", "1", "--vertex", "1", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Finite "));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["extension"], "A2");
}

#[test]
fn exit_codes() {
    assert_eq!(gendo(&["classify", "--family", "E", "--rank", "9", "--f", "1", "--vertex", "1"]).status.code(), Some(2));
    assert_eq!(gendo(&["classify", "--family", "A", "--rank", "3", "--f", "1", "--vertex", "9"]).status.code(), Some(2));
    assert_eq!(gendo(&["classify", "--unknown-flag"]).status.code(), Some(2));
    assert_eq!(gendo(&["construct", "path", "--quiver", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(gendo(&["--field", "Q", "verify", "endmbta", "--n", "3", "--eps", "0"]).status.code(), Some(0));
    assert_eq!(gendo(&["--field", "F2", "verify", "tau", "--algebra", "mbs", "--n", "2"]).status.code(), Some(0));
    assert_eq!(gendo(&["verify", "tables"]).status.code(), Some(0));
    let six = gendo(&["--field", "F2", "verify", "sixcase", "--eps", "0"]);
    assert_eq!(six.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&six.stderr).contains("module D"));
}

#[test]
fn coext_on_a_file() {
    let q = data("a3.json");
    let o = gendo(&["verify", "coext", "--quiver", q.to_str().unwrap(), "--vertex", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn every_criterion_is_one_invocation() {
    for id in ["1", "2", "7"] {
        let o = gendo(&["verify", "criterion", "--id", id, "--json", "/dev/null"]);
        assert_eq!(o.status.code(), Some(0), "criterion {id}");
        assert!(stdout(&o).starts_with("PASS criterion"));
    }
}
