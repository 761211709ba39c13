//! The `divgraph` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divgraph")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn validate_reports_order() {
    let v = stdout_json(&run(&["validate", "symmetric:4"]));
    assert_eq!(v["order"], 24);
    assert_eq!(v["valid"], true);
}

#[test]
fn non_associative_table_is_rejected() {
    let out = run(&["validate", "--input", fixture("bad_table.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not associative"));
    let out = run(&["validate", fixture("bad_table.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not associative: ("));
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        &["division-graph", "symmetric:4"][..],
        &["division-graph", "dihedral:6", "--format", "dot"],
        &["analyze", "quaternion8"],
        &["compare", "alternating:4", "dihedral:6"],
    ] {
        let outputs: Vec<Vec<u8>> = ["1", "4", "1"]
            .iter()
            .map(|t| {
                let out = Command::new(env!("CARGO_BIN_EXE_divgraph")).args(args).env("RAYON_NUM_THREADS", t).output().unwrap();
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn divisions_of_q8() {
    let q8 = fixture("q8.json");
    let v = stdout_json(&run(&["divisions", q8.to_str().unwrap()]));
    assert_eq!(v["count"], 5);
    let reps: Vec<&str> = v["divisions"].as_array().unwrap().iter().map(|d| d["representative"].as_str().unwrap()).collect();
    assert_eq!(reps, ["1", "-1", "i", "j", "k"]);
    let one = stdout_json(&run(&["divisions", "--catalog", "quaternion8", "--division", "-j"]));
    assert_eq!(one["count"], 1);
    assert_eq!(one["divisions"][0]["members"], serde_json::json!(["j", "-j"]));
}

#[test]
fn division_graph_json_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let out = run(&["division-graph", "symmetric:3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);

    let dot = dir.path().join("s3.dot");
    let out = run(&["division-graph", "symmetric:3", "--format", "dot", "--division", "(1 3 2)", "--out", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("label=\"[").count(), 1);
}

#[test]
fn compare_order_eight() {
    let v = stdout_json(&run(&["compare", "dihedral:4", "quaternion8"]));
    assert_eq!(v["result"], "different");
    let v = stdout_json(&run(&["compare", "symmetric:3", "dihedral:3"]));
    assert_eq!(v["result"], "same");
    assert_eq!(v["fingerprints"][0], v["fingerprints"][1]);
}

#[test]
fn analyze_and_lagarias_pass() {
    let v = stdout_json(&run(&["analyze", "symmetric:4"]));
    assert_eq!(v["order"], 24);
    for (k, check) in v["oracle_checks"].as_object().unwrap() {
        assert_eq!(check["agree"], true, "{k}");
    }
    let v = stdout_json(&run(&["verify-lagarias", "alternating:4"]));
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn alternating_types() {
    let v = stdout_json(&run(&["an-divisions", "10"]));
    let two: Vec<&serde_json::Value> = v.as_array().unwrap().iter().filter(|r| r["divisions"] == 2).collect();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0]["cycle_type"], serde_json::json!([9, 1]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate", "no_such_group"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "--bogus-flag"]).status.code(), Some(1));
    assert_eq!(run(&["subgroups"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["validate", "symmetric:5", "--order-cap", "100"]).status.code(), Some(2));
    assert_eq!(run(&["subgroups", "symmetric:5", "--lattice-cap", "100"]).status.code(), Some(2));
    assert_eq!(run(&["compare", "symmetric:4", "symmetric:4", "--budget", "1"]).status.code(), Some(2));
    assert_eq!(run(&["an-divisions", "21"]).status.code(), Some(2));
    assert_eq!(run(&["divisions", "klein4", "--division", "zz"]).status.code(), Some(1));
}
