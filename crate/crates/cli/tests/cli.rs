use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbert-fock")).args(args).output().expect("spawn binary")
}

fn payload(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("json document");
    assert!(doc["version"].as_str().unwrap().starts_with("hilbert-fock "));
    doc["payload"].clone()
}

fn records(v: &Value) -> BTreeSet<String> {
    v.as_array().unwrap().iter().map(|r| r.to_string()).collect()
}

#[test]
fn gseries_examples() {
    assert_eq!(payload(&["gseries", "chern", "tangent", "--order", "5"]), json!(["1", "0", "-1/3", "0", "2/5"]));
    assert_eq!(payload(&["gseries", "segre", "tangent", "--order", "5"]), json!(["1", "0", "1/3", "0", "3/5"]));
    assert_eq!(payload(&["gseries", "custom", "tangent", "--f", "[1]", "--order", "4"]), json!(["1", "0", "0", "0"]));
    assert_eq!(payload(&["gseries", "custom", "tangent", "--f", "1", "--order", "4"]), json!(["1", "0", "0", "0"]));
}

#[test]
fn gseries_default_order_is_twelve() {
    assert_eq!(payload(&["gseries", "chern", "tautological"]).as_array().unwrap().len(), 12);
}

#[test]
fn class_examples() {
    let got = payload(&["class", "chern", "tautological", "--weight", "2"]);
    let want = json!([{"partition": [1, 1], "coeff": "1/2"}, {"partition": [2], "coeff": "-1/2"}]);
    assert_eq!(records(&got), records(&want));
    assert_eq!(
        payload(&["class", "custom", "tangent", "--f", "1", "--weight", "3"]),
        json!([{"partition": [1, 1, 1], "coeff": "1/6"}])
    );
}

#[test]
fn class_sqrt_todd_degree_two() {
    let got = payload(&["class", "sqrt-todd", "tangent", "--weight", "3", "--degree", "2"]);
    assert_eq!(got, json!([{"partition": [3], "coeff": "1/72"}]));
}

#[test]
fn cup_examples() {
    assert_eq!(payload(&["cup", "[1,1]", "[1,1]"]), json!([{"partition": [1, 1], "coeff": "2"}]));
    assert_eq!(payload(&["cup", "[2]", "[2]"]), json!([]));
    assert_eq!(payload(&["cup", "2,1", "2,1"]), json!([{"partition": [3], "coeff": "4"}]));
}

#[test]
fn verify_appendix_passes() {
    let out = run(&["verify", "appendix"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["passed"], json!(true));
    assert!(doc["payload"]["checks"].as_array().unwrap().len() >= 2);
}

#[test]
fn invalid_input_exits_nonzero() {
    for args in [
        &["cup", "[2]", "[1]"][..],
        &["verify", "nonsense"],
        &["gseries", "cprime-pow", "tangent"],
        &["gseries", "custom", "tangent", "--f", "2,1"],
        &["gseries", "chern", "sideways"],
        &["gseries", "chern", "tangent", "--r", "2"],
        &["cup", "[1,3]", "[2,2]"],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(out.stdout.is_empty(), "{args:?} wrote a document");
    }
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("class.json");
    let args = ["class", "segre", "tangent", "--weight", "5"];
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&args).stdout);
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
