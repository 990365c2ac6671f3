use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn ufdlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ufdlab")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, value: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ufdlab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path
}

fn run(id: &str, params: Value) -> (Option<i32>, Value) {
    let path = scratch(&format!("{}.json", id.replace('.', "_")), &params);
    let out = ufdlab(&["claim", "run", id, "--params", path.to_str().unwrap()]);
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), report)
}

fn schema_valid(report: &Value) -> bool {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&schema).unwrap().is_valid(report)
}

#[test]
fn verified_claim_exits_zero() {
    let (code, r) = run("samuel.kernel", json!({ "field": "F5", "a": "u", "b": "v" }));
    assert_eq!(code, Some(0));
    assert_eq!(r["status"], "verified");
    assert_eq!(r["witness"]["relation"], "u*X + 4*v");
    assert!(schema_valid(&r));
}

#[test]
fn refuted_claim_exits_one() {
    let (code, r) = run("cex.sseq", json!({ "n": 3, "expect": [2, 3, 7] }));
    assert_eq!(code, Some(1));
    assert_eq!(r["status"], "refuted");
    assert!(schema_valid(&r));
}

#[test]
fn timeout_is_unknown_and_exits_two() {
    let path = scratch("slow.json", &json!({ "range": 20, "arity": 4 }));
    let out = ufdlab(&["claim", "run", "coeff.prime-avoid", "--params", path.to_str().unwrap(), "--timeout", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["status"], "unknown");
    assert_eq!(r["bound"], "timeout");
    assert!(schema_valid(&r));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(ufdlab(&["claim", "run", "no.such-claim"]).status.code(), Some(3));
    assert_eq!(ufdlab(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run("samuel.kernel", json!({ "field": "F4", "a": "u", "b": "v" })).0, Some(3));
    assert_eq!(ufdlab(&["claim", "run-all", "--suite", "nightly"]).status.code(), Some(3));
    // hypothesis violations are passed through verbatim
    let path = scratch("bad.json", &json!({ "exponents": [2, 2, 3] }));
    let out = ufdlab(&["claim", "run", "graded.pham-brieskorn", "--params", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("are not relatively prime"));
    let caps = Command::new(env!("CARGO_BIN_EXE_ufdlab")).args(["claim", "list"]).env("UFDLAB_CAPS", "deg=zero").output().unwrap();
    assert_eq!(caps.status.code(), Some(3));
}

#[test]
fn rejection_expectation() {
    let (code, r) = run("graded.pham-brieskorn", json!({ "exponents": [2, 2, 3], "expect_rejection": "not relatively prime" }));
    assert_eq!(code, Some(0));
    assert!(r["witness"]["rejected"].as_str().unwrap().contains("case (2) fails"));
    let (code, _) = run("graded.pham-brieskorn", json!({ "exponents": [2, 3, 5], "expect_rejection": "not relatively prime" }));
    assert_eq!(code, Some(1));
}

#[test]
fn reports_are_deterministic() {
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for item in v["items"].as_array_mut().unwrap() {
            item.as_object_mut().unwrap().remove("elapsed_ms");
        }
        serde_json::to_string(&v).unwrap()
    };
    let a = strip(ufdlab(&["claim", "run-all", "--suite", "acceptance"]));
    let b = strip(ufdlab(&["claim", "run-all", "--suite", "acceptance"]));
    assert_eq!(a, b);
}

#[test]
fn list_covers_the_registry() {
    let out = ufdlab(&["claim", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for e in ufdlab_cli::registry() {
        assert!(text.contains(e.id));
    }
}

fn export(input: Value, format: &str) -> String {
    let path = scratch(&format!("ring-{format}.json"), &input);
    let out = ufdlab(&["ring", "export", "--input", path.to_str().unwrap(), "--format", format]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pham_brieskorn_text_export() {
    let text = export(json!({ "builder": "pham-brieskorn", "params": { "exponents": [2, 3, 5] } }), "cas-text");
    assert!(text.contains("weights 15 10 6\n"));
    assert!(text.contains("meta deg Z = 6\n"));
    assert!(text.contains("relation X3^5 + X2^3 + X1^2\n"));
}

#[test]
fn empty_relation_ring_exports_header_and_variables() {
    let text = export(json!({ "builder": "free", "params": { "variables": ["a", "b"] } }), "cas-text");
    assert_eq!(text, "field QQ\nvariables a b\n");
}

#[test]
fn mori_json_echoes_the_data_and_round_trips() {
    let params = json!({ "partition": [1, 1, 1], "exponents": [[2], [3], [5]], "constants": [1], "names": [["x"], ["y"], ["z"]] });
    let text = export(json!({ "builder": "trinomial", "params": params }), "json");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["metadata"]["partition"], "1,1,1");
    assert_eq!(v["metadata"]["exponents"], "(2),(3),(5)");
    assert_eq!(v["metadata"]["constants"], "1");
    assert_eq!(v["relations"], json!(["z^5 + y^3 + x^2"]));
    assert_eq!(export(v, "json"), text);
}
