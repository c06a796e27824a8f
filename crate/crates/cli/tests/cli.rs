use std::process::{Command, Output};

use serde_json::Value;

fn bei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bei"))
        .args(args)
        .env_remove("BEI_PRIME")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn predict_m3_k22() {
    let out = bei(&["predict", "--m", "3", "--parts", "2,2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["depth"], 5);
    assert_eq!(v["reg"], 2);
    assert_eq!(v["mult"], 12);
    assert_eq!(v["cd"]["exact"], 7);
    assert!(out.stderr.is_empty());
}

#[test]
fn predict_char_zero_interval() {
    let v = json(&bei(&[
        "predict",
        "--m",
        "3",
        "--parts",
        "2,2",
        "--char-zero",
    ]));
    assert_eq!(v["cd"]["lower"], 7);
    assert_eq!(v["cd"]["upper"], 9);
}

#[test]
fn verify_star_all_match() {
    let out = bei(&["verify", "--m", "2", "--parts", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["spec"]["parts"], serde_json::json!([1, 2]));
    assert_eq!(v["squarefree"], true);
    for rec in v["invariants"].as_array().unwrap() {
        let status = rec["status"].as_str().unwrap();
        assert!(status == "match" || rec["name"] == "cd", "{rec}");
    }
}

#[test]
fn unsorted_parts_warn_and_sort() {
    let out = bei(&["predict", "--m", "2", "--parts", "3,1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("reordered"));
    assert_eq!(json(&out)["spec"]["parts"], serde_json::json!([1, 3]));
}

#[test]
fn cutsets_of_star() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star4.json");
    std::fs::write(&path, r#"{"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]}"#).unwrap();
    let out = bei(&["cutsets", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    let sets: Vec<Value> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["vertices"].clone())
        .collect();
    assert_eq!(sets, vec![serde_json::json!([]), serde_json::json!([1])]);
}

#[test]
fn hilbert_agrees() {
    let out = bei(&["hilbert", "--m", "2", "--parts", "2,2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["match"], true);
    assert_eq!(v["predicted"], v["computed"]);
}

#[test]
fn groebner_lists_basis() {
    let out = bei(&["groebner", "--m", "2", "--parts", "1,1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(
        v["basis"],
        serde_json::json!(["x[1,1]*x[2,2] + -x[1,2]*x[2,1]"])
    );
    assert_eq!(v["squarefree"], true);
}

#[test]
fn sweep_small() {
    let out = bei(&["sweep", "--max-m", "2", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["mismatch"], 0);
    assert_eq!(v["specs"].as_array().unwrap().len(), 3);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let out = bei(&[
        "predict",
        "--m",
        "2",
        "--parts",
        "1,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
}

#[test]
fn deterministic_apart_from_timing() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v["timingMs"] = Value::Null;
        v
    };
    let a = strip(bei(&["verify", "--m", "2", "--parts", "1,1,2"]));
    let b = strip(bei(&["verify", "--m", "2", "--parts", "1,1,2"]));
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        bei(&["predict", "--m", "1", "--parts", "2,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bei(&["predict", "--m", "2", "--parts", "0,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bei(&["predict", "--m", "2"]).status.code(), Some(2));
    assert_eq!(bei(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bei(&["verify", "--m", "2", "--parts", "1,1", "--prime", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bei(&["cutsets", "--graph", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn prime_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_bei"))
        .args(["verify", "--m", "2", "--parts", "1,1"])
        .env("BEI_PRIME", "101")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["prime"], 101);
}

#[test]
fn over_cap_groebner_is_usage_error() {
    let out = bei(&["hilbert", "--m", "4", "--parts", "4,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
