use std::process::{Command, Output};

use serde_json::Value;

fn ymick(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ymick")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn clifford_passes_with_table_output() {
    let out = ymick(&["check", "clifford", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  clifford-anticommutators"));
    assert!(text.contains("result: 4/4 checks passed"));
}

#[test]
fn json_report_schema() {
    let out = ymick(&["check", "clifford", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "clifford");
    assert!(v["elapsed_ms"].is_u64());
    let params = v["params"].as_object().unwrap();
    for key in ["m", "n", "l", "N", "order", "mu", "sigma", "seed", "max_dim"] {
        assert!(params.contains_key(key), "missing {key}");
    }
    // default weight (1/3, 2/3) for m = 2
    assert_eq!(v["params"]["mu"], serde_json::json!(["1/3", "2/3"]));
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(c["diagnostic"].is_null());
    }
}

#[test]
fn zhel_scalar_reports_quarter_case() {
    let out = ymick(&["check", "zhel-scalar", "--m", "2", "--n", "1", "--mu", "1/3,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["params"]["mu"], serde_json::json!(["1/3", "0/1"]));
    let names: Vec<String> =
        v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect();
    assert!(names.iter().any(|n| n == "zhel-scalar sigma=[2,1] nu=[0, 1] c=1/4"), "{names:?}");
}

#[test]
fn stable_reports_are_byte_identical() {
    let args = ["check", "bimequiv", "--format", "json", "--stable", "--seed", "7"];
    let a = ymick(&args);
    let b = ymick(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["elapsed_ms"], 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ymick(&["check", "hecke", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "hecke");
}

#[test]
fn config_sections_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("params.conf");
    std::fs::write(&path, "# defaults\nm = 3\nseed = 5\n\n[clifford]\nn = 1\n").unwrap();
    let conf = path.to_str().unwrap();

    let v = json(&ymick(&["check", "clifford", "--config", conf, "--format", "json"]));
    assert_eq!((v["params"]["m"].as_u64(), v["params"]["n"].as_u64()), (Some(3), Some(1)));
    assert_eq!(v["params"]["seed"], 5);

    // the section applies only to its suite
    let v = json(&ymick(&["check", "enveloping", "--config", conf, "--format", "json"]));
    assert_eq!(v["params"]["n"], 2);

    let v = json(&ymick(&["check", "clifford", "--config", conf, "--n", "2", "--m", "1", "--format", "json"]));
    assert_eq!((v["params"]["m"].as_u64(), v["params"]["n"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn bad_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.conf");
    std::fs::write(&path, "colour = blue\n").unwrap();
    let out = ymick(&["check", "clifford", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(ymick(&["check", "clifford", "--config", "/nonexistent/x.conf"]).status.code() == Some(2));
}

#[test]
fn unknown_suite_exits_2() {
    let out = ymick(&["check", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ymick suites"));
}

#[test]
fn non_generic_weight_exits_2() {
    let out = ymick(&["check", "zhel-braid", "--mu", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not generic"));
}

#[test]
fn dimension_cap_exits_2() {
    let out = ymick(&["check", "clifford", "--m", "7", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-dim"));
    let raised = ymick(&["check", "clifford", "--m", "7", "--n", "2", "--max-dim", "16384"]);
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn malformed_flags_exit_2() {
    assert_eq!(ymick(&["check", "clifford", "--bogus"]).status.code(), Some(2));
    assert_eq!(ymick(&["check", "clifford", "--mu", "1/0,1"]).status.code(), Some(2));
    assert_eq!(ymick(&["check", "zhel-scalar", "--sigma", "1,1"]).status.code(), Some(2));
    assert_eq!(ymick(&["check", "zhel-scalar", "--mu", "1/3"]).status.code(), Some(2));
}

#[test]
fn sigma_flag_selects_permutation() {
    let v = json(&ymick(&["check", "zhel-scalar", "--m", "3", "--n", "1", "--sigma", "2,3,1", "--format", "json"]));
    assert_eq!(v["params"]["sigma"], serde_json::json!([2, 3, 1]));
    for c in v["checks"].as_array().unwrap() {
        let name = c["name"].as_str().unwrap();
        assert!(name == "falling-factorial" || name.starts_with("zhel-scalar sigma=[2,3,1]"), "{name}");
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn all_with_defaults_passes() {
    let out = ymick(&["check", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "all");
    let checks = v["checks"].as_array().unwrap();
    for suite in ["clifford", "lemma2", "olshanski", "zhel-scalar", "howe-hom"] {
        assert!(checks.iter().any(|c| c["name"].as_str().unwrap().starts_with(&format!("{suite}/"))));
    }
}

#[test]
fn suites_lists_all_names() {
    let out = ymick(&["suites"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names.len(), 14);
    assert!(names.contains(&"dast-oracle") && names.contains(&"all"));
}
