use std::process::{Command, Output};

use serde_json::Value;

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).env_remove("BMW_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn decomp_json(args: &[&str]) -> Value {
    let mut all = vec!["decomp"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--format", "json"]);
    let o = bmw(&all);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn relations_type_c_three_strands_passes() {
    let o = bmw(&["relations", "--type", "C", "--r", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("PASS")));
    assert!(!text.lines().any(|l| l.starts_with("FAIL")), "{text}");
}

#[test]
fn relations_type_b_at_a_root_of_unity_passes() {
    let o = bmw(&["relations", "--type", "B", "--r", "2", "--e", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["relations", "--type", "C", "--r", "1"][..],
        &["dims", "--type", "X", "--r", "2"],
        &["decomp", "--type", "C"],
        &["decomp", "--type", "C", "--r", "2", "--format", "xml"],
    ] {
        let o = bmw(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_bmw"))
        .args(["dims", "--type", "C", "--r", "2"])
        .env("BMW_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dims_reports_counts() {
    let o = bmw(&["dims", "--type", "C", "--r", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("15 = 15"), "{text}");
    let row: Vec<&str> = text.lines().find(|l| l.starts_with("(1,(1))")).unwrap().split_whitespace().collect();
    assert_eq!(row[1..4], ["3", "3", "3"]);

    let o = bmw(&["dims", "--type", "D", "--r", "4", "--e", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("105 = 105"));
}

#[test]
fn generic_decomposition_is_the_identity() {
    let v = decomp_json(&["--type", "C", "--r", "2", "--e", "0"]);
    let labels: Vec<&str> = v["labels"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    assert_eq!(labels, ["(0,(2))", "(0,(1,1))", "(1,∅)"]);
    assert_eq!(v["matrix"], serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
    assert_eq!(v["params"]["cyclotomic_order"], Value::Null);
}

#[test]
fn hecke_block_agrees_at_e_two() {
    let o = bmw(&["decomp", "--type", "C", "--r", "2", "--e", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.contains("hecke_f0_block") && l.contains("PASS")));
    let v = decomp_json(&["--type", "C", "--r", "2", "--e", "2"]);
    assert_eq!(v["params"]["u"], "zeta_8");
    assert_eq!(v["simple_dims"], serde_json::json!([0, 1, 0]));
}

#[test]
fn decomp_json_matches_the_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/decomp.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for (ty, r, e) in [("B", "2", "0"), ("C", "2", "2"), ("D", "3", "3"), ("C", "3", "4")] {
        let v = decomp_json(&["--type", ty, "--r", r, "--e", e]);
        let errors: Vec<String> = validator.iter_errors(&v).map(|err| err.to_string()).collect();
        assert!(errors.is_empty(), "{ty} r={r} e={e}: {errors:?}");
    }
}

#[test]
fn headers_carry_the_format_version() {
    let text = stdout(&bmw(&["decomp", "--type", "B", "--r", "2"]));
    assert!(text.starts_with("# bmw decomp format_version=1\n# type=B n=3 r=2 e=0 rho="), "{text}");
    let csv = stdout(&bmw(&["decomp", "--type", "B", "--r", "2", "--format", "csv"]));
    assert!(csv.starts_with("#format_version,1,decomp\n#params,"), "{csv}");
    let v = decomp_json(&["--type", "B", "--r", "2"]);
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["command"], "decomp");
}

#[test]
fn relations_seed_changes_only_the_random_words() {
    let run = |seed: &str| -> Value {
        let o = bmw(&["relations", "--type", "D", "--r", "2", "--seed", seed, "--format", "json"]);
        serde_json::from_slice(&o.stdout).unwrap()
    };
    let (a, b) = (run("1"), run("2"));
    assert_eq!(a["checks"], b["checks"]);
    assert_ne!(a["random_words"], b["random_words"]);
    assert_eq!(run("1"), a);
}
