//! End-to-end tests of the binary: output shapes, exit codes, and byte
//! stability across runs.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn recog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recog"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = recog(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    recog(args).status.code().expect("no signal")
}

#[test]
fn compile_emits_three_state_dfa_json() {
    let v = stdout_json(&["compile", "--alphabet", "01", "0*1*", "--format", "json"]);
    assert_eq!(v["states"], 3);
    assert_eq!(v["alphabet"], serde_json::json!(["0", "1"]));
    assert_eq!(v["delta"].as_array().unwrap().len(), 3);
    assert_eq!(v["start"], 0);
}

#[test]
fn compile_empty_language_rejects_everything() {
    let v = stdout_json(&["compile", "--alphabet", "01", "#"]);
    assert_eq!(v["states"], 1);
    assert_eq!(v["accept"], serde_json::json!([]));
}

#[test]
fn compile_dot_marks_accepting_states() {
    let out = recog(&["compile", "--alphabet", "a", "(aa)*", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("doublecircle").count(), 1);
    assert_eq!(dot.matches("shape=circle").count(), 1);
    assert!(dot.contains("__start"));
}

#[test]
fn analyze_regex_reports_multiplicities() {
    let v = stdout_json(&["analyze", "--alphabet", "01", "--regex", "0*1*"]);
    assert_eq!(v["rank_zero"], true);
    assert_eq!(v["mult_phi"], 3);
    assert_eq!(v["mult_phi_prime"], 5);
    assert_eq!(v["empirical"], false);
}

#[test]
fn analyze_full_language_is_trivial() {
    let v = stdout_json(&["analyze", "--alphabet", "01", "--regex", "!#"]);
    assert_eq!(v["mult_phi"], 1);
    assert_eq!(v["mult_phi_prime"], 1);
}

#[test]
fn analyze_triple_oracle_yields_certificate() {
    let v = stdout_json(&["analyze", "--alphabet", "012", "--oracle", "triple", "--max-len", "6"]);
    assert_eq!(v["rank_zero"], false);
    assert_eq!(v["empirical"], true);
    let members = v["witness"]["members"].as_array().unwrap();
    assert!(members.len() >= 5);
    assert!(v.get("mult_phi").is_none());
}

#[test]
fn analyze_mult_phi_matches_compile_state_count() {
    for pattern in ["0*1*", "(00|11)*", "!(0!#)&!#", "_", "#"] {
        let compiled = stdout_json(&["compile", "--alphabet", "01", pattern]);
        let report = stdout_json(&["analyze", "--alphabet", "01", "--regex", pattern]);
        assert_eq!(compiled["states"], report["mult_phi"], "{pattern}");
    }
}

#[test]
fn starfree_verdicts() {
    let v = stdout_json(&["starfree", "--alphabet", "01", "0*1*"]);
    assert_eq!(v, serde_json::json!({"star_free": true}));
    let v = stdout_json(&["starfree", "--alphabet", "a", "(aa)*"]);
    assert_eq!(v["star_free"], false);
    assert_eq!(v["witness"], "a-action");
    let v = stdout_json(&["starfree", "--alphabet", "01", "_"]);
    assert_eq!(v, serde_json::json!({"star_free": true}));
}

#[test]
fn monoid_of_even_length_language_is_z2() {
    let v = stdout_json(&["monoid", "--alphabet", "a", "(aa)*"]);
    assert_eq!(v["size"], 2);
    assert_eq!(v["identity"], 0);
    assert_eq!(v["table"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(v["gen_image"], serde_json::json!({"a": 1}));
    assert_eq!(v["accept"], serde_json::json!([0]));
    assert_eq!(v["representatives"], serde_json::json!(["_", "a"]));
}

#[test]
fn monoid_of_star_concat_has_five_elements() {
    let v = stdout_json(&["monoid", "--alphabet", "01", "0*1*"]);
    assert_eq!(v["size"], 5);
    assert_eq!(
        v["representatives"],
        serde_json::json!(["_", "0", "1", "01", "10"])
    );
}

#[test]
fn monoid_of_full_language_is_trivial() {
    let v = stdout_json(&["monoid", "--alphabet", "01", "!#"]);
    assert_eq!(v["size"], 1);
}

#[test]
fn theta_classes_of_regex_are_complete() {
    let v = stdout_json(&["theta-classes", "--alphabet", "01", "--regex", "0*1*"]);
    assert_eq!(v["complete"], true);
    assert_eq!(v["count"], 3);
    assert_eq!(v["classes"][0]["sample"], "_");
}

#[test]
fn certificate_on_automaton_members() {
    let v = stdout_json(&[
        "certificate", "--alphabet", "01", "--regex", "0*1*", "--max-len", "2", "_", "1", "10",
    ]);
    assert_eq!(v["members"], serde_json::json!(["_", "1", "10"]));
    assert_eq!(v["matrix"][0][0], Value::Null);
    assert_eq!(v["matrix"][0][1], "0");
    assert_eq!(v["matrix"][1][2], "_");
}

#[test]
fn certificate_unseparated_pair_exits_1() {
    let out = recog(&["certificate", "--alphabet", "01", "--regex", "!#", "_", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not separated"), "{err}");
}

#[test]
fn witness_tree_counts_and_guard() {
    let v = stdout_json(&["witness-tree", "--depth", "2", "--branch", "2"]);
    assert_eq!(v["node_count"], 7);
    assert_eq!(v["root"]["children"].as_array().unwrap().len(), 2);
    assert_eq!(v["root"]["children"][0]["children"][0]["sigma"], serde_json::json!([0, 0]));

    let v = stdout_json(&["witness-tree", "--depth", "1", "--branch", "3"]);
    assert_eq!(v["node_count"], 4);

    assert_eq!(exit_code(&["witness-tree", "--depth", "6", "--branch", "2"]), 2);
}

#[test]
fn two_type_check_holds_at_6() {
    let v = stdout_json(&["two-type-check", "--max-len", "6"]);
    assert_eq!(v, serde_json::json!({"holds": true, "max_len": 6}));
}

#[test]
fn run_accepts_and_rejects() {
    let v = stdout_json(&["run", "--alphabet", "01", "--regex", "0*1*", "0011"]);
    assert_eq!(v["accepted"], true);
    let v = stdout_json(&["run", "--alphabet", "01", "--regex", "0*1*", "10"]);
    assert_eq!(v["accepted"], false);
    let v = stdout_json(&["run", "--oracle", "triple", "012"]);
    assert_eq!(v["accepted"], true);
}

#[test]
fn equivalent_on_regexes_and_files() {
    let v = stdout_json(&["equivalent", "--alphabet", "01", "0*1*", "1*0*"]);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["counterexample"].as_str().unwrap().len(), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let compiled = recog(&["compile", "--alphabet", "01", "0*1*"]);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(&compiled.stdout)
        .unwrap();
    let p = path.to_str().unwrap();
    let v = stdout_json(&["equivalent", "--dfa", p, "--dfa", p]);
    assert_eq!(v, serde_json::json!({"equivalent": true}));

    let v = stdout_json(&["minimize", "--dfa", p]);
    assert_eq!(v["states"], 3);
}

#[test]
fn exit_codes_per_failure_class() {
    // Usage / parse problems exit 2.
    assert_eq!(exit_code(&["compile", "--alphabet", "01", "0*("]), 2);
    assert_eq!(exit_code(&["compile", "--alphabet", "01", "02"]), 2);
    assert_eq!(exit_code(&["analyze", "--alphabet", "01"]), 2);
    assert_eq!(exit_code(&["analyze", "--oracle", "nonesuch"]), 2);
    // Automaton resource limits exit 3.
    assert_eq!(
        exit_code(&["compile", "--alphabet", "01", "0*1*", "--state-limit", "2"]),
        3
    );
    assert_eq!(
        exit_code(&["monoid", "--alphabet", "01", "0*1*", "--monoid-limit", "2"]),
        3
    );
    // Enumeration resource limits exit 4.
    assert_eq!(
        exit_code(&["analyze", "--oracle", "triple", "--max-len", "12"]),
        4
    );
}

#[test]
fn json_output_is_byte_stable() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["compile", "--alphabet", "01", "(0|1)*011"],
        vec!["analyze", "--alphabet", "012", "--oracle", "balanced01", "--max-len", "4"],
        vec!["monoid", "--alphabet", "01", "0*1*"],
        vec!["witness-tree", "--depth", "2", "--branch", "3"],
    ];
    for args in commands {
        let a = recog(&args);
        let b = recog(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?} output must be byte-stable");
    }
}
