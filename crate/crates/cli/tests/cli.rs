use std::process::{Command, Output};

use superhopf_cli::Outcome;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superhopf")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn normalize_odd_anticommutator() {
    assert_eq!(stdout(&["normalize", "V*U"]), "-U*V - Y - Z");
}

#[test]
fn normalize_leading_minus() {
    assert_eq!(stdout(&["normalize", "-a2 + a2 - 1/2"]), "-1/2");
}

#[test]
fn coproduct_of_a3() {
    assert_eq!(stdout(&["coproduct", "a3"]), "1 (x) a3 + b1 (x) c2 + 2*a2 (x) a2 + a3 (x) 1");
}

#[test]
fn antipode_of_a3() {
    assert_eq!(stdout(&["antipode", "a3"]), "b1*c2 - a3 + 2*a2^2");
}

#[test]
fn act_and_coact() {
    assert_eq!(stdout(&["act", "W", "c3"]), "-d3 + a3*d1");
    assert_eq!(stdout(&["coact", "W"]), "Y (x) b1 + V (x) d1 + W (x) 1");
}

#[test]
fn hmul_applies_the_action() {
    assert_eq!(stdout(&["hmul", "1 # X", "a2 # 1"]), "a2 # X - b1*c2 # 1 + 3*a3 # 1 - 2*a2^2 # 1");
}

#[test]
fn json_terms() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "normalize", "-3/2*a2^2*b1"])).unwrap();
    assert_eq!(v["terms"][0]["coeff"], "-3/2");
    assert_eq!(v["terms"][0]["even"], serde_json::json!([["a", 2, 2]]));
    assert_eq!(v["terms"][0]["odd"], serde_json::json!([["b", 1]]));
}

#[test]
fn latex_tensor() {
    let s = stdout(&["--format", "latex", "coproduct", "a2"]);
    assert_eq!(s, "1 \\ot a_{2} + a_{2} \\ot 1");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "coproduct", "b3*c2"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn parse_errors_exit_2() {
    let out = run(&["normalize", "a2 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
    assert_eq!(run(&["normalize", "q7"]).status.code(), Some(2));
    assert_eq!(run(&["act", "a2", "X"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "classical"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("suite classical: PASS"));
}

#[test]
fn oracle_check_passes() {
    let out = run(&["--format", "json", "oracle", "--check", "coproduct", "--max-index", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn failure_maps_to_exit_1() {
    assert_eq!(Outcome { text: String::new(), ok: false }.exit_code(), 1);
    assert_eq!(Outcome { text: String::new(), ok: true }.exit_code(), 0);
}
