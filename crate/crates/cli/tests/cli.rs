use std::process::Command;

use pp3_cli::{run, Report};
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv: Vec<&str> = args.to_vec();
    argv.push("--json");
    let out = run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out));
    (out.code, v)
}

#[test]
fn local_quad_example() {
    let (code, v) = json(&["check", "--theorem", "local-quad", "--field", "Q(sqrt 2)", "--A", "3", "--B", "1", "--C", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["overall"], "applies-modulo-assumptions");
    assert!(!v["ledger"].as_array().unwrap().is_empty());
}

#[test]
fn overk_example() {
    let (code, v) = json(&["check", "--theorem", "overk", "--field", "Q", "--A", "3", "--B", "1", "--C", "1", "--sunit-bound", "6"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["overall"], "does-not-apply");
    let w = &v["results"]["witness"];
    assert_eq!((w["alpha"].as_str(), w["beta"].as_str(), w["gamma"].as_str()), (Some("1"), Some("-1"), Some("0")));
}

#[test]
fn frey_example() {
    let (code, v) = json(&["frey", "--field", "Q", "--A", "2", "--B", "1", "--C", "1", "--a", "1", "--b", "-1", "--c", "1", "--p", "5"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["c4"], "153");
    assert_eq!(r["delta"], "-54");
    assert_eq!(r["j"], "-132651/2");
    assert_eq!(r["j_from_mu"], r["j"]);
    assert_eq!(r["mu"], "-1/2");
}

#[test]
fn other_subcommands() {
    let (code, v) = json(&["field-info", "--field", "Q(sqrt 2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["fundamental_unit"], "1 + w");
    let (code, v) = json(&["class-group", "--field", "Q(sqrt -87)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["h"], 6);
    let (code, v) = json(&["sunit-solve", "--field", "Q", "--sunit-bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["classes"].as_array().unwrap().len(), 5);
    let (code, v) = json(&["check", "--theorem", "wk", "--field", "Q", "--A", "3", "--B", "1", "--C", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["theorem"], "wk");
    let (code, v) = json(&["check", "--theorem", "prop2", "--field", "Q(sqrt 29)"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["overall"], "does-not-apply");
    let (code, v) = json(&[
        "check", "--theorem", "local-odd", "--poly", "x^3 - 5", "--q", "5", "--h-k", "1", "--h-kzeta3", "1", "--coeff-shape",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["results"]["overall"], "applies-modulo-assumptions");
    let (code, _) = json(&["check", "--theorem", "local-odd", "--poly", "x^3 - 5", "--q", "7", "--h-k", "1", "--h-kzeta3", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(["no-such-command"]).code, 2);
    assert_eq!(run(["field-info", "--field", "Q(sqrt 4)"]).code, 2);
    assert_eq!(run(["frey", "--A", "2", "--a", "1", "--b", "1", "--c", "1", "--p", "5"]).code, 2);
    assert_eq!(run(["check", "--theorem", "local-odd", "--poly", "x^3 - 5"]).code, 2);
    let out = run(["search", "--field", "Q(sqrt 2)", "--p", "5", "--box-height", "30", "--work-cap", "1000"]);
    assert_eq!(out.code, 3, "{out:?}");
    assert!(out.stderr.contains("error"));
}

#[test]
fn report_round_trips_and_is_deterministic() {
    let args = ["sunit-solve", "--field", "Q(sqrt 2)", "--sunit-bound", "2", "--json"];
    let a = run(args);
    let b = run(args);
    assert_eq!(a, b);
    let r: Report = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(r.to_canonical_json() + "\n", a.stdout);
    assert!(r.version.starts_with("pp3 "));
    assert!(!a.stderr.is_empty());
}

#[test]
fn binary_matches_library() {
    let args = ["check", "--theorem", "local-quad", "--field", "Q(sqrt 29)", "--A", "1", "--B", "1", "--C", "1"];
    let out = Command::new(env!("CARGO_BIN_EXE_pp3")).args(args).output().unwrap();
    let lib = run(args);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    assert!(lib.stdout.contains("h-kzeta3"));
}
