use std::process::{Command, Output};

use serde_json::Value;

fn g2d5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2d5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn cover_reports_nondegenerate() {
    let out = g2d5(&["cover", "--a", "1/1", "--b", "2/1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["case"], "NonDegenerate");
    assert!(v["elapsed_ms"].is_u64());
    // summary on stderr unless --quiet
    assert!(String::from_utf8_lossy(&out.stderr).contains("cover: pass"));
    let quiet = g2d5(&["--quiet", "cover", "--a", "1/1", "--b", "2/1"]);
    assert!(quiet.stderr.is_empty());
}

#[test]
fn nielsen_row() {
    let out = g2d5(&["--quiet", "nielsen", "--group", "S5", "--types", "2^2,2^2,4,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["payload"]["classes"], 8);
}

#[test]
fn exit_codes() {
    let out = g2d5(&["--quiet", "cover", "--a", "-1/2", "--b", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["status"], "error");
    assert_eq!(v["payload"]["error"], "excluded-parameter");

    assert_eq!(g2d5(&["cover", "--a", "1"]).status.code(), Some(2));
    assert_eq!(g2d5(&["cover", "--a", "x", "--b", "1"]).status.code(), Some(2));
    assert_eq!(g2d5(&["cover", "--a", "1", "--b", "1", "--c", "1"]).status.code(), Some(2));
    assert_eq!(g2d5(&["--quiet", "verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(g2d5(&["--precision-bits", "4096", "--quiet", "invariants", "--a", "1", "--b", "2"]).status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical_up_to_timing() {
    let args = ["--quiet", "invariants", "--a", "3", "--b", "7/2"];
    let strip = |o: Output| {
        let mut v = report(&o);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(g2d5(&args)), strip(g2d5(&args)));
}

#[test]
fn invariants_from_coefficients() {
    let out = g2d5(&["--quiet", "invariants", "--coeffs", "-1,0,0,0,0,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["payload"]["curve"]["degree"], 6);
    assert_eq!(v["payload"]["reduced_aut"]["order"], 12);
}

#[test]
fn locus_recover_round_trip() {
    let v = report(&g2d5(&["--quiet", "locus", "--case", "I", "--a", "6"]));
    assert_eq!(v["payload"]["T"], "1/100");
    let f = &v["payload"]["formulas"];
    let out = g2d5(&[
        "--quiet",
        "recover",
        "--case",
        "I",
        "--i1",
        f["i1"].as_str().unwrap(),
        "--i2",
        f["i2"].as_str().unwrap(),
        "--i3",
        f["i3"].as_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["payload"]["T"], "1/100");
}

#[test]
fn case3_locus_model() {
    let v = report(&g2d5(&["--quiet", "locus", "--case", "III", "--a", "1"]));
    assert_eq!(v["status"], "pass", "{v}");
    assert_eq!(v["payload"]["y3bar_j"], "702595369/72900");
}

#[test]
fn verify_fast_suites() {
    let out = g2d5(&["--quiet", "--seed", "7", "verify", "--suite", "eq4,eq11,deltaw,roundtrip"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["payload"]["seed"], 7);
    let names: Vec<&str> = v["payload"]["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["eq4", "eq11", "deltaw", "roundtrip"]);
}

#[test]
fn human_output_without_json() {
    let out = g2d5(&["--json", "false", "--quiet", "nielsen", "--group", "A5", "--types", "2^2,2^2,2^2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("nielsen: pass"), "{text}");
    assert!(text.contains("classes 9"));
}
