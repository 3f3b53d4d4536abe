//! The `ellsurf` binary: exit codes, JSON output and scan resumption.

use std::process::{Command, Output};

use ellsurf::polyparse::parse_poly;
use ellsurf::qmath::{parse_rat, RatFn};
use ellsurf::scanner::read_records;
use ellsurf::surfaces::{verify_section, Section, Surface};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellsurf")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Vec<serde_json::Value> {
    let out = run(&[&["--format", "json"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["identity", "rem11"]).status.code(), Some(0));
    assert_eq!(run(&["construct", "--theorem", "thm2", "--f", "3t"]).status.code(), Some(4));
    assert_eq!(run(&["construct", "--theorem", "thm2", "--f", "t^4 + t^2 + 1"]).status.code(), Some(2));
    assert_eq!(run(&["--bogus"]).status.code(), Some(4));
    let out = run(&["identity", "rem11"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("-375"));
}

#[test]
fn json_section_round_trips() {
    let v = &json(&["construct", "--theorem", "thm2", "--f", "t^4 + 3*t - 2"])[0];
    assert_eq!(v["verified"], true);
    let var = v["parameter"].as_str().unwrap();
    let field = |k: &str| RatFn::from_poly(parse_poly(v[k].as_str().unwrap(), var).unwrap());
    let sec = Section::new(var, field("base_change"), field("x"), field("y"));
    let surface = Surface::fx(parse_poly("t^4 + 3*t - 2", "t").unwrap()).unwrap();
    assert!(verify_section(&surface, &sec));
}

#[test]
fn json_chain_step() {
    let v = &json(&["fiber-chain", "--g", "t^6 + t^2 + 1", "--t0", "1", "--x0", "1", "--y0", "2", "--steps", "1"])[0];
    assert_eq!(parse_rat(v["t1"].as_str().unwrap()).unwrap(), parse_rat("-189/169").unwrap());
    assert_eq!(v["point"][0], "-3531/2197");
}

#[test]
fn scan_resumes_from_its_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g6.jsonl");
    let p = path.to_str().unwrap();
    assert!(run(&["scan", "g6", "--box", "1", "--out", p]).status.success());
    let first = read_records(&path).unwrap();
    assert!(!first.is_empty() && first.iter().all(|r| r.is_success()));
    assert!(run(&["scan", "g6", "--box", "1", "--out", p]).status.success());
    assert_eq!(read_records(&path).unwrap(), first);
}
