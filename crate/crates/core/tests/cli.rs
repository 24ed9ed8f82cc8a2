use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ordertop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordertop")).args(args).output().expect("binary runs")
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ordertop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn last_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().last().expect("some output")).unwrap()
}

const SIERPINSKI: &str = r#"{"kind":"topology","n":2,"opens":[[],[1],[0,1]]}"#;

#[test]
fn verify_exit_codes() {
    let ok = ordertop(&["verify", "--suite", "thm-3.3-roundtrip", "--n", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(last_json(&ok)["failed"], 0);

    let broken = ordertop(&["verify", "--suite", "prop-3.1", "--n", "3", "--fault-seed", "5"]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(last_json(&broken)["first_counterexample"].is_object());

    assert_eq!(ordertop(&["verify", "--suite", "cor-4.8", "--n", "9"]).status.code(), Some(2));
    assert_eq!(ordertop(&["verify", "--suite", "no-such", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn verbose_prints_one_line_per_instance() {
    let out = ordertop(&["verify", "--suite", "thm-9.3", "--n", "3", "--verbose", "--workers", "2"]);
    let lines: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 30);
    assert!(lines[..29].iter().all(|l| l["record"] == "verdict"));
    assert_eq!(lines[29]["record"], "report");
}

#[test]
fn hunt_exit_codes() {
    let exhausted = ordertop(&["hunt", "--assume", "", "--refute", "compact", "--n", "3"]);
    assert_eq!(exhausted.status.code(), Some(0));
    assert_eq!(last_json(&exhausted)["record"], "exhausted");

    let found = ordertop(&["hunt", "--assume", "semi-qospace", "--refute", "t0", "--n", "2", "--kind", "topology"]);
    assert_eq!(found.status.code(), Some(1), "{}", String::from_utf8_lossy(&found.stderr));
    assert_eq!(last_json(&found)["instance"]["opens"], serde_json::json!([[], [0, 1]]));
    assert_eq!(ordertop(&["hunt", "--assume", "bogus", "--refute", "t0", "--n", "2"]).status.code(), Some(2));
    let t0 = ordertop(&["hunt", "--refute", "t0", "--n", "2", "--kind", "topology"]);
    assert_eq!(t0.status.code(), Some(1));
    assert_eq!(last_json(&t0)["record"], "counterexample");
}

#[test]
fn check_derive_and_invariants() {
    let path = write_temp("sierpinski.json", SIERPINSKI);
    let p = path.to_str().unwrap();
    let holds = ordertop(&["check", "--class", "compact,core-stable", "--in", p]);
    assert_eq!(holds.status.code(), Some(0));
    assert_eq!(ordertop(&["check", "--class", "t1-ordered", "--in", p]).status.code(), Some(1));

    let derived = ordertop(&["derive", "--op", "patch:υ", "--in", p]);
    assert_eq!(derived.status.code(), Some(0));
    let v = last_json(&derived);
    assert_eq!(v["kind"], "ordered_space");
    assert_eq!(v["opens"].as_array().unwrap().len(), 4);

    let inv = last_json(&ordertop(&["invariants", "--in", p]));
    assert_eq!(inv["cofinality"]["value"], 2);
    assert_eq!(inv["all_equal"], true);

    let bad = write_temp("bad.json", r#"{"kind":"topology","n":2,"opens":[[0],[1]]}"#);
    assert_eq!(ordertop(&["derive", "--op", "scott", "--in", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(ordertop(&["derive", "--op", "patch:zz", "--in", p]).status.code(), Some(2));
}

#[test]
fn convert_roundtrip_through_the_cli() {
    let path = write_temp("sierpinski-convert.json", SIERPINSKI);
    let p = path.to_str().unwrap();
    let out = ordertop(&["convert", "--from", "t0-core-space", "--to", "based-domain", "--in", p]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let domain = last_json(&out);
    assert_eq!(domain["kind"], "based-domain");

    let back_in = write_temp("domain.json", &domain.to_string());
    let back = last_json(&ordertop(&["convert", "--to", "t0-core-space", "--in", back_in.to_str().unwrap()]));
    assert_eq!(back["payload"], serde_json::from_str::<Value>(SIERPINSKI).unwrap());
}

#[test]
fn enumerate_prints_records() {
    let out = ordertop(&["enumerate", "--kind", "partial-order", "--n", "3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 19);
    assert_eq!(ordertop(&["enumerate", "--kind", "topology", "--n", "0"]).status.code(), Some(2));
}
