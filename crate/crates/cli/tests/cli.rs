//! End-to-end tests of the `skewtab` binary and its exit-code contract.

use std::process::{Command, Output};

fn skewtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewtab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_reports_21_vertices() {
    let out = skewtab(&["build", "3,3,1/2,0,0;3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("21 vertices"));
}

#[test]
fn build_json_document() {
    let out = skewtab(&["build", "1/0;2", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["v"], 1);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 2);
}

#[test]
fn build_dot_for_half_spin() {
    let out = skewtab(&["build", "D:4,1", "--dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    // 8 node lines
    assert_eq!(
        text.lines()
            .filter(|l| l.contains("label=") && !l.contains("->"))
            .count(),
        8
    );
}

#[test]
fn verify_shapes_and_orth() {
    let out = skewtab(&["verify", "3,3/2,0;3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("certificate"));
    let out = skewtab(&["verify", "B:3,2"]);
    assert!(out.status.success());
}

#[test]
fn verify_mutated_file_fails_with_witness() {
    let dir = std::env::temp_dir();
    let good = dir.join("skewtab_cli_good.json");
    let bad = dir.join("skewtab_cli_bad.json");
    let out = skewtab(&["export", "3,3/2,0;3", "--out", good.to_str().unwrap()]);
    assert!(out.status.success());
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    doc["edges"][0]["X"] = serde_json::json!("5/7");
    std::fs::write(&bad, doc.to_string()).unwrap();

    let out = skewtab(&["verify", good.to_str().unwrap()]);
    assert!(out.status.success());
    let out = skewtab(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decompose_lists_constituents() {
    let out = skewtab(&["decompose", "3,3,1/2,0,0;3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(1,2) x 1 x dim 15"));
    assert!(text.contains("(2,0) x 1 x dim 6"));

    let out = skewtab(&["decompose", "4,3,1/2,0,0;3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = skewtab(&["decompose", "1/0;2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(1) x 1 x dim 2"));
}

#[test]
fn sweep_small_families() {
    let out = skewtab(&["sweep", "cells<=4,n<=3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));

    let out = skewtab(&["sweep", "B:n<=3,m<=1"]);
    assert!(out.status.success());
}

#[test]
fn exit_codes_are_stable() {
    // parse error
    let out = skewtab(&["build", "junk"]);
    assert_eq!(out.status.code(), Some(2));
    // constraint violation: a column of three cells with bound two
    let out = skewtab(&["build", "1,1,1/0,0,0;2"]);
    assert_eq!(out.status.code(), Some(3));
    // non-dominant weight
    let out = skewtab(&["decompose", "3,3/2,0;3", "--nu", "-1,0"]);
    assert_eq!(out.status.code(), Some(3));
}
