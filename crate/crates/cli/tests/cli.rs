use std::process::{Command, Output};

use adnil_cli::{RunConfig, EXIT_OK, EXIT_USAGE};
use clap::Parser;

fn adnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adnil")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(adnil(&["enumerate", "A2"]).status.code(), Some(EXIT_OK));
    assert_eq!(adnil(&["enumerate", "C3"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(adnil(&["enumerate", "A0"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(adnil(&["orbit", "G2", "--generators", "[1,1]"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(adnil(&["--frobnicate", "enumerate", "A2"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(adnil(&["verify", "5.2", "G2"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn errors_go_to_stderr() {
    let out = adnil(&["orbit", "A3", "--generators", "[1,1]"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "--seed", "7", "classes", "B3"];
    let (a, b) = (adnil(&args), adnil(&args));
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn classes_json_shape() {
    let out = adnil(&["--format", "json", "classes", "G2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let blocks = v.as_array().unwrap();
    let sizes: Vec<usize> = blocks.iter().map(|b| b["ideals"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [1, 2, 1, 3, 1]);
    assert!(blocks.iter().all(|b| b.get("orbit").map_or(true, |o| o.is_null())));
}

#[test]
fn orbit_of_principal_regular_ideal() {
    let out = adnil(&["orbit", "A3", "--generators", "[[1,0,0],[0,1,0],[0,0,1]]"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "4");
}

#[test]
fn defaults() {
    let c = RunConfig::try_parse_from(["adnil", "enumerate", "A1"]).unwrap();
    assert_eq!((c.seed, c.trials, c.budget, c.max_length), (0, 5, 12, 8));
}
