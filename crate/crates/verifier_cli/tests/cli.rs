use std::process::Command;

use clap::Parser;
use duality_theorems::CheckId;
use verifier_cli::config::{parse_suites, DimRange};
use verifier_cli::{run, Args, Config, ConfigError, Plan, Task};

fn args(list: &[&str]) -> Args {
    Args::try_parse_from(std::iter::once("verify-duality").chain(list.iter().copied())).unwrap()
}

#[test]
fn ranges_parse_inclusively() {
    assert_eq!("1..3".parse::<DimRange>().unwrap().0, 1..=3);
    assert_eq!("2".parse::<DimRange>().unwrap().0, 2..=2);
    assert_eq!("0..=1".parse::<DimRange>().unwrap().0, 0..=1);
    assert!("3..1".parse::<DimRange>().is_err());
    assert!("a..b".parse::<DimRange>().is_err());
}

#[test]
fn suites_parse_and_normalize() {
    assert_eq!(parse_suites("theorem,key_lemma,theorem").unwrap(), vec![CheckId::KeyLemma, CheckId::Theorem]);
    assert!(!parse_suites("all").unwrap().contains(&CheckId::SelfTest));
    assert_eq!(parse_suites("nope"), Err(ConfigError::Suite("nope".into())));
}

#[test]
fn plain_model_rejects_odd_dimensions() {
    let err = Config::from_args(&args(&["--odd-dim", "0..1"])).unwrap_err();
    assert!(matches!(err, ConfigError::OddPlain(_)));
}

#[test]
fn self_test_replaces_the_suites() {
    let config = Config::from_args(&args(&["--self-test", "--suite", "theorem"])).unwrap();
    let plan = Plan::new(&config);
    assert_eq!(plan.tasks, vec![Task::SelfTest]);
    let report = run(&config);
    assert_eq!((report.summary.fail, report.exit_code()), (1, 1));
}

#[test]
fn degrees_beyond_the_cap_are_skipped() {
    let config = Config::from_args(&args(&["--even-dim", "2", "--flavor", "alt", "--g-max", "3", "--cap", "2", "--suite", "key_lemma"]))
        .unwrap();
    let report = run(&config);
    let skipped: Vec<_> = report.results().filter(|r| r.is_skipped()).collect();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|r| r.params.degrees["g"] == 3));
    assert!(report.all_passed());
}

#[test]
fn json_report_has_the_documented_keys() {
    let config = Config::from_args(&args(&["--even-dim", "2", "--g-max", "2", "--suite", "theorem,p2"])).unwrap();
    let value: serde_json::Value = serde_json::from_str(&run(&config).to_json()).unwrap();
    for key in ["config", "results", "summary", "elapsed_ms"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    let first = &value["results"][0];
    for key in ["id", "params", "status", "witnesses", "residual", "ms"] {
        assert!(first.get(key).is_some(), "missing result key {key}");
    }
    let witnesses = value["results"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["witnesses"].as_array().unwrap().iter())
        .map(|w| w["value"].as_str().unwrap().to_string())
        .collect::<Vec<_>>();
    assert!(witnesses.contains(&"-1/2".to_string()));
}

#[test]
fn usage_errors_exit_with_status_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_verify-duality"))
        .args(["--even-dim", "5..1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_verify-duality"))
        .args(["--flavor", "neither"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn passing_run_exits_with_status_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_verify-duality"))
        .args(["--even-dim", "1..2", "--g-max", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("0 failed"));
}
