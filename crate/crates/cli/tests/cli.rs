use std::process::{Command, Output};

use satake::vinberg::CSign;
use satake_cli::config::{Format, RunConfig};
use serde_json::Value;

fn satake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn lfactor_standard_c2() {
    let out = satake(&["lfactor", "--type", "C", "--rank", "2", "--rep", "std", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["pass"], true);
    assert_eq!(v["denominator"].as_array().unwrap().len(), 5);
}

#[test]
fn lfactor_trivial_is_geometric() {
    let v = json(&satake(&["lfactor", "--type", "A", "--rank", "1", "--rep", "trivial", "--degree", "3"]));
    assert_eq!(v["denominator"].as_array().unwrap().len(), 2);
    assert!(v["series"].as_array().unwrap().iter().all(|c| c == &v["series"][0]));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(satake(&["lfactor", "--type", "C", "--rank", "two"]).status.code(), Some(2));
    assert_eq!(satake(&["lfactor", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(satake(&["doubling", "--case", "sp", "--n", "3"]).status.code(), Some(2));
    assert_eq!(satake(&["bk", "--case", "sp", "--n", "4", "--check", "bogus"]).status.code(), Some(2));
    assert_eq!(satake(&["monoid", "--type", "A", "--rank", "1", "--lambda", "1,1"]).status.code(), Some(2));
}

#[test]
fn monoid_sym_powers() {
    for (k, want) in [("2", "GL1 x SL2"), ("3", "GL2"), ("10", "GL1 x SL2")] {
        let v = json(&satake(&["monoid", "--sym-power", k]));
        assert_eq!(v["monoid"]["units"]["resulting_isomorphism_label"], want);
    }
    let v = json(&satake(&["monoid", "--type", "B", "--rank", "2", "--lambda", "0,1"]));
    assert_eq!(v["units"]["resulting_isomorphism_label"], "GSp4");
}

#[test]
fn bk_ledger() {
    let out = satake(&["bk", "--case", "sp", "--n", "4", "--check", "hwv,dp,gamma,mellin,fourier,shift", "--degree", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ids: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["hwv", "dp", "gamma", "mellin", "fourier", "shift"]);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["pass"] == true));
}

#[test]
fn doubling_report() {
    let v = json(&satake(&["doubling", "--case", "o", "--n", "4"]));
    assert_eq!(v["case"], "orthogonal_even");
    assert_eq!(v["fixed_point"], true);
    assert_eq!(v["pass"], true);
}

#[test]
fn gamma_commands() {
    for s0 in ["-2", "-1", "0", "1", "2"] {
        let out = satake(&["gamma", "--tate", s0]);
        assert_eq!(out.status.code(), Some(0), "s0_2 = {s0}");
    }
    let v = json(&satake(&["gamma", "--a", "1", "--b2", "0"]));
    assert!(v["gamma"].is_string());
    assert_eq!(satake(&["gamma"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = satake(&["verify", "--suite", "doubling", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let out = satake(&["verify", "--suite", "bk", "--n-max", "6", "--degree", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["entries"].as_array().unwrap().iter().all(|e| e.get("elapsed_ms").is_none()));
}

#[test]
fn flipped_sign_fails_with_its_id() {
    let out = satake(&["verify", "--suite", "all", "--n-max", "4", "--flip-normalizer-sign"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failing: Vec<&str> =
        v["entries"].as_array().unwrap().iter().filter(|e| e["pass"] == false).map(|e| e["id"].as_str().unwrap()).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|id| *id == "gamma_normalizer"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--n-max", "4"];
    assert_eq!(satake(&args).stdout, satake(&args).stdout);
}

#[test]
fn timings_flag_adds_elapsed() {
    let v = json(&satake(&["verify", "--suite", "doubling", "--n-max", "2", "--timings"]));
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["elapsed_ms"].is_number()));
}

#[test]
fn csv_and_pretty_formats() {
    let out = satake(&["verify", "--suite", "doubling", "--n-max", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("id,case,n,pass"));
    let out = satake(&["doubling", "--case", "sp", "--n", "2", "--format", "pretty"]);
    assert!(String::from_utf8(out.stdout).unwrap().lines().any(|l| l.starts_with("fixed_point")));
}

#[test]
fn config_file_sets_defaults() {
    let dir = std::env::temp_dir().join(format!("satake-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    std::fs::write(&path, "n_max = 2\nformat = \"csv\"\n").unwrap();
    let out = satake(&["verify", "--suite", "doubling", "--config", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,case,n,pass"));
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(2).unwrap().parse::<usize>().unwrap() <= 2));
    // flags win over the file
    let out = satake(&["verify", "--suite", "doubling", "--n-max", "1", "--format", "json", "--config", path.to_str().unwrap()]);
    assert_eq!(json(&out)["n_max"], 1);
    std::fs::write(&path, "bogus = 1\n").unwrap();
    assert_eq!(satake(&["verify", "--config", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_config_round_trip() {
    let cfg = RunConfig {
        subcommand: "bk".into(),
        case: Some("sp".into()),
        n: Some(4),
        n_max: 6,
        degree: 10,
        format: Format::Pretty,
        c_sign: CSign::Det,
    };
    assert_eq!(RunConfig::from_json(&cfg.to_json()).unwrap(), cfg);
    assert_eq!(RunConfig::from_json(&RunConfig::default().to_json()).unwrap(), RunConfig::default());
    assert!(RunConfig::from_json("{").is_err());
}
