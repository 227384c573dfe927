use serde_json::Value;
use std::process::{Command, Output};

fn slopelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slopelab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_worked_example() {
    let out = slopelab(&["verify", "m:-46/327,35/151,5/31,16/35,1/5", "--oracle-n", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["schema"], "slopelab-report/1");
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["degree"]["js"], "100/7");
    assert_eq!(r["degree"]["jx"], "-374/7");
    assert_eq!(r["surface"]["bs"], "100/7");
    assert_eq!(r["surface"]["two_chi_over_sheets"], "-374/7");
    assert_eq!(r["surface"]["M"], 14);
}

#[test]
fn verify_output_is_deterministic() {
    let a = slopelab(&["verify", "p:-5,5,7"]);
    let b = slopelab(&["verify", "p:-5,5,7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["oracle"]["matched"], true);
    assert_eq!(r["oracle"]["colors"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_writes_json_file() {
    let path = std::env::temp_dir().join(format!("slopelab-cli-{}.json", std::process::id()));
    let out = slopelab(&["verify", "p:-3,5,5", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(serde_json::from_slice::<Value>(&written).unwrap(), json(&out));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["verify", "p:-3,5"],
        vec!["verify", "x:1,2,3"],
        vec!["verify", "p:-3,4,4"],
        vec!["verify", "p:-2,3,7"],
        vec!["qip", "{\"a\":[0],\"b\":[1],\"t\":3}"],
        vec!["qip", "not json"],
    ] {
        let out = slopelab(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn forced_counterexample_exits_one() {
    let out = slopelab(&["verify", "p:-2,3,7", "--force", "--oracle-n", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["verdict"], "FAIL");
    assert_eq!(r["forced"], true);
}

#[test]
fn inconclusive_exits_zero() {
    let out = slopelab(&["verify", "p:-3,3,5", "--oracle-n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "INCONCLUSIVE");
}

#[test]
fn qip_subcommand() {
    let out = slopelab(&["qip", r#"{"a":[1,2,3],"b":[0,-1,2],"t":7}"#]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["minimizer"], serde_json::json!([4, 2, 1]));
    assert_eq!(r["value"], 27);
}

#[test]
fn jones_subcommand() {
    let out = slopelab(&["jones", "p:1,1,1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "v^-2 + v^-6 + v^-10 - v^-18");
}

#[test]
fn scan_pretzel_family() {
    let out = slopelab(&["scan", "pretzel", "--m", "2", "--max", "5", "--oracle-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("p:-3,5,5"));
    assert!(text.lines().last().unwrap().starts_with("verdicts:"));
}
