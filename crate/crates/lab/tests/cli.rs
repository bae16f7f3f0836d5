use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steinberg-lab"))
        .args(args)
        .env_remove("STEINBERG_LAB_CAP")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn steinberg_dim_example() {
    let out = lab(&["steinberg", "dim", "--n", "3", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["result"]["dim"], 8);
    assert_eq!(r["pass"], true);
    assert!(r["seed"].is_u64());
}

#[test]
fn steinberg_irreducible_example() {
    let out = lab(&["steinberg", "irreducible", "--n", "2", "--q", "3", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["result"]["verdict"], "reducible");
    assert_eq!(r["result"]["witness_dim"], 1);
}

#[test]
fn identity_verify_example() {
    let out = lab(&["identity", "verify", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["result"]["ok"], true);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["grpring", "coinv", "--group", "c2xc2", "--ell", "3", "--modules", "5", "--seed", "7"];
    let a = lab(&args);
    let b = lab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = lab(&["grpring", "coinv", "--group", "c2xc2", "--ell", "3", "--modules", "5", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn key_order_is_stable() {
    let out = lab(&["steinberg", "dim", "--n", "2", "--q", "3"]);
    let line = String::from_utf8(out.stdout).unwrap();
    let keys = ["\"task\"", "\"version\"", "\"seed\"", "\"params\"", "\"pass\"", "\"result\""];
    let pos: Vec<usize> = keys.iter().map(|k| line.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{line}");
    assert!(!line.contains("elapsed_ms"));
}

#[test]
fn exit_codes() {
    assert_eq!(lab(&["steinberg", "dim", "--q", "2"]).status.code(), Some(2));
    assert_eq!(lab(&["field", "--q", "6"]).status.code(), Some(2));
    assert_eq!(lab(&["field", "--q", "8", "--p", "3"]).status.code(), Some(2));
    assert_eq!(lab(&["suite", "unknown"]).status.code(), Some(2));
    assert_eq!(lab(&["nonsense"]).status.code(), Some(2));
    assert_eq!(lab(&["group", "--n", "4", "--q", "5", "--cap-group", "1000"]).status.code(), Some(3));
    assert_eq!(lab(&["steinberg", "irreducible", "--n", "2", "--q", "4", "--ell", "2"]).status.code(), Some(0));
    // ell dividing |G| is a recorded failure, not a usage error.
    let out = lab(&["grpring", "coinv", "--group", "c2", "--ell", "2", "--modules", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(records(&out)[0]["pass"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

#[test]
fn env_cap_and_flag_precedence() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_steinberg-lab"));
        c.args(["steinberg", "dim", "--n", "3", "--q", "2"]).args(extra);
        match env {
            Some(v) => c.env("STEINBERG_LAB_CAP", v),
            None => c.env_remove("STEINBERG_LAB_CAP"),
        };
        c.output().unwrap().status.code()
    };
    assert_eq!(run(Some("10"), &[]), Some(3));
    assert_eq!(run(Some("10"), &["--cap-group", "100000"]), Some(0));
    assert_eq!(run(Some("bogus"), &[]), Some(2));
}

#[test]
fn formats_and_timings() {
    let csv = lab(&["field", "--q", "4", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("task,version,seed,pass,params,result,failures,elapsed_ms"));
    assert_eq!(text.lines().count(), 2);
    let txt = lab(&["field", "--q", "4", "--format", "text", "--timings"]);
    let text = String::from_utf8(txt.stdout).unwrap();
    assert!(text.starts_with("PASS field") && text.contains("elapsed_ms="));
}

#[test]
fn suite_rows() {
    let out = lab(&["suite", "solomon-tits"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = records(&out);
    assert_eq!(rows.len(), 6);
    let dims: Vec<u64> = rows.iter().map(|r| r["result"]["expected_dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [2, 3, 5, 7, 8, 27]);
    let out = lab(&["suite", "gl2-matrix"]);
    assert_eq!(records(&out).len(), 12);
    let out = lab(&["suite", "cw"]);
    let systems: u64 = records(&out)
        .iter()
        .filter(|r| r["task"] == "cw-systems")
        .map(|r| r["result"]["verified"].as_u64().unwrap())
        .sum();
    assert_eq!(systems, 300);
}
