//! End-to-end checks of the binary: exit codes, JSON output shape, and the
//! documented file formats.

use std::io::Write;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schurzeta"))
}

fn write_tmp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("schurzeta-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn eval_reports_exact_value() {
    let path = write_tmp(
        "row.json",
        r#"{"shape":{"outer":[2]},"entries":[[1,1,2],[1,2,2]]}"#,
    );
    let out = bin()
        .args(["eval", "--tableau"])
        .arg(&path)
        .args(["--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "21/16");
    assert_eq!(v["backend"], "exact");
}

#[test]
fn verify_jt_passes_and_exits_zero() {
    let out = bin()
        .args([
            "verify", "jt", "--shape", "2 2 1", "--diag", r#"{"-2":2,"-1":1,"0":2,"1":3}"#,
            "--n", "4", "--kind", "h",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    assert_eq!(v["equal"], true);
}

#[test]
fn missing_file_exits_two() {
    let out = bin()
        .args(["eval", "--tableau", "/nonexistent/x.json", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_json_contains_reference_value() {
    let out = bin()
        .args(["tables", "--n", "3", "--k", "1", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(r#""coeff":"1/840""#), "{text}");
}

#[test]
fn duality_dual_and_check_round_trip() {
    let left = r#"{"shape":{"outer":[3,3,2],"inner":[2,1]},"entries":[[1,3,2],[2,2,1],[2,3,2],[3,1,2],[3,2,2]]}"#;
    let path = write_tmp("ribbon.json", left);
    let out = bin()
        .args(["duality", "dual", "--tableau"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dual"], "ribbon");
    assert_eq!(v["shape"]["outer"], serde_json::json!([3, 1]));

    let right = r#"{"shape":{"outer":[3,1]},"entries":[[1,1,2],[1,2,3],[1,3,2],[2,1,2]]}"#;
    let pair = write_tmp("pair.json", &format!(r#"{{"left":{left},"right":{right}}}"#));
    let out = bin()
        .args(["duality", "check", "--pair"])
        .arg(&pair)
        .args(["--tol", "1e-4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn mismatched_pair_exits_one() {
    let a = r#"{"shape":{"outer":[1]},"entries":[[1,1,2]]}"#;
    let b = r#"{"shape":{"outer":[1]},"entries":[[1,1,3]]}"#;
    let pair = write_tmp("bad_pair.json", &format!(r#"{{"left":{a},"right":{b}}}"#));
    let out = bin()
        .args(["duality", "check", "--pair"])
        .arg(&pair)
        .args(["--tol", "1e-3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_counts() {
    for (shape, expect) in [("3 1", 12u64), ("2 1 1", 6)] {
        let out = bin()
            .args(["enumerate", "preceq", "--shape", shape, "--count"])
            .output()
            .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["count"], expect);
    }
}

#[test]
fn qsym_identity_subcommand() {
    let out = bin()
        .args([
            "qsym", "identity", "--which", "jt", "--shape", "2 2", "--diag",
            r#"{"-1":1,"0":2,"1":3}"#,
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["equal"], true);
}

#[test]
fn sweep_output_is_deterministic() {
    let run = || {
        bin()
            .args(["verify", "sweep", "--suite", "smoke"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}
