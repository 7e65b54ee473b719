use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn bcx_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bcx"));
    cmd.args(args).current_dir(fixtures()).env_remove("BCX_TOL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("bcx runs")
}

fn bcx(args: &[&str]) -> Output {
    bcx_with(args, &[])
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("structured output is JSON")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bcx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn inconsistent_solve_exits_zero() {
    let out = bcx(&["solve", "e1.txt", "rhs_e2.txt"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: inconsistent"), "{}", text);
}

#[test]
fn human_rank_report() {
    let out = bcx(&["rank", "strict.txt"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("row rank 1"), "{}", text);
    assert!(text.contains("idempotent row rank 2"), "{}", text);
}

#[test]
fn classify_random_3x5_is_infinite() {
    let out = bcx(&["classify", "random35.txt", "--output", "structured"]);
    assert_eq!(json(&out)["result"]["homogeneous"], "infinite");
}

#[test]
fn verify_accepts_solutions_and_rejects_others() {
    let good = write_temp("good.txt", "1 1\n[1 ; 5 + 2i]\n");
    let bad = write_temp("bad.txt", "1 1\n[2 ; 0]\n");
    let out = bcx(&["verify", "e1.txt", "rhs_e1.txt", good.to_str().unwrap(), "--output", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["member"], true);
    let out = bcx(&["verify", "e1.txt", "rhs_e1.txt", bad.to_str().unwrap(), "--output", "structured"]);
    assert_eq!(json(&out)["result"]["member"], false);
}

#[test]
fn approx_mode_reports_tolerance() {
    let out = bcx(&["rank", "strict.txt", "--approx", "--tol", "1e-9", "--output", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["policy"]["mode"], "approx");
    assert_eq!(v["policy"]["pivot_tolerance"], 1e-9);
    assert_eq!(v["result"]["rho_r"], 1);
    assert_eq!(v["result"]["rho_mr"], 2);
}

#[test]
fn tolerance_env_var_only_applies_in_approx_mode() {
    let out = bcx_with(&["rank", "strict.txt", "--approx", "--output", "structured"], &[("BCX_TOL", "1e-7")]);
    assert_eq!(json(&out)["policy"]["pivot_tolerance"], 1e-7);

    let out = bcx_with(&["rank", "strict.txt", "--output", "structured"], &[("BCX_TOL", "1e-7")]);
    let v = json(&out);
    assert_eq!(v["policy"]["mode"], "exact");
    assert!(v["policy"].get("pivot_tolerance").is_none());

    let out = bcx_with(
        &["rank", "strict.txt", "--approx", "--tol", "1e-5", "--output", "structured"],
        &[("BCX_TOL", "1e-7")],
    );
    assert_eq!(json(&out)["policy"]["pivot_tolerance"], 1e-5);

    let out = bcx_with(&["rank", "strict.txt", "--approx"], &[("BCX_TOL", "lots")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn approx_solve_matches_exact_status() {
    for (rhs, status) in [("rhs_e1.txt", "infinite"), ("rhs_e2.txt", "inconsistent")] {
        let out = bcx(&["solve", "e1.txt", rhs, "--approx", "--output", "structured"]);
        assert_eq!(json(&out)["result"]["status"], status);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bcx(&["rank"]).status.code(), Some(2));
    assert_eq!(bcx(&["solve", "e1.txt"]).status.code(), Some(2));
    assert_eq!(bcx(&["rank", "strict.txt", "rhs_e1.txt"]).status.code(), Some(2));
    assert_eq!(bcx(&["rank", "strict.txt", "--tol", "1e-3"]).status.code(), Some(2));
    assert_eq!(bcx(&["rank", "strict.txt", "--approx", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(bcx(&["frobnicate", "strict.txt"]).status.code(), Some(2));
}

#[test]
fn parse_and_io_errors_exit_one_with_position() {
    let broken = write_temp("broken.txt", "2 2\n1 | 2\n3 | 4 + +\n");
    let out = bcx(&["rank", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 9"), "{}", err);

    let out = bcx(&["rank", "does-not-exist.txt"]);
    assert_eq!(out.status.code(), Some(1));

    let out = bcx(&["solve", "identity2.txt", "rhs_e1.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("dimension mismatch"));
}

#[test]
fn structured_output_is_byte_stable() {
    for args in [
        &["solve", "tall.txt", "rhs_tall_ok.txt", "--output", "structured"][..],
        &["decompose", "random35.txt", "--output", "structured"][..],
    ] {
        assert_eq!(bcx(args).stdout, bcx(args).stdout);
    }
}
