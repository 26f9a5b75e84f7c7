mod common;

use std::process::Command;

use common::{check_golden, run_case, CASES};
use liemech::formats::Table;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liemech"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut all = vec!["liemech"];
    all.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = liemech::run(all, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn golden_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let failures: Vec<String> = CASES.iter().filter_map(|c| check_golden(c, &run_case(c, dir.path())).err()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_flag_and_bad_json_are_usage_errors() {
    assert_eq!(run(&["roots", "--family", "A"]).0, 2);
    let (code, out, err) = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        "[3, 2",
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "1",
        "--dt",
        "0.1",
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: usage: --params"), "{err}");
}

#[test]
fn domain_errors_exit_one_with_a_single_line() {
    let out = bin().args(["roots", "--family", "D", "--rank", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: unsupported-rank: "), "{err}");

    let (code, _, err) = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        "[3, -2, 1]",
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "1",
        "--dt",
        "0.1",
    ]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: invalid-parameter: "), "{err}");

    let (code, _, err) = run(&[
        "reconstruct",
        "--model",
        "rigid-body",
        "--a0",
        "[[2, 0, 0], [0, 1, 0], [0, 0, 1]]",
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "1",
        "--dt",
        "0.1",
    ]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: group-membership: "), "{err}");

    let (code, _, err) = run(&["cohomology", "--algebra", "no-such-algebra"]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn help_goes_to_standard_output() {
    for args in [&["--help"][..], &["scan", "--help"], &["moment", "check", "--help"]] {
        let (code, out, err) = run(args);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"), "{args:?}");
        assert!(err.is_empty());
    }
}

#[test]
fn roots_a2_json() {
    let (code, out, _) = run(&["roots", "--family", "A", "--rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["positive"].as_array().unwrap().len(), 3);
    assert_eq!(v["cartan"], serde_json::json!([[2, -1], [-1, 2]]));
}

#[test]
fn dot_output_encodes_multiplicity_and_arrow() {
    let (_, out, _) = run(&["roots", "--family", "B", "--rank", "2", "--format", "dot"]);
    assert!(out.contains("label=\"2\", penwidth=2"), "{out}");
    assert!(out.contains("dir="), "{out}");
}

#[test]
fn orbit_dimensions() {
    assert_eq!(run(&["orbit-dim", "--algebra", "cm3", "--point", r#"{"alpha": 2, "beta": 1}"#]).1, "12\n");
    assert_eq!(run(&["orbit-dim", "--algebra", "cm3", "--point", r#"{"alpha": 0, "beta": 1}"#]).1, "10\n");
    assert_eq!(run(&["orbit-dim", "--algebra", "poincare", "--point", r#"{"m0c": 1, "s0": [0, 0, 0]}"#]).1, "6\n");
    assert_eq!(run(&["orbit-dim", "--algebra", "so3", "--point", "[0.1, 0, 0]"]).1, "2\n");
    assert_eq!(run(&["orbit-dim", "--algebra", "so3", "--point", "[1, 2]"]).0, 2);
}

#[test]
fn three_steps_give_four_rows() {
    let (code, out, _) = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        "[3, 2, 1]",
        "--mu0",
        "[1, 0.1, 0.2]",
        "--T",
        "0.03",
        "--dt",
        "0.01",
    ]);
    assert_eq!(code, 0);
    let t = Table::read_from(out.as_bytes()).unwrap();
    assert_eq!(t.header, ["t", "mu1", "mu2", "mu3", "energy", "casimir"]);
    assert_eq!(t.rows.len(), 4);
    assert_eq!(t.rows[3][0], 0.03);
}

#[test]
fn params_accept_an_object_and_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("params.json");
    std::fs::write(&path, r#"{"inertia": [3, 2, 1]}"#).unwrap();
    let at = format!("@{}", path.display());
    let a = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        &at,
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "0.1",
        "--dt",
        "0.05",
    ]);
    let b = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        "[3, 2, 1]",
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "0.1",
        "--dt",
        "0.05",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn scan_rows_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("scan{jobs}.csv"));
        let p = path.to_string_lossy().into_owned();
        let (code, out, _) = run(&[
            "scan",
            "--model",
            "rigid-body",
            "--r",
            "2",
            "--samples",
            "7",
            "--grid",
            "60",
            "--jobs",
            jobs,
            "--out",
            &p,
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["bifurcation_values"].as_array().unwrap().len(), 3);
        files.push(std::fs::read(path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    let t = Table::read_from(&files[0][..]).unwrap();
    assert!(t.rows.windows(2).all(|w| w[0][0] < w[1][0]));
}

#[test]
fn moment_check_reports_both_residuals() {
    let (code, out, _) = run(&["--seed", "3", "moment", "check", "--group", "so3", "--samples", "20"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["lambda_left"].as_f64().unwrap() <= 1e-10);
    assert!(v["rho_right"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["seed"], 3);
}

#[test]
fn unwritable_output_is_an_io_error() {
    let (code, _, err) = run(&[
        "simulate",
        "--model",
        "rigid-body",
        "--params",
        "[3, 2, 1]",
        "--mu0",
        "[1, 0, 0]",
        "--T",
        "0.1",
        "--dt",
        "0.05",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: io: "), "{err}");
}
