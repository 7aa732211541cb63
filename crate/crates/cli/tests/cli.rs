//! End-to-end tests of the `sgag` binary: exit-code contract, JSON shapes,
//! CSV tables, and scan determinism.

use std::path::Path;
use std::process::{Command, Output};

fn sgag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn info_prints_invariants() {
    let out = sgag(&["info", "3,7,8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("frobenius f    5"));
    assert!(text.contains("conductor c    6"));
    assert!(text.contains("genus          4"));
    assert!(text.contains("type r         2"));
}

#[test]
fn info_handles_dvr_and_bad_input() {
    let out = sgag(&["info", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("DVR"));

    let out = sgag(&["info", "4,6"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("gcd"));

    let out = sgag(&["info", "3,x"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn classify_verdicts() {
    for (gens, verdict) in [
        ("3,4,5", "almost Gorenstein, not Gorenstein"),
        ("3,7,8", "neither"),
        ("3,5", "Gorenstein"),
    ] {
        let out = sgag(&["classify", gens]);
        assert_eq!(exit_code(&out), 0, "{gens}");
        assert!(
            stdout(&out).contains(&format!("verdict: {verdict}")),
            "{gens}"
        );
    }
}

#[test]
fn classify_json_schema() {
    let out = sgag(&["classify", "3,4,5", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["semigroup"]["generators"], serde_json::json!([3, 4, 5]));
    assert_eq!(doc["semigroup"]["frobenius"], serde_json::json!(2));
    assert_eq!(
        doc["verdict"],
        serde_json::json!("AlmostGorensteinNotGorenstein")
    );
    assert_eq!(doc["invariants"]["e1"], serde_json::json!(2));
    assert_eq!(
        doc["batteries"]["thm37"]["symmetric"],
        serde_json::json!(false)
    );
    assert_eq!(
        doc["batteries"]["thm316"]["ag_not_gorenstein"],
        serde_json::json!(true)
    );
}

#[test]
fn herzog_output_and_error_paths() {
    let out = sgag(&["herzog", "3,7,8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("X^2"));
    assert!(text.contains("X^3"));
    assert!(text.contains("l=22 n=23 b=1"));
    assert!(text.contains("I = (t^6, t^7)"));
    assert!(text.contains("almost Gorenstein (by matrix): false"));

    // Symmetric 3-generated: complete intersection, matrix undefined.
    let out = sgag(&["herzog", "4,5,6"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("complete intersection"));

    let out = sgag(&["herzog", "3,5"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn herzog_json_mirror() {
    let out = sgag(&["herzog", "4,7,9", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["matrix"]["alpha"], serde_json::json!(3));
    assert_eq!(doc["matrix"]["b"], serde_json::json!(5));
    assert_eq!(doc["closed_form"]["c"], serde_json::json!(7));
    assert_eq!(doc["almost_gorenstein"], serde_json::json!(true));
}

#[test]
fn hilbert_csv_table() {
    let out = sgag(&["hilbert", "3,5", "--ideal", "5,9", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "n,exact,polynomial,agree");
    // 5(n+1) − 2 from n = 0 on.
    assert_eq!(lines[1], "0,3,3,true");
    assert_eq!(lines[2], "1,8,8,true");
    assert_eq!(lines[3], "2,13,13,true");
    assert_eq!(lines[4], "3,18,18,true");
}

#[test]
fn hilbert_rejects_bad_ideals() {
    let out = sgag(&["hilbert", "3,5,7", "--ideal", "0,3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unit ideal"));

    let out = sgag(&["hilbert", "3,5,7", "--ideal", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("outside"));
}

#[test]
fn principal_ideal_hilbert_column_is_linear() {
    let out = sgag(&["hilbert", "3,7,8", "--ideal", "3", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 0);
    for (n, line) in stdout(&out).trim_end().lines().skip(1).enumerate() {
        let expected = format!("{n},{},{},true", 3 * (n as i64 + 1), 3 * (n as i64 + 1));
        assert_eq!(line, expected);
    }
}

#[test]
fn scan_is_deterministic_across_workers_and_formats() {
    let dir = std::env::temp_dir().join("sgag-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("scan-a.json");
    let b = dir.join("scan-b.json");
    let out = sgag(&[
        "scan",
        "--genus-max",
        "7",
        "--workers",
        "1",
        "--out",
        a.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let out = sgag(&[
        "scan",
        "--genus-max",
        "7",
        "--workers",
        "3",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b, "scan output differs across worker counts");

    let doc: serde_json::Value = serde_json::from_slice(&bytes_a).unwrap();
    assert_eq!(
        doc["semigroups"],
        serde_json::json!(1 + 1 + 2 + 4 + 7 + 12 + 23 + 39)
    );

    let csv_path = dir.join("scan.csv");
    let out = sgag(&[
        "scan",
        "--genus-max",
        "4",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("law,checked,passed,counterexamples\n"));
}

#[test]
fn scan_env_var_and_check_selection() {
    let out = Command::new(env!("CARGO_BIN_EXE_sgag"))
        .args(["scan", "--genus-max", "3", "--checks", "cor317,thm51"])
        .env("SGAG_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["checks"], serde_json::json!(["cor317", "thm51"]));

    let out = sgag(&["scan", "--genus-max", "3", "--checks", "thm999"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown check"));
}

#[test]
fn scan_io_error_exits_3() {
    let out = sgag(&[
        "scan",
        "--genus-max",
        "2",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn verify_passes_and_filters() {
    let out = sgag(&["verify"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ok   357-t3t5"));
    assert!(text.contains("0 failed"));

    // A filter matching nothing verifies nothing: warn, exit 0.
    let out = sgag(&["verify", "--only", "no-such-fixture"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stderr(&out).contains("warning"));

    let out = sgag(&["verify", "--only", "herzog"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("378-herzog"));
}

#[test]
fn scan_defaults_to_stdout_json() {
    let out = sgag(&["scan", "--genus-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["genus_max"], serde_json::json!(2));
    assert!(!Path::new("scan.json").exists());
}
