//! End-to-end runs of the pfladder binary: output shapes, exit codes and
//! determinism.

use std::process::{Command, Output};

fn pfladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfladder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn invariants_text_for_the_odd_square() {
    let out = pfladder(&["invariants", "--family", "M", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("spec: n=5 (1,5)t2"), "got: {text}");
    assert!(text.contains("height: 3\n"), "got: {text}");
    assert!(text.contains("multiplicity: 5\n"), "got: {text}");
    assert!(text.contains("h-vector: [1, 3, 1]\n"), "got: {text}");
    assert!(text.contains("regularity: 3\n"), "got: {text}");
}

#[test]
fn invariants_json_matches_the_report_schema() {
    let out = pfladder(&["invariants", "--family", "M", "--t", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["spec"]["n"], 5);
    assert_eq!(v["spec"]["corners"], serde_json::json!([[1, 5]]));
    assert_eq!(v["spec"]["t"], serde_json::json!([2]));
    assert_eq!(v["height"], 3);
    assert_eq!(v["multiplicity"], "5");
    assert_eq!(v["hvector"], serde_json::json!([1, 3, 1]));
    assert_eq!(v["regularity"], 3);
    assert_eq!(v["source"], "engine");
}

#[test]
fn degenerate_nested_family_works_at_t1() {
    let out = pfladder(&["invariants", "--family", "SN", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("multiplicity: 1\n"));
}

#[test]
fn family_names_are_case_insensitive() {
    let upper = pfladder(&["invariants", "--family", "SM", "--t", "2"]);
    let lower = pfladder(&["invariants", "--family", "sm", "--t", "2"]);
    assert_eq!(upper.status.code(), Some(0));
    assert_eq!(upper.stdout, lower.stdout);
}

#[test]
fn oracle_verify_passes_on_the_even_square() {
    let out = pfladder(&["oracle", "verify", "--family", "SM", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("multiplicity: expected 14, oracle 14 [ok]"),
        "got: {text}"
    );
    assert!(text.contains("regularity: expected 4, oracle 4 [ok]"), "got: {text}");
    assert!(text.ends_with("PASS\n"), "got: {text}");
}

#[test]
fn oracle_verify_emits_the_full_report_as_json() {
    let out = pfladder(&["oracle", "verify", "--family", "M", "--t", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn oracle_verify_can_dump_the_basis() {
    let out = pfladder(&["oracle", "verify", "--family", "M", "--t", "1", "--dump-basis"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // the 2-pfaffians of a 3x3 block are its three entries
    assert!(text.contains("x(1,2)"), "got: {text}");
    assert!(text.contains("x(2,3)"), "got: {text}");
}

#[test]
fn table_emits_a_csv_grid_with_named_columns() {
    let out = pfladder(&[
        "table", "--family", "Lk", "--t", "1..3", "--k", "1..4", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,t,k,multiplicity");
    assert_eq!(lines.len(), 1 + 12);
    assert!(lines.contains(&"Lk,1,1,1"));
    assert!(lines.contains(&"Lk,2,2,13"));
    assert!(lines.contains(&"Lk,2,3,34"));
    assert!(lines.contains(&"Lk,3,4,1782"));
}

#[test]
fn table_cells_agree_with_single_invariant_runs() {
    let table = pfladder(&[
        "table", "--family", "Lk", "--t", "2", "--k", "3", "--format", "csv",
    ]);
    let cell = stdout(&table)
        .lines()
        .nth(1)
        .expect("one data row")
        .rsplit(',')
        .next()
        .expect("multiplicity column")
        .to_string();
    let single = pfladder(&[
        "invariants", "--family", "Lk", "--t", "2", "--k", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&single)).unwrap();
    assert_eq!(v["multiplicity"], serde_json::Value::String(cell));
}

#[test]
fn table_skips_parameter_combinations_outside_the_family() {
    // Ln needs n >= 2t+1, so t=3 contributes nothing below n=7
    let out = pfladder(&[
        "table", "--family", "Ln", "--t", "1..3", "--n", "4..6", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Ln,1,4,"));
    assert!(text.contains("Ln,2,5,"));
    assert!(!text.contains("Ln,3,"), "got: {text}");
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "table", "--family", "Lk", "--t", "1..3", "--k", "1..4", "--format", "csv",
    ];
    assert_eq!(pfladder(&args).stdout, pfladder(&args).stdout);
    let args = ["oracle", "verify", "--family", "M", "--t", "2", "--format", "json"];
    assert_eq!(pfladder(&args).stdout, pfladder(&args).stdout);
}

#[test]
fn spec_files_select_arbitrary_ladders() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two-corners.json");
    std::fs::write(&path, r#"{"n":5,"corners":[[1,3],[2,5]],"t":[1,1]}"#).unwrap();
    let out = pfladder(&["invariants", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("multiplicity: 1\n"), "got: {text}");

    let out = pfladder(&["render", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("corners: (1,3) (2,5)"), "got: {text}");
    assert!(text.contains("sizes: 1 1\n"), "got: {text}");
}

#[test]
fn render_draws_the_notched_square() {
    let out = pfladder(&["render", "--family", "Ln", "--t", "2", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("\\###1.\n"), "got: {text}");
    assert!(text.contains("corners: (1,5) (2,6)"), "got: {text}");
    assert!(text.contains("sizes: 2 2\n"), "got: {text}");
}

#[test]
fn missing_parameters_are_usage_errors() {
    let out = pfladder(&["invariants", "--family", "M"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--t"));

    let out = pfladder(&["invariants"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pfladder(&["table", "--family", "Lk", "--t", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--k"));
}

#[test]
fn extraneous_parameters_are_usage_errors() {
    let out = pfladder(&["invariants", "--family", "M", "--t", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--k"));
}

#[test]
fn conflicting_selectors_are_rejected() {
    let out = pfladder(&[
        "invariants", "--family", "M", "--t", "2", "--spec", "x.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_ranges_are_usage_errors() {
    let out = pfladder(&["table", "--family", "M", "--t", "5..2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pfladder(&["table", "--family", "M", "--t", "1..=4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn impossible_parameters_are_computation_errors() {
    let out = pfladder(&["invariants", "--family", "M", "--t", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr(&out).is_empty());

    let out = pfladder(&["invariants", "--family", "I", "--t", "3", "--n", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unreadable_spec_files_are_usage_errors() {
    let out = pfladder(&["invariants", "--spec", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, r#"{"n":5,"corners":[[1,3]],"t":[1,1]}"#).unwrap();
    let out = pfladder(&["invariants", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bad spec file"));
}

#[test]
fn selftest_reports_every_check() {
    let out = pfladder(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"), "got: {text}");
    let ok_lines = text.lines().filter(|l| l.starts_with("ok ")).count();
    assert_eq!(ok_lines, 6, "got: {text}");
    assert!(text.trim_end().ends_with("6 checks passed"), "got: {text}");
}
