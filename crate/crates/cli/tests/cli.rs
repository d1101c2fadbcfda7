//! End-to-end tests against the compiled binary: exit codes, report
//! content, sweep mode, import/export, and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn cutshell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutshell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("json report")
}

#[test]
fn verify_smallest_instance_passes() {
    let out = cutshell(&["verify", "--n", "9", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["params"]["theorem_applies"], true);
    assert_eq!(report["facet_count"], 48);
    assert_eq!(report["formula_total"], 1);
    assert_eq!(report["spanning"], serde_json::json!([[3, 7, 8]]));
    assert_eq!(report["census"]["sigma1"], serde_json::json!([[3, 7, 8]]));
    assert_eq!(report["ok"], true);
}

#[test]
fn verify_with_homology_oracle() {
    let out = cutshell(&["verify", "--n", "10", "--p", "2", "--homology"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["formula_total"], 6);
    assert_eq!(report["betti"], serde_json::json!([0, 0, 0, 0, 0, 0, 6]));
}

#[test]
fn verify_void_instance_exits_2() {
    let out = cutshell(&["verify", "--n", "6", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("void complex"), "stderr was: {err}");
}

#[test]
fn verify_outside_theorem_range_exits_2() {
    let out = cutshell(&["verify", "--n", "8", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn homology_cap_exits_3() {
    let out = cutshell(&["homology", "--n", "9", "--p", "2", "--max-faces", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_parameters_exit_2() {
    let out = cutshell(&["facets", "--n", "2", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cutshell(&["facets", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "--n", "11", "--p", "2"];
    let first = cutshell(&args);
    let second = cutshell(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());

    let sweep = ["verify", "--n-range", "9..13", "--p", "2"];
    let first = cutshell(&sweep);
    let second = cutshell(&sweep);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_emits_one_json_line_per_instance() {
    let out = cutshell(&["verify", "--n-range", "9..12", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for (line, n) in lines.iter().zip(9..) {
        let report: serde_json::Value = serde_json::from_str(line).expect("ndjson line");
        assert_eq!(report["params"]["n"], n);
        assert_eq!(report["ok"], true);
    }
}

#[test]
fn sweep_with_failing_instance_propagates_exit() {
    // n = 6..9 with p = 2 includes void and out-of-range instances.
    let out = cutshell(&["verify", "--n-range", "6..9", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.lines().count() == 4, "one line per instance: {text}");
    assert!(text.contains("\"error\""));
}

#[test]
fn order_command_prints_the_permutation() {
    let out = cutshell(&["order", "--n", "9"]);
    let report = json(&out);
    assert_eq!(
        report["omega"],
        serde_json::json!([5, 4, 6, 3, 7, 2, 8, 1, 0])
    );
}

#[test]
fn classify_histogram_counts_facets() {
    let out = cutshell(&["classify", "--n", "9", "--p", "2"]);
    let report = json(&out);
    assert_eq!(report["facet_count"], 48);
    assert_eq!(report["class_histogram"], serde_json::json!([45, 3]));
    let rows = report["classified"].as_array().unwrap();
    assert_eq!(rows.len(), 48);
    let tagged: Vec<&serde_json::Value> = rows
        .iter()
        .filter(|r| r["alpha"].as_u64() == Some(1))
        .collect();
    assert_eq!(tagged.len(), 3);
}

#[test]
fn euler_matches_wedge_sign() {
    let out = cutshell(&["euler", "--n", "10", "--p", "2"]);
    let report = json(&out);
    assert_eq!(report["reduced_euler"], 6);
    let fv = report["face_vector"].as_array().unwrap();
    assert_eq!(fv[0], 1);
    assert_eq!(fv.last().unwrap(), &serde_json::json!(80));
}

#[test]
fn facet_export_import_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("facets.txt");
    let out = cutshell(&[
        "facets",
        "--n",
        "9",
        "--p",
        "2",
        "--export",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n=9 k=3\n"));
    assert_eq!(text.lines().count(), 49);

    let out = cutshell(&[
        "facets",
        "--n",
        "9",
        "--p",
        "2",
        "--import",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // Dropping a line makes validation fail with exit 1.
    let pruned: String = text
        .lines()
        .filter(|l| *l != "3 7 8")
        .map(|l| format!("{l}\n"))
        .collect();
    let bad = dir.path().join("pruned.txt");
    std::fs::write(&bad, pruned).unwrap();
    let out = cutshell(&[
        "facets",
        "--n",
        "9",
        "--p",
        "2",
        "--import",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn shell_check_imported_order_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("disjoint.txt");
    std::fs::write(&path, "n=4 k=2\n2 3\n0 1\n").unwrap();
    let out = cutshell(&[
        "shell-check",
        "--n",
        "4",
        "--import",
        path.to_str().unwrap(),
        "--search",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["shelling_ok"], false);
    assert_eq!(report["search"], serde_json::json!("not_shellable"));

    // A hollow triangle order from a file is accepted as-is.
    let tri = dir.path().join("triangle.txt");
    std::fs::write(&tri, "n=3 k=1\n2\n0\n1\n").unwrap();
    let out = cutshell(&["shell-check", "--n", "3", "--import", tri.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["spanning"], serde_json::json!([[1]]));
}

#[test]
fn malformed_import_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "n=9 k=3\n7 3 8\n").unwrap();
    let out = cutshell(&[
        "shell-check",
        "--n",
        "9",
        "--import",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_facets_is_the_interchange_format() {
    let out = cutshell(&["facets", "--n", "9", "--p", "2", "--format", "text"]);
    let text = stdout(&out);
    let body: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(body[0], "n=9 k=3");
    assert_eq!(body.len(), 50);
    assert!(Path::new(env!("CARGO_BIN_EXE_cutshell")).exists());
}

#[test]
fn csv_sweep_has_header_and_rows() {
    let out = cutshell(&[
        "census",
        "--n-range",
        "9..11",
        "--p",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("command,n,p,k"));
    assert!(lines[1].starts_with("census,9,2,3,true"));
}
