//! End-to-end runs of the compiled binary.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use eccx_core::graph::{is_path_graph, is_star_graph};
use eccx_core::io::parse_graph6;

fn eccx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eccx"))
        .args(args)
        .output()
        .unwrap()
}

fn eccx_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eccx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn compute_reports_the_path_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("p4.g6");
    std::fs::write(&input, "Ch\n").unwrap();
    let out = eccx(&["compute", "--input", input.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,m,xi_c,xi_d,wiener,zagreb1,degree_distance,ecc_total,diam,rad,max_deg"
    );
    assert_eq!(lines.next().unwrap(), "4,3,14,52,10,10,28,10,3,2,2");
    assert_eq!(lines.next(), None);
}

#[test]
fn compute_accepts_stdin_and_emits_json() {
    let out = eccx_stdin(&["compute", "--output", "json"], "Ch\nDs_\n");
    assert!(out.status.success(), "{}", stderr_of(&out));
    let reports: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2);
    assert_eq!(reports[0]["xi_c"], 14);
    assert_eq!(reports[0]["xi_d"], 52);
    assert_eq!(reports[1]["n"], 5);
}

#[test]
fn compute_accepts_edge_lists() {
    let out = eccx_stdin(&["compute", "--format", "edgelist"], "4 3\n0 1\n1 2\n2 3\n");
    assert!(out.status.success(), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("4,3,14,52"));
}

#[test]
fn compute_rejects_malformed_input() {
    let out = eccx_stdin(&["compute"], "B!\n");
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("parse"));
}

#[test]
fn enumerate_lists_both_trees_of_order_four() {
    let out = eccx(&["enumerate", "trees", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let graphs: Vec<_> = text.lines().map(|l| parse_graph6(l).unwrap()).collect();
    assert_eq!(graphs.len(), 2);
    assert!(graphs.iter().any(is_path_graph));
    assert!(graphs.iter().any(is_star_graph));
}

#[test]
fn enumerate_counts_connected_graphs() {
    let out = eccx(&["enumerate", "graphs", "--n", "6", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "112");
}

#[test]
fn enumerate_applies_filters() {
    let out = eccx(&["enumerate", "trees", "--n", "7", "--max-degree", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let graphs: Vec<_> = text.lines().map(|l| parse_graph6(l).unwrap()).collect();
    assert_eq!(graphs.len(), 1);
    assert!(is_path_graph(&graphs[0]));
}

#[test]
fn enumerate_output_is_deterministic() {
    let a = eccx(&["enumerate", "graphs", "--n", "6"]);
    let b = eccx(&["--jobs", "2", "enumerate", "graphs", "--n", "6"]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn family_builds_named_graphs() {
    let out = eccx(&["family", "star", "5"]);
    assert!(out.status.success());
    assert!(is_star_graph(
        &parse_graph6(stdout_of(&out).trim()).unwrap()
    ));
    let out = eccx(&["family", "--format", "edgelist", "cycle", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "4 4\n0 1\n0 3\n1 2\n2 3\n");
    let out = eccx(&["family", "cocktail-party", "0"]);
    assert!(!out.status.success());
}

#[test]
fn transform_star_ward_reports_the_trace() {
    let out = eccx_stdin(
        &["transform", "star-ward", "--from", "1", "--to", "2"],
        "Ch\n",
    );
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["trace"]["delta_xi_d"], 19);
    assert_eq!(v["trace"]["delta_xi_c"], 5);
    assert!(is_star_graph(
        &parse_graph6(v["result"].as_str().unwrap()).unwrap()
    ));
}

#[test]
fn transform_star_ward_all_reaches_a_star() {
    // P5 needs exactly two star-ward steps
    let p5 = eccx_core::io::emit_graph6(&eccx_core::families::path(5).unwrap()).unwrap();
    let out = eccx_stdin(&["transform", "star-ward-all"], &format!("{p5}\n"));
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
    assert!(is_star_graph(
        &parse_graph6(v["result"].as_str().unwrap()).unwrap()
    ));
}

#[test]
fn transform_rejects_invalid_sites() {
    let out = eccx_stdin(
        &[
            "transform",
            "shift-leaves",
            "--donor",
            "1",
            "--receiver",
            "2",
        ],
        "Ch\n",
    );
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("donor/receiver"));
}

#[test]
fn transform_merge_paths_reports_both_bounds() {
    let out = eccx_stdin(
        &[
            "transform",
            "merge-paths",
            "--attach",
            "0",
            "-p",
            "1",
            "-q",
            "1",
        ],
        "A_\n",
    );
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["xi_d_gain_times6"], 114);
    assert_eq!(v["xi_d_lower_times6"], 55);
    // the reported connectivity gain exceeds its cap on this base
    assert_eq!(v["xi_c_gain"], 5);
    assert_eq!(v["xi_c_upper"], 4);
}

#[test]
fn verify_clean_check_exits_zero() {
    let out = eccx(&[
        "verify",
        "--theorem",
        "T2i",
        "--universe",
        "graphs",
        "--n",
        "5",
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["graphs_checked"], 21);
    assert_eq!(v["bound_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_full_suite_surfaces_known_defects() {
    let out = eccx(&[
        "verify",
        "--theorem",
        "all",
        "--universe",
        "graphs",
        "--n",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["ok"], false);
    assert!(!v["characterization_failures"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn verify_writes_a_per_graph_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("verdicts.csv");
    let out = eccx(&[
        "verify",
        "--theorem",
        "T2i,T4radius",
        "--universe",
        "trees",
        "--n",
        "6",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let text = std::fs::read_to_string(&report).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theorem,graph,lhs,rhs,slack,equality,characterization_expected,characterization_ok"
    );
    // 6 trees, two verdicts each
    assert_eq!(lines.count(), 12);
    assert!(text.contains("T4radius,"));
}

#[test]
fn verify_summary_is_independent_of_worker_count() {
    let a = eccx(&[
        "--jobs",
        "1",
        "verify",
        "--theorem",
        "all",
        "--universe",
        "trees",
        "--n",
        "7",
    ]);
    let b = eccx(&[
        "--jobs",
        "3",
        "verify",
        "--theorem",
        "all",
        "--universe",
        "trees",
        "--n",
        "7",
    ]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn worker_pool_configuration_is_validated() {
    let out = eccx(&["--jobs", "0", "enumerate", "trees", "--n", "3"]);
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("at least 1"));
    let out = Command::new(env!("CARGO_BIN_EXE_eccx"))
        .env("ECCX_JOBS", "abc")
        .args(["enumerate", "trees", "--n", "3"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("ECCX_JOBS"));
}
