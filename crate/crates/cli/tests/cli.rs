//! End-to-end checks of the binary: exit-code contract, JSON validity on
//! stdout, determinism across worker counts, and the documented flag
//! surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_domchrom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        !out.stdout.is_empty(),
        "expected JSON on stdout, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

#[test]
fn solve_chidom_cycle5() {
    let out = run(&["solve", "chidom", "--family", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["value"], 3);
    assert_eq!(json["certificate"]["k"], 3);
    assert_eq!(json["certificate"]["colors"].as_array().unwrap().len(), 5);
    assert!(json["certificate"]["dominators"].is_array());
}

#[test]
fn solve_chidt_complete4() {
    let out = run(&["solve", "chidt", "--family", "complete:4"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["value"], 4);
    assert!(json["certificate"]["witnesses"].is_array());
}

#[test]
fn solve_accepts_graph6_literal() {
    let out = run(&["solve", "chidom", "--graph", "A_"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["value"], 2);
}

#[test]
fn solve_chi_has_no_dominators() {
    let out = run(&["solve", "chi", "--family", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["value"], 3);
    assert!(json["certificate"].get("dominators").is_none());
}

#[test]
fn operational_errors_exit_1() {
    // unparsable graph6
    let out = run(&["solve", "chidom", "--graph", "A"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    // isolated vertex -> domain error
    let out = run(&["solve", "chidom", "--graph", "A?"]);
    assert_eq!(out.status.code(), Some(1));
    // missing input entirely
    let out = run(&["solve", "chidom"]);
    assert_eq!(out.status.code(), Some(1));
    // two input forms at once
    let out = run(&["solve", "chidom", "--graph", "A_", "--family", "cycle:4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn op_contract_edge_cycle4_gives_triangle() {
    let out = run(&[
        "op",
        "contract-edge",
        "--edge",
        "0,1",
        "--family",
        "cycle:4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["graph6"], "Bw");
    // both endpoints land on the merged slot
    assert_eq!(json["renumbering"][0], json["renumbering"][1]);
}

#[test]
fn op_odot_complete5_gives_star() {
    let out = run(&[
        "op",
        "odot",
        "--vertex",
        "0",
        "--family",
        "complete:5",
        "--format",
        "plain",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Ds_");
}

#[test]
fn op_subdivide_star3_counts() {
    let out = run(&["op", "subdivide", "--k", "3", "--family", "star:3"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["n"], 10);
    assert_eq!(json["m"], 9);
    assert!(json["labeling"]["superedges"].is_array());
}

#[test]
fn family_subdivision_suffix() {
    let out = run(&["solve", "chidom", "--family", "star:3^1/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["value"], 6);
}

#[test]
fn verify_formula_range_exits_clean() {
    let out = run(&[
        "verify",
        "--theorem",
        "path_cycle_formula",
        "--range",
        "4..12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["summary"]["violations"], 0);
    assert_eq!(json["per_theorem"]["path_cycle_formula"]["checked"], 18);
}

#[test]
fn verify_exit_2_on_finding() {
    // the degree-anchored subdivision bound fails on P_11; the report is
    // still written and the exit code flags the finding
    let out = run(&[
        "verify",
        "--theorem",
        "subdivision_dfrac",
        "--family",
        "star:2",
        "--k",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let json = stdout_json(&out);
    assert_eq!(json["summary"]["violations"], 1);
    let rec = &json["records"][0];
    assert_eq!(rec["theorem"], "subdivision_dfrac");
    assert_eq!(rec["quantities"]["chidom_sub"], 6);
}

#[test]
fn verify_json_identical_across_worker_counts() {
    let args =
        |jobs: &'static str| vec!["verify", "--nmax", "4", "--records", "all", "--jobs", jobs];
    let a = run(&args("1"));
    let b = run(&args("2"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let mut ja = stdout_json(&a);
    let mut jb = stdout_json(&b);
    for v in [&mut ja, &mut jb] {
        let obj = v.as_object_mut().unwrap();
        obj.remove("elapsed_ms");
        obj.get_mut("config")
            .unwrap()
            .as_object_mut()
            .unwrap()
            .remove("workers");
    }
    assert_eq!(ja, jb);
}

#[test]
fn verify_csv_summary() {
    let out = run(&[
        "verify",
        "--theorem",
        "path_cycle_formula",
        "--range",
        "4..8",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("theorem,checked,violations,tight,skipped")
    );
    assert!(lines.next().unwrap().starts_with("path_cycle_formula,"));
}

#[test]
fn verify_reads_graph6_corpus_file() {
    let dir = std::env::temp_dir().join(format!("domchrom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("two.g6");
    std::fs::write(&path, ">>graph6<<\nBw\nCl\n").unwrap();
    let out = run(&[
        "verify",
        "--theorem",
        "edge_deletion",
        "--graphs-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    // K_3 has 3 non-bridge edges, C_4 has 4
    assert_eq!(json["per_theorem"]["edge_deletion"]["checked"], 7);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_out_file_keeps_stdout_quiet() {
    let dir = std::env::temp_dir().join(format!("domchrom-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--theorem",
        "path_cycle_formula",
        "--range",
        "4..6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(json["summary"]["violations"], 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn conjecture_scan_exits_clean_at_n4() {
    let out = run(&["conjecture", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["graphs_scanned"], 42);
    assert_eq!(json["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn conjecture_budget_error_exits_1() {
    let out = run(&["conjecture", "--nmax", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sharpness_finds_triangle() {
    let out = run(&["sharpness", "edge_deletion", "lower", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert!(json["count"].as_u64().unwrap() > 0);
    let has_k3 = json["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["graph"] == "Bw");
    assert!(has_k3);
}

#[test]
fn sharpness_rejects_bad_arguments() {
    let out = run(&["sharpness", "wheel_gap", "lower", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["sharpness", "edge_deletion", "sideways", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn jobs_env_variable_is_honored() {
    let out = bin()
        .args(["verify", "--nmax", "3", "--records", "all"])
        .env("DOMCHROM_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["config"]["workers"], 1);
}
