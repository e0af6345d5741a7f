use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ftdiam(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftdiam")).args(args).current_dir(dir).output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("c4.txt"), "4 4 directed=0 weights=int\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n").unwrap();
    // a wheel on 9 vertices: enough edges for random triples
    let mut wheel = String::from("9 16 directed=0 weights=int\n");
    for i in 1..9 {
        wheel += &format!("0 {i} 2\n{i} {} 1\n", i % 8 + 1);
    }
    std::fs::write(p.join("wheel.txt"), wheel).unwrap();
    std::fs::write(p.join("s.txt"), "1\n2\n").unwrap();
    std::fs::write(p.join("t.txt"), "5\n6\n").unwrap();
    dir
}

#[test]
fn c4_record_has_exact_and_stretch() {
    let dir = workspace();
    std::fs::write(dir.path().join("q.txt"), "0-3\n").unwrap();
    let out = ftdiam(dir.path(), &["fdo", "--graph", "c4.txt", "--queries", "q.txt", "--verify"]);
    assert!(out.status.success());
    let recs = lines(&out);
    assert_eq!(recs[0]["estimate"], 5);
    assert_eq!(recs[0]["exact"], 3);
    assert_eq!(recs[0]["stretch"], 1.667);
    assert_eq!(recs[1]["summary"]["violations"], 0);
}

#[test]
fn stretched_thm1_stays_below_three() {
    let dir = workspace();
    let out = ftdiam(
        dir.path(),
        &["bench", "--oracle", "thm1", "--graph", "wheel.txt", "--dso", "stretched:2", "--f", "2", "--queries", "random:60:4", "--verify"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = lines(&out);
    let summary = &recs.last().unwrap()["summary"];
    assert_eq!(summary["stretch_bound"], "3");
    assert!(summary["max_stretch"].as_f64().unwrap() <= 3.0);
    assert_eq!(recs.len(), 61);
}

#[test]
fn empty_random_stream_prints_summary_only() {
    let dir = workspace();
    let out = ftdiam(dir.path(), &["fdo", "--graph", "c4.txt", "--queries", "random:0:7"]);
    assert!(out.status.success());
    let recs = lines(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["summary"]["queries"], 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let dir = workspace();
    let args = [
        "fdo-st", "--graph", "wheel.txt", "--s-set", "s.txt", "--t-set", "t.txt", "--f", "2", "--queries", "random:40:1",
        "--regime", "compressed", "--verify",
    ];
    let a = ftdiam(dir.path(), &args);
    let b = Command::new(env!("CARGO_BIN_EXE_ftdiam"))
        .args(args)
        .current_dir(dir.path())
        .env("FTDIAM_THREADS", "1")
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = workspace();
    let out = ftdiam(dir.path(), &["exact", "--graph", "c4.txt", "--queries", "random:3:2", "--out", "res.jsonl"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("res.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn missing_edge_fails_with_line_number() {
    let dir = workspace();
    std::fs::write(dir.path().join("q.txt"), "0-1\n# two\n0-2\n").unwrap();
    let out = ftdiam(dir.path(), &["fdo", "--graph", "c4.txt", "--queries", "q.txt"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn bad_graph_and_selectors_fail() {
    let dir = workspace();
    std::fs::write(dir.path().join("bad.txt"), "3 2 directed=0 weights=int\n0 1 1\n1 1 1\n").unwrap();
    let out = ftdiam(dir.path(), &["fdo", "--graph", "bad.txt"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert!(!ftdiam(dir.path(), &["fdo", "--graph", "c4.txt", "--dso", "stretched:0.5"]).status.success());
    assert!(!ftdiam(dir.path(), &["fdo", "--graph", "c4.txt", "--f", "0"]).status.success());
    assert!(!ftdiam(dir.path(), &["fdo-st", "--graph", "c4.txt"]).status.success());
}

#[test]
fn directed_graphs_work_for_thm2_only() {
    let dir = workspace();
    std::fs::write(dir.path().join("d.txt"), "3 3 directed=1 weights=int\n0 1 1\n1 2 1\n2 0 1\n").unwrap();
    let out = ftdiam(dir.path(), &["fdo", "--reduction", "thm2", "--graph", "d.txt", "--queries", "random:3:0", "--verify"]);
    assert!(out.status.success());
    let out = ftdiam(dir.path(), &["fdo-st", "--graph", "d.txt", "--s-set", "s.txt", "--t-set", "s.txt"]);
    assert!(!out.status.success());
}

#[test]
fn lowerbound_sweep_classifies_everything() {
    let dir = workspace();
    let out = ftdiam(dir.path(), &["lowerbound", "--sqrt-n", "2", "--tensor", "zeros", "--sweep"]);
    assert!(out.status.success());
    let recs = lines(&out);
    let summary = &recs.last().unwrap()["summary"];
    assert_eq!(summary["at_least_5"], 4);
    assert_eq!(summary["violations"], 0);
    let out = ftdiam(dir.path(), &["lowerbound", "--sqrt-n", "3", "--tensor", "random:5", "--samples", "10"]);
    assert!(out.status.success());
    assert_eq!(lines(&out).len(), 11);
}
