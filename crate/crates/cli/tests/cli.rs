use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subshift::graph::{builtin, LabeledGraph};
use subshift::{Side, SoficShift};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subshift")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write_even(dir: &Path) -> String {
    let path = dir.join("even.shift");
    fs::write(&path, builtin::EVEN_SHIFT).unwrap();
    path.to_string_lossy().into_owned()
}

fn counts(csv: &str) -> Vec<usize> {
    csv.lines().skip(1).map(|l| l.rsplit(',').nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn updown_follower_report() {
    let out = stdout(&["updown", "--max-n", "5", "--report", "followers"]);
    assert!(out.starts_with("system,n,side,exact,count,bound_note\n"));
    assert_eq!(counts(&out), vec![3, 5, 7, 9, 11]);
    assert!(out.lines().skip(1).all(|l| l.contains(",true,")));
}

#[test]
fn graph_criteria_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_even(dir.path());
    let out = stdout(&["graph", "--file", &file, "--max-n", "4", "--criteria"]);
    assert!(out.lines().any(|l| l.starts_with("unions,even,3,certified-sofic,true,")), "{out}");
    let json = stdout(&["graph", "--file", &file, "--max-n", "4", "--report", "criteria", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["citation"].as_str().is_some_and(|c| !c.is_empty())));
    assert!(reports
        .iter()
        .any(|r| r["criterion"] == "unions" && r["n"] == 3 && r["verdict"] == "certified-sofic"));
}

#[test]
fn sgap_depth_limited_counts_match_exact_presentation() {
    let out = stdout(&["sgap", "--gaps", "1,2", "--max-n", "4", "--depth", "4"]);
    assert!(out.lines().skip(1).all(|l| l.contains(",false,") && l.ends_with("depth-4 profiles")));
    let g = LabeledGraph::parse("alphabet: 0 1\nstates: p q r\nedge: p 0 q\nedge: q 0 r\nedge: q 1 p\nedge: r 1 p\n")
        .unwrap();
    let s = SoficShift::new(&g).unwrap();
    let exact: Vec<usize> = (1..=4).map(|n| s.class_table(n, Side::Follower).unwrap().count()).collect();
    assert_eq!(counts(&out), exact);
}

#[test]
fn gap_rule_needs_cutoff() {
    let out = run(&["sgap", "--gap-rule", "powers-of-2", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let ok = stdout(&["sgap", "--gap-rule", "powers-of-2", "--cutoff", "64", "--max-n", "3", "--report", "complexity"]);
    assert!(ok.starts_with("system,n,words\n"));
}

#[test]
fn coded_report_is_marked_lower_bound() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_even(dir.path());
    let out = stdout(&["coded", "--file", &file, "--separator", "c", "--max-n", "3", "--report", "extenders"]);
    assert!(out.lines().skip(1).all(|l| l.contains(",extender,false,")));
    let clash = run(&["coded", "--file", &file, "--separator", "0"]);
    assert_eq!(clash.status.code(), Some(1));
}

#[test]
fn oracle_check_agrees_on_builtins() {
    for system in ["golden-mean", "even-shift", "full-shift", "periodic01", "updown"] {
        let out = stdout(&["oracle-check", "--system", system, "--max-n", "3", "--depth", "6"]);
        assert!(out.lines().skip(1).all(|l| l.ends_with(",true")), "{system}: {out}");
    }
}

#[test]
fn updown_witnesses_agree_with_closed_form() {
    let out = stdout(&["updown", "--witnesses", "--max-n", "9"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|l| l.ends_with(",true")));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["updown", "--max-n", "13"]).status.code(), Some(2));
    assert_eq!(run(&["sgap", "--gaps", "1", "--max-n", "2", "--depth", "30"]).status.code(), Some(2));
    assert_eq!(run(&["sgap", "--gaps", "1", "--max-n", "2", "--budget", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["updown", "--report", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["updown", "--max-n", "0"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.shift");
    fs::write(&bad, "alphabet: 0 1\nstates: A\nedge: A 2 A\n").unwrap();
    let out = run(&["graph", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(run(&["graph", "--file", "/nonexistent/x.shift"]).status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_even(dir.path());
    for args in [
        vec!["graph", "--file", file.as_str(), "--max-n", "5", "--criteria", "--format", "json"],
        vec!["updown", "--max-n", "8", "--report", "predecessors"],
        vec!["sgap", "--gaps", "1,3", "--max-n", "4", "--report", "extenders", "--depth", "2"],
    ] {
        let a = dir.path().join("a.out");
        let b = dir.path().join("b.out");
        for path in [&a, &b] {
            let mut full = args.clone();
            full.extend(["--out", path.to_str().unwrap()]);
            let out = run(&full);
            assert!(out.status.success());
            assert!(out.stdout.is_empty());
        }
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    }
}
