use std::fs;
use std::process::{Command, Output};

fn romdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_romdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_reports_true_with_status_zero() {
    let out = romdom(&["check", "--family", "path", "--size", "2", "--function", "20", "--property", "urrdf"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn failed_check_exits_one_and_names_violation() {
    let out = romdom(&["check", "--family", "path", "--size", "3", "--function", "212", "--property", "urrdf"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("false"));
}

#[test]
fn enumerate_streams_in_emission_order() {
    let out = romdom(&["enumerate", "--family", "path", "--size", "2", "--what", "urrdf"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), ["20", "02", "11"]);
}

#[test]
fn extend_without_extension_exits_one() {
    let out = romdom(&["extend", "--family", "path", "--size", "3", "--function", "202"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "no");
}

#[test]
fn bench_delay_json_has_one_gap_more_than_solutions() {
    let out = romdom(&["bench-delay", "--family", "matching", "--size", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solutions"], 243);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 244);
    assert_eq!(v["complete"], true);
}

#[test]
fn enumerated_functions_pass_check() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.el");
    let gen = romdom(&["generate", "--family", "cycle", "--size", "5"]);
    fs::write(&graph, gen.stdout).unwrap();
    let graph = graph.to_str().unwrap();
    let out = romdom(&["enumerate", "--graph", graph, "--what", "minimal-prdf"]);
    let lines = stdout(&out);
    assert!(!lines.is_empty());
    for f in lines.lines() {
        let out = romdom(&["check", "--graph", graph, "--function", f, "--property", "minimal-prdf"]);
        assert_eq!(out.status.code(), Some(0), "{f}");
    }
}

#[test]
fn malformed_graph_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("bad.el");
    fs::write(&graph, "2 1\n0 5\n").unwrap();
    let out = romdom(&["check", "--graph", graph.to_str().unwrap(), "--function", "20", "--property", "rdf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn function_length_mismatch_exits_two() {
    let out = romdom(&["check", "--family", "path", "--size", "3", "--function", "20", "--property", "rdf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_on_non_split_graph_exits_two() {
    let out = romdom(&["solve", "--family", "cycle", "--size", "5", "--what", "ur-split"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gadget_writes_graph_and_presolution() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("gadget");
    let out = romdom(&[
        "gadget", "--family", "path", "--size", "3", "--kind", "irredundant", "--k", "1",
        "--out", prefix.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let el = fs::read_to_string(dir.path().join("gadget.el")).unwrap();
    let f = fs::read_to_string(dir.path().join("gadget.f")).unwrap();
    let order: usize = el.split_whitespace().next().unwrap().parse().unwrap();
    assert_eq!(f.trim().len(), order);
    // The written pair is a valid extend instance.
    let ext = romdom(&["extend", "--graph", dir.path().join("gadget.el").to_str().unwrap(), "--function", &format!("@{}", dir.path().join("gadget.f").display())]);
    assert!(matches!(ext.status.code(), Some(0) | Some(1)));
}

#[test]
fn generate_is_reproducible_per_seed() {
    let a = romdom(&["generate", "--random", "gnp", "--n", "9", "--seed", "4"]);
    let b = romdom(&["generate", "--random", "gnp", "--n", "9", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn oracle_counts_two_packings() {
    // C4 has the empty set and four singletons.
    let out = romdom(&["oracle", "--family", "cycle", "--size", "4", "--property", "2-packing", "--mode", "count"]);
    assert_eq!(stdout(&out).trim(), "5");
}
