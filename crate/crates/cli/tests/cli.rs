//! The `xing` binary end to end: exit codes, written files and golden
//! reports.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn xing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xing")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    xing(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(xing(args).stdout).unwrap()
}

fn tmp(dir: &tempfile::TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn solve_exit_codes() {
    let (k5, k6, k7) = (fixture("k5.el"), fixture("k6.el"), fixture("k7.el"));
    assert_eq!(code(&["solve", "--types", "full", "--input", &k5]), 0);
    assert_eq!(code(&["solve", "--types", "x", "--input", &k5]), 1);
    assert_eq!(code(&["solve", "--types", "full", "--input", &k6]), 0);
    assert_eq!(code(&["solve", "--types", "all", "--input", &k7]), 1);
    assert_eq!(code(&["solve", "--types", "full", "--input", &k6, "--budget", "3"]), 3);
    assert_eq!(code(&["solve", "--types", "full", "--input", &k5, "--outer", "nope"]), 2);
    assert_eq!(code(&["solve", "--types", "fast", "--input", &k5]), 2);
    assert_eq!(code(&["solve", "--types", "full", "--input", &fixture("missing.el")]), 2);
    assert_eq!(code(&["solve", "--types", "full", "--input", &k5, "--parallel"]), 0);
}

#[test]
fn witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (w, svg) = (tmp(&dir, "w.json"), tmp(&dir, "w.svg"));
    let k5 = fixture("k5.el");
    assert_eq!(code(&["solve", "-t", "full", "-i", &k5, "--witness", &w, "--svg", &svg]), 0);
    assert_eq!(code(&["verify", "--drawing", &w, "--types", "full"]), 0);
    assert_eq!(code(&["verify", "--drawing", &w, "--types", "x"]), 1);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("class=\"vertex\"").count(), 5);
    assert_eq!(text.matches("class=\"edge\"").count(), 10);
    assert_eq!(text.matches("class=\"crossing\"").count(), 1);
    let again = tmp(&dir, "again.svg");
    assert_eq!(code(&["draw", "--drawing", &w, "--out", &again]), 0);
    assert_eq!(std::fs::read_to_string(&again).unwrap(), text);
}

#[test]
fn geometric_witness_is_free_of_configurations() {
    let dir = tempfile::tempdir().unwrap();
    let w = tmp(&dir, "g.json");
    let k5 = fixture("k5.el");
    assert_eq!(code(&["solve", "-t", "full", "-i", &k5, "--geometric", "--outer", "3", "--witness", &w]), 0);
    assert_eq!(code(&["verify", "-d", &w, "-t", "full", "--geometric"]), 0);
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert!(j["outer_face"].as_array().unwrap().iter().any(|v| v == "3"));
}

#[test]
fn topological_outer_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let w = tmp(&dir, "t.json");
    assert_eq!(code(&["solve", "-t", "bowtie", "-i", &fixture("k33.el"), "--outer", "b2", "--witness", &w]), 0);
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert!(j["outer_face"].as_array().unwrap().iter().any(|v| v == "b2"));
}

#[test]
fn malformed_drawing_is_an_input_error() {
    assert_eq!(code(&["verify", "--drawing", &fixture("bad.json"), "--types", "full"]), 2);
    assert_eq!(code(&["draw", "--drawing", &fixture("bad.json"), "--out", "/dev/null"]), 2);
}

#[test]
fn classify_and_oracle() {
    assert_eq!(stdout(&["classify", "-i", &fixture("k5.el"), "--pair", "0", "1", "2", "3"]), "full\n");
    assert_eq!(stdout(&["classify", "-i", &fixture("k33.el"), "--pair", "a0", "b0", "a1", "b1"]), "bowtie\n");
    assert_eq!(code(&["classify", "-i", &fixture("k5.el"), "--pair", "0", "1", "1", "2"]), 2);
    let k33 = fixture("k33.el");
    assert_eq!(code(&["oracle", "-i", &k33, "-t", "x"]), 1);
    assert_eq!(code(&["oracle", "-i", &k33, "-t", "bowtie"]), 0);
    assert_eq!(code(&["oracle", "-i", &fixture("k7.el"), "-t", "all"]), 3);
}

#[test]
fn golden_reports() {
    let dir = tempfile::tempdir().unwrap();
    let w = tmp(&dir, "w.json");
    let k5 = fixture("k5.el");
    assert_eq!(stdout(&["solve", "-i", &k5, "-t", "full", "--json", "--witness", &w]), golden("solve_k5_full.json"));
    assert_eq!(stdout(&["verify", "-d", &w, "-t", "x", "--json"]), golden("verify_k5_x.json"));
    assert_eq!(stdout(&["oracle", "-i", &fixture("k33.el"), "-t", "bowtie", "--json"]), golden("oracle_k33_bowtie.json"));
}

#[test]
fn decompose_writes_every_skeleton() {
    let dir = tempfile::tempdir().unwrap();
    let out: PathBuf = dir.path().join("d");
    let o = out.to_string_lossy().into_owned();
    let text = stdout(&["decompose", "-i", &fixture("k4_bond.el"), "-o", &o]);
    assert!(text.contains("block 0: 6 vertices, S 2, P 1, R 1"), "{text}");
    for k in 0..4 {
        assert!(out.join(format!("block0.node{k}.el")).exists());
        let tags = std::fs::read_to_string(out.join(format!("block0.node{k}.tags"))).unwrap();
        assert!(tags.lines().all(|l| l.ends_with("\treal")
            || l.ends_with("\tvirtual-subdivided")
            || l.ends_with("\tvirtual-retained")));
    }
    let text = stdout(&["decompose", "-i", &fixture("two_k5.el"), "-o", &o]);
    assert!(text.starts_with("blocks 2\ncutvertices 1\n"));
    assert!(std::fs::read_to_string(out.join("bc.txt")).unwrap().contains("cut 4\n"));
}

#[test]
fn gen_hard_figure_instance() {
    let dir = tempfile::tempdir().unwrap();
    let (g, r, c) = (tmp(&dir, "g.el"), tmp(&dir, "r.tsv"), tmp(&dir, "c.json"));
    let base = ["gen-hard", "--sizes", "1,2,2,2,3,3,3,4,4", "--bound", "8", "--variant", "x", "--out", &g];
    assert_eq!(code(&base), 2, "odd m needs the waiver");
    let mut args = base.to_vec();
    args.extend(["--parity-waiver", "--roles", &r, "--certificate", &c]);
    let text = stdout(&args);
    assert!(text.contains("fences 66\nrims 9 24\n"), "{text}");
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
    assert_eq!(cert["drawing_verifies"], true);
    assert_eq!(cert["path_decomposition"]["width"], xing_hardness::PATHWIDTH_W0);
    assert_eq!(cert["drawing"]["pairs"].as_array().unwrap().len(), 99);
    let el = std::fs::read_to_string(&g).unwrap();
    let roles = std::fs::read_to_string(&r).unwrap();
    assert_eq!(roles.lines().filter(|l| l.starts_with("e\t")).count(), el.lines().count());
}

#[test]
fn gen_hard_without_partition() {
    let dir = tempfile::tempdir().unwrap();
    let (g, c) = (tmp(&dir, "g.el"), tmp(&dir, "c.json"));
    // four 3s, and every triple holding a 3 also needs the lone 2
    let args = ["gen-hard", "--sizes", "1,1,1,1,1,4,3,3,1,3,3,2", "--bound", "6", "--variant", "arrow", "--out", &g, "--certificate", &c];
    assert_eq!(code(&args), 0);
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
    assert!(cert["partition"].is_null() && cert["drawing"].is_null());
}
