use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ptlang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptlang")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_line(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn tmp(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_str().unwrap().to_string()
}

fn compile(regex: &str, alphabet: &str, name: &str) -> String {
    let path = tmp(name);
    let o = ptlang(&["parse", "--regex", regex, "--alphabet", alphabet, "-o", &path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn parse_writes_canonical_json() {
    let o = ptlang(&["parse", "--regex", "ab", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"alphabet\":[\"a\",\"b\"],\"states\":3,\"initial\":[0],\"accepting\":[2],\
         \"transitions\":[[0,\"a\",1],[1,\"b\",2]]}\n"
    );
}

#[test]
fn query_pt_reports_cycle_and_succeeds() {
    let o = ptlang(&["query", "pt", "--regex", "(a|b)*a", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_line(&o);
    assert_eq!(v["pt"], false);
    assert_eq!(v["witness"]["kind"], "cycle-word");
}

#[test]
fn shuffle_then_eq() {
    let x = compile("a*", "ab", "x.json");
    let y = compile("ab*", "ab", "y.json");
    let s = tmp("s.json");
    let o = ptlang(&["op", "shuffle", &x, &y, "-o", &s]);
    assert_eq!(o.status.code(), Some(0));

    let o = ptlang(&["eq", &s, "--regex", "a(a|b)*", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["equivalent"], true);

    let o = ptlang(&["eq", &s, "--regex", "a*", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_line(&o);
    assert_eq!(v["equivalent"], false);
    assert!(v["witness"]["word"].is_string());
}

#[test]
fn complexity_queries() {
    let o = ptlang(&["query", "complexity", "--regex", "(a|b)*a", "--alphabet", "ab"]);
    assert_eq!(json_line(&o)["h"], "infinite");
    let o = ptlang(&["query", "complexity", "--regex", "(a|b)*a(a|b)*b(a|b)*", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["h"], 2);
    let o = ptlang(&["query", "depth", "--regex", "aab", "--alphabet", "ab"]);
    assert_eq!(json_line(&o)["depth"], 4);
}

#[test]
fn every_query_answers() {
    for q in ["pt", "rtrivial", "ltrivial", "jtrivial", "complexity", "depth", "shuffle-ideal", "subword-closed"] {
        let o = ptlang(&["query", q, "--regex", "ab*", "--alphabet", "ab"]);
        assert_eq!(o.status.code(), Some(0), "{q}");
        assert!(json_line(&o).is_object());
    }
    let o = ptlang(&["query", "shuffle-ideal", "--regex", "ab*", "--alphabet", "ab"]);
    assert_eq!(json_line(&o)["shuffle_ideal"], false);
}

#[test]
fn operations_pipe_into_each_other() {
    let x = compile("ac(a|b)*", "abc", "r.json");
    let r = tmp("r_out.json");
    assert!(ptlang(&["op", "residual", &x, "--word", "c", "-o", &r]).status.success());
    let o = ptlang(&["eq", &r, "--regex", "a(a|b)*", "--alphabet", "abc"]);
    assert_eq!(o.status.code(), Some(0));

    let a = compile("a", "ab", "ea.json");
    let b = compile("b", "ab", "eb.json");
    let (ea, eb, both) = (tmp("ea_out.json"), tmp("eb_out.json"), tmp("both.json"));
    assert!(ptlang(&["op", "erase-inverse", &a, "--letters", "b", "-o", &ea]).status.success());
    assert!(ptlang(&["op", "erase-inverse", &b, "--letters", "a", "-o", &eb]).status.success());
    assert!(ptlang(&["op", "intersect", &ea, &eb, "-o", &both]).status.success());
    let o = ptlang(&["eq", &both, "--regex", "ab|ba", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));

    let i = tmp("inf.json");
    assert!(ptlang(&["op", "infiltrate", &a, &a, "--share", "a", "-o", &i]).status.success());
    let o = ptlang(&["eq", &i, "--regex", "a|aa", "--alphabet", "ab"]);
    assert_eq!(o.status.code(), Some(0));

    for op in ["complement", "mirror", "upclose", "downclose"] {
        let out = tmp(&format!("{op}.json"));
        assert!(ptlang(&["op", op, &x, "-o", &out]).status.success(), "{op}");
        assert!(ptlang(&["dot", &out]).status.success());
    }
    for op in ["concat", "union", "difference"] {
        assert!(ptlang(&["op", op, &a, &b]).status.success(), "{op}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["op", "shuffle", "--regex", "ab", "--regex", "ba", "--alphabet", "ab"];
    assert_eq!(stdout(&ptlang(&args)), stdout(&ptlang(&args)));
    let v = ["verify", "thm1-finite", "--trials", "4", "--seed", "11"];
    let strip = |s: String| -> Vec<Value> {
        s.lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect()
    };
    assert_eq!(strip(stdout(&ptlang(&v))), strip(stdout(&ptlang(&v))));
}

#[test]
fn dot_output() {
    let o = ptlang(&["dot", "--regex", "a", "--alphabet", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph automaton {"));
    assert!(text.contains("0 -> 1 [label=\"a\"];"));
}

#[test]
fn verify_catalogue_passes() {
    let o = ptlang(&["verify", "catalogue"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
    }
    let o = ptlang(&["verify", "bounds"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_random_suite_reports_jsonl() {
    let o = ptlang(&["verify", "lemma-P-acyclic", "--trials", "5", "--seed", "2", "--max-states", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[3]["id"], "lemma-P-acyclic#3");
    assert_eq!(lines[3]["seed"], 2);
}

#[test]
fn resource_limit_exits_3() {
    let o = ptlang(&["query", "complexity", "--regex", "(a|b)*a(a|b)*b(a|b)*a(a|b)*", "--alphabet", "ab", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_and_format_errors_exit_2() {
    assert_eq!(ptlang(&["query", "pt", "--regex", "a(", "--alphabet", "ab"]).status.code(), Some(2));
    assert_eq!(ptlang(&["query", "pt", "--regex", "c", "--alphabet", "ab"]).status.code(), Some(2));
    assert_eq!(ptlang(&["query", "pt", "--regex", "a"]).status.code(), Some(2));
    assert_eq!(ptlang(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(ptlang(&["frobnicate"]).status.code(), Some(2));
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{\"alphabet\":[\"a\"],\"states\":1}").unwrap();
    assert_eq!(ptlang(&["dot", &bad]).status.code(), Some(2));
    assert_eq!(ptlang(&["dot", &tmp("missing.json")]).status.code(), Some(2));
    let x = compile("a", "ab", "one.json");
    assert_eq!(ptlang(&["op", "union", &x]).status.code(), Some(2));
    let y = compile("a", "abc", "other.json");
    assert_eq!(ptlang(&["op", "union", &x, &y]).status.code(), Some(2));
}
