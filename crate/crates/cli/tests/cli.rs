use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_burnside"))
            .current_dir(self.dir.path())
            .args(args)
            .output()
            .unwrap()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn pspace(orders: &[u64], weights: &[&[i64]]) -> String {
    serde_json::json!({
        "schema": 1,
        "pspace": { "group": { "type": "abelian", "orders": orders }, "weights": weights },
    })
    .to_string()
}

const Z5: &str = r#"{"type":"abelian","orders":[5]}"#;

#[test]
fn present_reports_invariants() {
    let sb = Sandbox::new();
    let o = sb.run(&["present", "--group", Z5, "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("free_rank: 4, torsion: []"));
    let o = sb.run(&["present", "--group", r#"{"type":"abelian","orders":[2]}"#, "--n", "2"]);
    assert!(stdout(&o).contains("free_rank: 0, torsion: []"));
}

#[test]
fn present_rejects_malformed_groups() {
    let sb = Sandbox::new();
    let o = sb.run(&["present", "--group", r#"{"type":"abelian","orders":[3,2]}"#, "--n", "2"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn present_from_a_group_file_with_bc_flavor() {
    let sb = Sandbox::new();
    let g = sb.file("s3.json", r#"{"type":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]}"#);
    let o = sb.run(&["--no-cache", "present", "--group", s(&g), "--n", "1", "--flavor", "bc"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("flavor: bc"));
}

#[test]
fn caps_are_enforced() {
    let sb = Sandbox::new();
    let o = sb.run(&["--max-group-order", "4", "present", "--group", Z5, "--n", "1"]);
    assert_eq!(code(&o), 2);
    let o = sb.run(&["--max-basis", "3", "present", "--group", Z5, "--n", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("basis has 4"));
    let o = sb.run(&["--max-rows", "0", "present", "--group", Z5, "--n", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let sb = Sandbox::new();
    let args = ["--format", "json", "present", "--group", Z5, "--n", "2"];
    let first = sb.run(&args);
    let second = sb.run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&first.stderr).contains("stored"));
    assert!(String::from_utf8_lossy(&second.stderr).contains("hit"));
}

#[test]
fn class_of_projective_lines() {
    let sb = Sandbox::new();
    let a = sb.file("a.json", &pspace(&[5], &[&[0], &[1]]));
    let o = sb.run(&["class", "--action", s(&a)]);
    assert_eq!(stdout(&o).trim(), "[(1)] + [(4)]");
    let a = sb.file("b.json", &pspace(&[2], &[&[0], &[1]]));
    let o = sb.run(&["class", "--action", s(&a)]);
    assert_eq!(stdout(&o).trim(), "2·[(1)]");
    let a = sb.file("c.json", &pspace(&[5], &[&[0], &[0]]));
    assert_eq!(code(&sb.run(&["class", "--action", s(&a)])), 2);
}

#[test]
fn eq_exit_codes() {
    let sb = Sandbox::new();
    let one = sb.file("one.json", &pspace(&[5], &[&[0], &[1]]));
    let two = sb.file("two.json", &pspace(&[5], &[&[0], &[2]]));
    let minus = sb.file("minus.json", &pspace(&[5], &[&[1], &[0]]));
    let class = |a: &Path, name: &str| {
        let o = sb.run(&["--format", "json", "class", "--action", s(a)]);
        sb.file(name, &stdout(&o))
    };
    let c1 = class(&one, "c1.json");
    let c2 = class(&two, "c2.json");
    let cm = class(&minus, "cm.json");
    assert_eq!(code(&sb.run(&["eq", "--lhs", s(&c1), "--rhs", s(&c1)])), 0);
    assert_eq!(code(&sb.run(&["eq", "--lhs", s(&c1), "--rhs", s(&cm)])), 0);
    let o = sb.run(&["--format", "json", "eq", "--lhs", s(&c1), "--rhs", s(&c2)]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "distinct");
    assert!(!v["image"].as_array().unwrap().is_empty());
}

#[test]
fn eq_modulo_a_relation_row() {
    let sb = Sandbox::new();
    let class = |terms: &str| {
        format!(r#"{{"schema":1,"flavor":"b","group":{Z5},"n":2,"terms":[{terms}]}}"#)
    };
    let sym = |a: i64, b: i64, k: i64| format!(r#"{{"symbol":{{"beta":[[{a}],[{b}]]}},"coeff":{k}}}"#);
    let lhs = sb.file("l.json", &class(&[sym(1, 3, 1), sym(2, 4, 1)].join(",")));
    // Adds the blow-up row (1,2) - (4,2) - (1,1).
    let rhs = sb.file(
        "r.json",
        &class(&[sym(1, 3, 1), sym(2, 4, 1), sym(1, 2, 1), sym(1, 1, -1), sym(4, 2, -1)].join(",")),
    );
    let o = sb.run(&["--format", "json", "eq", "--lhs", s(&lhs), "--rhs", s(&rhs)]);
    assert_eq!(code(&o), 0, "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "equal");
}

#[test]
fn blowup_reports_both_classes() {
    let sb = Sandbox::new();
    let a = sb.file("p2.json", &pspace(&[5], &[&[0], &[1], &[3]]));
    let out = sb.path("p2b.json");
    let o = sb.run(&["blowup", "--action", s(&a), "--cone", "1,2", "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("before: [(1,3)] + [(2,3)] + [(2,4)]"));
    assert!(text.contains("after: [(1,2)] + [(2,3)] + [(2,4)] + [(3,3)]"));
    assert!(text.contains("verdict: Equal"));
    let o = sb.run(&["class", "--action", s(&out)]);
    assert_eq!(stdout(&o).trim(), "[(1,2)] + [(2,3)] + [(2,4)] + [(3,3)]");
}

#[test]
fn blowup_rejects_bad_cones() {
    let sb = Sandbox::new();
    let p2 = sb.file("p2.json", &pspace(&[5], &[&[0], &[1], &[3]]));
    assert_eq!(code(&sb.run(&["blowup", "--action", s(&p2), "--cone", "0,7"])), 2);
    let p1 = sb.file("p1.json", &pspace(&[5], &[&[0], &[1]]));
    assert_eq!(code(&sb.run(&["blowup", "--action", s(&p1), "--cone", "0"])), 2);
    assert_eq!(code(&sb.run(&["blowup", "--action", s(&p1), "--cone", "0,1"])), 2);
}

#[test]
fn det_of_identity_weights() {
    let sb = Sandbox::new();
    let a = sb.file("a.json", &pspace(&[5, 5], &[&[0, 0], &[1, 0], &[0, 1]]));
    let o = sb.run(&["det", "--action", s(&a)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.ends_with("{1,4}")));
}

#[test]
fn vanish_reports_predicates() {
    let sb = Sandbox::new();
    let f = sb.file("s.json", &format!(r#"{{"schema":1,"flavor":"b","group":{Z5},"n":2,"beta":[[1],[4]]}}"#));
    let o = sb.run(&["vanish", "--symbol", s(&f)]);
    assert_eq!(stdout(&o), "v: false\nsumzero: true\n");
    let f = sb.file(
        "k.json",
        &format!(
            r#"{{"schema":1,"flavor":"k","group":{Z5},"n":2,"beta":[[1],[2]],"field":{{"label":"k","trdeg":0,"params":0}}}}"#
        ),
    );
    let o = sb.run(&["vanish", "--symbol", s(&f)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("stable: "));
}

#[test]
fn compress_finds_one_witness() {
    let sb = Sandbox::new();
    let f = sb.file(
        "s.json",
        r#"{"schema":1,"flavor":"c","group":{"type":"abelian","orders":[2]},"n":2,"beta":[[1]]}"#,
    );
    let o = sb.run(&["--format", "json", "compress", "--symbol", s(&f)]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn standardize_clears_the_index() {
    let sb = Sandbox::new();
    let f = sb.file(
        "c.json",
        r#"{"schema":1,"group":{"type":"abelian","orders":[2]},"charts":[{"weights":[[1],[1]]}]}"#,
    );
    let o = sb.run(&["--format", "json", "standardize", "--charts", s(&f)]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["maxima"], serde_json::json!([2, 0]));
    assert_eq!(v["charts"].as_array().unwrap().len(), 2);
}

#[test]
fn cache_list_and_clear() {
    let sb = Sandbox::new();
    sb.run(&["--cache", "c", "present", "--group", Z5, "--n", "1"]);
    let o = sb.run(&["--cache", "c", "cache", "list"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).contains("abelian:[5]"));
    let o = sb.run(&["--cache", "c", "cache", "clear"]);
    assert_eq!(stdout(&o).trim(), "removed: 1");
    assert!(stdout(&sb.run(&["--cache", "c", "cache", "list"])).trim().is_empty());
}

#[test]
fn missing_files_exit_2() {
    let sb = Sandbox::new();
    assert_eq!(code(&sb.run(&["class", "--action", "nope.json"])), 2);
}
