use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chordalpoly::decomposition::{verify_combination, Combination};
use chordalpoly::fixtures::{C4, ORBIT_NOT_FACET, P3};
use chordalpoly::subgraph::ExtendedVector;
use chordalpoly::{parse_graph, SubgraphKind};
use tempfile::TempDir;

const K3: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_chordalpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: status.code().expect("exit code"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_cliques_or_hole() {
    let dir = TempDir::new().unwrap();
    let r = run(&["check", s(&file(&dir, "p3", P3))]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("chordal: yes"));
    assert!(r.stdout.contains("maximal cliques: 2"));

    let r = run(&["check", s(&file(&dir, "c4", C4))]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("chordal: no"));
    assert!(r.stdout.contains("hole: 1-2-3-4"));

    let r = run(&["check", s(&file(&dir, "fig", ORBIT_NOT_FACET))]);
    assert!(r.stdout.contains("chordal: yes"));
    assert!(r.stdout.contains("{1,2,3,6,7}"));
    assert!(r.stdout.contains("{1,2,3,4,5}"));
}

#[test]
fn check_reports_parse_errors_with_location() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad", "p edge 2 1\ne 1 3\n");
    let r = run(&["check", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("bad"), "{}", r.stderr);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    assert_eq!(run(&["check", "/nonexistent/graph"]).code, 2);
}

#[test]
fn system_row_counts() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3", P3);
    let out = dir.path().join("tree.lp");
    let r = run(&["system", "tree", s(&p3), "--polytope", "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("rows: 10"));
    assert!(r.stdout.contains("tree rows: 4"));
    let lp = fs::read_to_string(&out).unwrap();
    assert_eq!(lp.lines().filter(|l| !l.starts_with('#')).count(), 10);
    assert!(lp.contains("+1*x1 +1*x2 +1*x3 -1*y1_2 -1*y2_3 = 1"));

    let r = run(&["system", "path", s(&p3), "--polytope"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("path rows: 5"));
    assert!(r.stderr.contains("nonnegativity rows: 5"));
    assert!(r.stderr.contains("hyperplane rows: 1"));
    assert_eq!(r.stdout.lines().filter(|l| !l.starts_with('#')).count(), 11);
}

#[test]
fn system_on_non_chordal_prints_witness() {
    let dir = TempDir::new().unwrap();
    let r = run(&["system", "path", s(&file(&dir, "c4", C4))]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("hole 1-2-3-4"), "{}", r.stderr);
    assert!(r.stderr.contains("v 1 2"), "{}", r.stderr);
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3", P3);
    let ones = file(&dir, "w", "v 1 1\nv 2 1\nv 3 1\ne 1 2 1\ne 2 3 1\n");
    let r = run(&["solve", "path", s(&p3), s(&ones)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("value: 5\n"));
    assert!(r.stdout.contains("set: {1,2,3}\n"));
    assert!(r.stdout.contains("recomputed weight 5 ok"));

    let k3 = file(&dir, "k3", K3);
    let w = file(&dir, "w2", "v 1 1\nv 2 1\nv 3 1\ne 1 2 10\ne 1 3 10\ne 2 3 10\n");
    let r = run(&["solve", "tree", s(&k3), s(&w)]);
    assert!(r.stdout.contains("value: 12\n"));
    let set = r.stdout.lines().find(|l| l.starts_with("set:")).unwrap();
    assert_eq!(set.matches(',').count(), 1, "{set}");

    let one = file(&dir, "k1", "p edge 1 0\n");
    let neg = file(&dir, "w3", "v 1 -3\n");
    let r = run(&["solve", "tree", s(&one), s(&neg)]);
    assert!(r.stdout.contains("value: -3\n"));
    assert!(r.stdout.contains("set: {1}\n"));
}

#[test]
fn solve_rejects_bad_weights() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3", P3);
    assert_eq!(run(&["solve", "path", s(&p3), s(&file(&dir, "w", "v 9 1\n"))]).code, 2);
    assert_eq!(
        run(&["solve", "path", s(&p3), s(&file(&dir, "w", "e 1 3 1\n"))]).code,
        2
    );
    let c4 = file(&dir, "c4", C4);
    assert_eq!(run(&["solve", "tree", s(&c4), s(&file(&dir, "w", ""))]).code, 2);
}

#[test]
fn facets_examples() {
    let dir = TempDir::new().unwrap();
    let r = run(&["facets", "--rank", s(&file(&dir, "fig", ORBIT_NOT_FACET))]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .contains("w=1 K={2,3} C={4,5,6,7} orbit yes facet no rank not a facet"));

    let r = run(&["facets", "--rank", s(&file(&dir, "p3", P3))]);
    assert_eq!(r.code, 0);
    for line in [
        "w=2 K={} C={1,3} orbit yes facet no",
        "w=2 K={1} C={} orbit yes facet yes (vacuous)",
        "w=2 K={3} C={} orbit yes facet yes (vacuous)",
        "w=1 K={2} C={} orbit yes facet yes (vacuous)",
        "w=3 K={2} C={} orbit yes facet yes (vacuous)",
    ] {
        assert!(r.stdout.contains(line), "missing `{line}`");
    }
    assert!(!r.stdout.contains("MISMATCH"));

    let r = run(&["facets", s(&file(&dir, "k3", K3))]);
    assert_eq!(r.stdout.matches("C={} orbit yes facet yes (vacuous)").count(), 3);
}

#[test]
fn decompose_examples() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3", P3);
    let r = run(&[
        "decompose",
        "path",
        s(&p3),
        s(&file(&dir, "pt", "v 1 1\nv 2 1\nv 3 2\ne 1 2 1\n")),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let body: Vec<&str> = r.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["1 : 1 2", "2 : 3"]);

    let pt = "v 1 1\nv 2 2\nv 3 1\ne 1 2 1\ne 2 3 1\n";
    let r = run(&[
        "decompose",
        "tree",
        s(&p3),
        s(&file(&dir, "pt2", pt)),
        "--check-invariants",
    ]);
    assert_eq!(r.code, 0);
    let g = parse_graph(P3).unwrap();
    let c = Combination::parse(&r.stdout, 3).unwrap();
    let p = ExtendedVector::from_ints(&[1, 2, 1], &[1, 1]);
    assert!(verify_combination(&g, SubgraphKind::Tree, &c, &p));
    assert_eq!(c.total(), 2);
}

#[test]
fn decompose_rejects_points_outside_the_cone() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3", K3);
    let pt = file(&dir, "pt", "v 1 1\nv 2 1\nv 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1\n");
    let r = run(&["decompose", "tree", s(&k3), s(&pt)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not in the cone"));
    assert!(r.stderr.contains("TreeClique(1,{1,2,3})"));
    let half = file(&dir, "half", "v 1 1/2\n");
    let r = run(&["decompose", "tree", s(&k3), s(&half)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not integral"));
}

#[test]
fn verify_suites() {
    for (suite, n, trials, seed) in [
        ("contraction", "8", "100", "1"),
        ("lp-vs-bruteforce", "9", "200", "2"),
        ("witness", "8", "50", "3"),
    ] {
        let r = run(&["verify", "--suite", suite, "--n", n, "--trials", trials, "--seed", seed]);
        assert_eq!(r.code, 0, "{suite}: {}", r.stdout);
        assert!(r.stdout.contains(&format!("# seed: {seed}")));
        assert!(r.stdout.contains("result: pass"));
    }
    assert_eq!(run(&["verify", "--suite", "nope"]).code, 2);
}

#[test]
fn reports_are_deterministic() {
    let a = run(&[
        "verify",
        "--suite",
        "decomposition-roundtrip",
        "--n",
        "7",
        "--trials",
        "20",
        "--seed",
        "5",
    ]);
    let b = run(&[
        "verify",
        "--suite",
        "decomposition-roundtrip",
        "--n",
        "7",
        "--trials",
        "20",
        "--seed",
        "5",
    ]);
    let strip = |s: &str| -> Vec<String> { s.lines().map(|l| l.split(" in ").next().unwrap().to_string()).collect() };
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}
