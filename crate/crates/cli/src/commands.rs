//! One function per subcommand. Each returns an [`Outcome`]; errors are
//! input problems unless they carry a theory-violation library error.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use chordalpoly::decomposition::{
    decompose_with, expected_total, oracle_decompose_bounded, verify_combination, Combination, DecomposeOptions,
    OracleOutcome,
};
use chordalpoly::error::format_cycle;
use chordalpoly::graph::{find_hole, format_set, maximal_cliques, mcs_order, Graph};
use chordalpoly::lp::max_weight_subgraph;
use chordalpoly::polyhedra::{
    facet_rank_oracle, facet_verdict, non_binary_witness, orbit_cliques, path_system, tree_system, CliqueMode,
    FacetVerdict, RankVerdict, RowTag,
};
use chordalpoly::rational::{self, Rational};
use chordalpoly::subgraph::{is_induced, SubgraphKind};
use chordalpoly::suites::{self, SuiteConfig};
use chordalpoly::Error;
use num_traits::Zero;

use crate::input::{format_vector, load_graph, load_vector, Source};
use crate::report::Report;

pub struct Outcome {
    pub report: Report,
    /// Text for stdout in place of the report (which then goes to stderr).
    pub payload: Option<String>,
    /// A checked property failed: exit code 3.
    pub violated: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            payload: None,
            violated: false,
        }
    }
}

/// Rotates a cycle to start at its smallest vertex, then its smaller neighbour.
fn normalize_cycle(h: &mut [usize]) {
    if let Some(pos) = h.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
        h.rotate_left(pos);
        if h.len() > 2 && h[h.len() - 1] < h[1] {
            h[1..].reverse();
        }
    }
}

/// Fails when `g` is not chordal, after printing a non-binary point that
/// satisfies every row of both systems.
fn require_chordal(g: &Graph) -> Result<()> {
    if mcs_order(g).1 {
        return Ok(());
    }
    if let Some(p) = non_binary_witness(g) {
        eprint!(
            "non-binary point satisfying every row of both systems:\n{}",
            format_vector(&p, g)
        );
    }
    let mut hole = find_hole(g).unwrap_or_default();
    normalize_cycle(&mut hole);
    Err(Error::NonChordalInput { hole }.into())
}

pub fn check(graph: &Source, seed: u64) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let mut r = Report::new("check", seed);
    r.input(graph);
    r.line(format!("vertices: {} edges: {}", g.n(), g.m()));
    let (peo, chordal) = mcs_order(&g);
    if chordal {
        r.line("chordal: yes");
        let order: Vec<String> = peo.order.iter().map(|v| (v + 1).to_string()).collect();
        r.line(format!("peo: {}", order.join(" ")));
        let cliques = maximal_cliques(&g, &peo)?;
        r.line(format!("maximal cliques: {}", cliques.len()));
        for c in &cliques {
            r.line(format!("  {}", format_set(c.verts())));
        }
    } else {
        r.line("chordal: no");
        let mut hole = find_hole(&g).context("non-chordal graph without a hole")?;
        normalize_cycle(&mut hole);
        r.line(format!("hole: {}", format_cycle(&hole)));
    }
    Ok(Outcome::ok(r))
}

pub struct SystemArgs<'a> {
    pub kind: SubgraphKind,
    pub graph: &'a Source,
    pub all_cliques: bool,
    pub polytope: bool,
    pub output: Option<&'a Path>,
}

pub fn system(a: SystemArgs<'_>, seed: u64) -> Result<Outcome> {
    let g = load_graph(a.graph)?;
    require_chordal(&g)?;
    let mode = if a.all_cliques {
        CliqueMode::All
    } else {
        CliqueMode::Orbits
    };
    let sys = match a.kind {
        SubgraphKind::Tree => tree_system(&g, a.polytope),
        SubgraphKind::Path => path_system(&g, mode, a.polytope)?,
    };
    let body = if a.polytope { "polytope" } else { "cone" };
    let text = sys.to_lp_text(&g, &format!("induced {} {body}, seed {seed}", a.kind));

    let mut r = Report::new(format!("system {}", a.kind), seed);
    r.input(a.graph);
    let (n, m) = (g.n(), g.m());
    let nonneg = sys.count_tagged(|t| matches!(t, RowTag::NonNegVertex(_) | RowTag::NonNegEdge(..)));
    let hyper = sys.count_tagged(|t| matches!(t, RowTag::Hyperplane));
    let inequalities = sys.len() - nonneg - hyper;
    r.line(format!("rows: {}", sys.len()));
    r.line(format!("  {} rows: {inequalities}", a.kind));
    r.line(format!("  nonnegativity rows: {nonneg}"));
    r.line(format!("  hyperplane rows: {hyper}"));
    let bound = match (a.kind, mode) {
        (SubgraphKind::Tree, _) => {
            let cliques = maximal_cliques(&g, &mcs_order(&g).0)?.len();
            Some(n * cliques + n + m + 1)
        }
        (SubgraphKind::Path, CliqueMode::Orbits) => Some(2 * n * n + n + m + 1),
        (SubgraphKind::Path, CliqueMode::All) => None,
    };
    let mut violated = false;
    if let Some(b) = bound {
        let ok = sys.len() <= b;
        r.line(format!(
            "size bound: {} <= {b} {}",
            sys.len(),
            if ok { "ok" } else { "VIOLATED" }
        ));
        violated = !ok;
    }
    let payload = match a.output {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            r.line(format!("written: {}", path.display()));
            None
        }
        None => Some(text),
    };
    Ok(Outcome {
        report: r,
        payload,
        violated,
    })
}

fn weight_of(g: &Graph, w: &chordalpoly::ExtendedVector, set: &[usize]) -> Rational {
    let vertices = set.iter().fold(Rational::zero(), |acc, &v| acc + &w.x[v]);
    g.induced_edges(set).into_iter().fold(vertices, |acc, e| acc + &w.y[e])
}

pub fn solve(kind: SubgraphKind, graph: &Source, weights: &Source, seed: u64) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let w = load_vector(weights, &g)?;
    require_chordal(&g)?;
    let best = max_weight_subgraph(kind, &g, &w)?;
    let mut r = Report::new(format!("solve {kind}"), seed);
    r.input(graph);
    r.input(weights);
    r.line(format!("value: {}", rational::format(&best.value)));
    r.line(format!("set: {}", format_set(&best.set)));
    r.line(format!("simplex pivots: {}", best.iterations));
    let recomputed = weight_of(&g, &w, &best.set);
    let induced = is_induced(kind, &g, &best.set)?;
    let ok = induced && recomputed == best.value;
    r.line(format!(
        "verification: induced {kind} {}, recomputed weight {} {}",
        if induced { "yes" } else { "no" },
        rational::format(&recomputed),
        if ok { "ok" } else { "MISMATCH" }
    ));
    Ok(Outcome {
        report: r,
        payload: None,
        violated: !ok,
    })
}

pub fn facets(graph: &Source, rank: bool, seed: u64) -> Result<Outcome> {
    let g = load_graph(graph)?;
    require_chordal(&g)?;
    let mut r = Report::new("facets", seed);
    r.input(graph);
    let n = g.n();
    let (mut total, mut facets, mut violated) = (0usize, 0usize, false);
    for w in 0..n {
        let orbits = orbit_cliques(&g, w)?;
        if orbits.len() > 2 * n {
            r.warn(format!(
                "vertex {}: {} orbit cliques exceed 2n = {}",
                w + 1,
                orbits.len(),
                2 * n
            ));
            violated = true;
        }
        for o in &orbits {
            let c: Vec<usize> = o
                .closure
                .iter()
                .copied()
                .filter(|&u| u != w && !o.clique.contains(u))
                .collect();
            let verdict = facet_verdict(&g, w, &o.clique)?;
            let shown = match verdict {
                FacetVerdict::Facet => "yes",
                FacetVerdict::VacuousFacet => "yes (vacuous)",
                FacetVerdict::NotFacet => "no",
            };
            let mut line = format!(
                "w={} K={} C={} orbit yes facet {shown}",
                w + 1,
                format_set(o.clique.verts()),
                format_set(&c)
            );
            if rank {
                let rv = facet_rank_oracle(&g, w, &o.clique)?;
                let agrees = (rv == RankVerdict::Facet) == verdict.is_facet();
                line.push_str(&format!(" rank {rv}{}", if agrees { "" } else { " MISMATCH" }));
                violated |= !agrees;
            }
            r.line(line);
            total += 1;
            facets += usize::from(verdict.is_facet());
        }
    }
    let bound = 2 * n * n;
    r.line(format!(
        "orbit cliques: {total} (bound 2n^2 = {bound}), facet-defining: {facets}"
    ));
    if total > bound {
        r.warn(format!("{total} orbit cliques exceed 2n^2 = {bound}"));
        violated = true;
    }
    Ok(Outcome {
        report: r,
        payload: None,
        violated,
    })
}

pub struct DecomposeArgs<'a> {
    pub kind: SubgraphKind,
    pub graph: &'a Source,
    pub point: &'a Source,
    pub check_invariants: bool,
    pub oracle_nodes: usize,
}

/// Appends the combination and its verification; returns whether it passed.
fn emit_combination(
    r: &mut Report,
    g: &Graph,
    kind: SubgraphKind,
    c: &Combination,
    p: &chordalpoly::ExtendedVector,
) -> bool {
    for l in c.to_text().lines() {
        r.line(l);
    }
    let ok = verify_combination(g, kind, c, p) && expected_total(p) == Some(c.total());
    r.line(format!(
        "# verification: {} supports, total {} {}",
        c.len(),
        c.total(),
        if ok { "ok" } else { "FAILED" }
    ));
    ok
}

pub fn decompose(a: DecomposeArgs<'_>, seed: u64) -> Result<Outcome> {
    let g = load_graph(a.graph)?;
    let p = load_vector(a.point, &g)?;
    let mut r = Report::new(format!("decompose {}", a.kind), seed);
    r.input(a.graph);
    r.input(a.point);
    let opts = DecomposeOptions {
        check_invariants: a.check_invariants,
    };
    match decompose_with(a.kind, &g, &p, opts) {
        Ok(d) => {
            let ok = emit_combination(&mut r, &g, a.kind, &d.combination, &p);
            let m = d.moves;
            r.line(format!(
                "# moves: tree-shift {} extend {} split-edge {} splice-inner {} splice-with-v {} chain {}",
                m.tree_shift, m.extend, m.split_edge, m.splice_inner, m.splice_with_v, m.chain
            ));
            Ok(Outcome {
                report: r,
                payload: None,
                violated: !ok,
            })
        }
        Err(Error::StuckWithPositiveGap(dump)) => {
            r.warn(format!("constructive decomposition stuck: {dump}"));
            match oracle_decompose_bounded(a.kind, &g, &p, a.oracle_nodes) {
                OracleOutcome::Found(c) => {
                    r.line("# exhaustive search result:");
                    emit_combination(&mut r, &g, a.kind, &c, &p);
                }
                OracleOutcome::NoDecomposition => r.warn("exhaustive search: no integer decomposition exists"),
                OracleOutcome::Exhausted => r.warn("exhaustive search: node budget exhausted"),
            }
            Ok(Outcome {
                report: r,
                payload: None,
                violated: true,
            })
        }
        Err(e) => Err(e.into()),
    }
}

/// Canonical suite name; the long names describe what each suite compares.
pub fn suite_name(name: &str) -> Option<&'static str> {
    let canonical = match name {
        "lp-vs-bruteforce" => "lp",
        "decomposition-roundtrip" => "decomposition",
        "facets-vs-oracle" => "facets",
        "orbits-vs-oracle" => "orbits",
        other => other,
    };
    suites::SUITES.iter().copied().find(|&s| s == canonical)
}

pub fn verify(suite: &str, n: usize, trials: usize, seed: u64) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" {
        suites::SUITES.to_vec()
    } else {
        vec![suite_name(suite).ok_or_else(|| {
            anyhow!(
                "unknown suite `{suite}` (expected all, {}, lp-vs-bruteforce, decomposition-roundtrip, facets-vs-oracle or orbits-vs-oracle)",
                suites::SUITES.join(", ")
            )
        })?]
    };
    let cfg = SuiteConfig::new(seed, trials, n);
    let mut r = Report::new(format!("verify --suite {suite} --n {n} --trials {trials}"), seed);
    let mut violated = false;
    for name in names {
        let rep = suites::run_suite(name, &cfg).expect("known suite");
        r.line(rep.summary_line());
        for f in &rep.failures {
            r.line(format!("  {f}"));
        }
        violated |= !rep.passed();
    }
    r.line(if violated { "result: FAIL" } else { "result: pass" });
    Ok(Outcome {
        report: r,
        payload: None,
        violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_rotate_to_smallest() {
        for mut h in [vec![2, 3, 0, 1], vec![2, 1, 0, 3]] {
            normalize_cycle(&mut h);
            assert_eq!(h, [0, 1, 2, 3]);
        }
    }

    #[test]
    fn suite_aliases() {
        assert_eq!(suite_name("lp-vs-bruteforce"), Some("lp"));
        assert_eq!(suite_name("witness"), Some("witness"));
        assert_eq!(suite_name("nope"), None);
    }
}
