//! Seeded property suites shared by the acceptance tests and the `verify`
//! command. Each trial draws its own RNG from the master seed and the trial
//! index, so results do not depend on scheduling.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::decomposition::{
    decompose_with, expected_total, oracle_decompose_bounded, splice_paths, verify_combination, Combination,
    DecomposeOptions, OracleOutcome,
};
use crate::error::Error;
use crate::graph::{find_hole, gen_random_chordal, gen_random_graph, is_hole, mcs_order, Graph};
use crate::lp::{max_weight_subgraph, simplex_max, LpStatus};
use crate::polyhedra::{
    check_membership, facet_rank_oracle, is_facet_defining, non_binary_witness, orbit_cliques, orbit_cliques_oracle,
    path_system, tree_system, twin_graph, CliqueMode, RankVerdict, RowTag,
};
use crate::rational::{frac, int, Rational};
use crate::subgraph::{enumerate_induced, incidence_vector, path_order, ExtendedVector, SubgraphKind};

pub const SUITES: &[&str] = &[
    "chordality",
    "systems",
    "lp",
    "witness",
    "decomposition",
    "idp",
    "facets",
    "orbits",
    "domination",
    "contraction",
    "claim",
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    /// Largest graph order drawn.
    pub max_n: usize,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize, max_n: usize) -> Self {
        SuiteConfig { seed, trials, max_n }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    /// Individual assertions evaluated.
    pub checks: usize,
    pub failures: Vec<String>,
    /// Named tallies (e.g. `stuck`, `integrality`), summed over trials.
    pub counters: BTreeMap<String, usize>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn counter(&self, key: &str) -> usize {
        self.counters.get(key).copied().unwrap_or(0)
    }

    pub fn summary_line(&self) -> String {
        let counters: Vec<String> = self.counters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{} {}: seed {} trials {} checks {} failures {}{} in {:.2?}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.seed,
            self.trials,
            self.checks,
            self.failures.len(),
            if counters.is_empty() {
                String::new()
            } else {
                format!(" [{}]", counters.join(" "))
            },
            self.elapsed
        )
    }
}

/// What one trial found.
#[derive(Default)]
struct Trial {
    checks: usize,
    failures: Vec<String>,
    counters: BTreeMap<String, usize>,
}

impl Trial {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn bump(&mut self, key: &str, by: usize) {
        *self.counters.entry(key.to_string()).or_insert(0) += by;
    }
}

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mixed = seed ^ (trial as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    ChaCha8Rng::seed_from_u64(mixed)
}

const MAX_REPORTED_FAILURES: usize = 20;

fn run_trials<F>(name: &str, cfg: &SuiteConfig, trials: usize, f: F) -> SuiteReport
where
    F: Fn(usize, &mut ChaCha8Rng, &mut Trial) + Sync,
{
    let start = Instant::now();
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(cfg.seed, i);
            let mut t = Trial::default();
            f(i, &mut rng, &mut t);
            t
        })
        .collect();
    let mut report = SuiteReport {
        name: name.to_string(),
        seed: cfg.seed,
        trials,
        ..SuiteReport::default()
    };
    let mut total_failures = 0;
    for (i, t) in results.into_iter().enumerate() {
        report.checks += t.checks;
        total_failures += t.failures.len();
        for msg in t.failures {
            if report.failures.len() < MAX_REPORTED_FAILURES {
                report.failures.push(format!("trial {i}: {msg}"));
            }
        }
        for (k, v) in t.counters {
            *report.counters.entry(k).or_insert(0) += v;
        }
    }
    if total_failures > report.failures.len() {
        let more = total_failures - report.failures.len();
        report.failures.push(format!("… and {more} more"));
    }
    report.elapsed = start.elapsed();
    report
}

fn random_chordal(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n.max(min_n));
    let density = rng.gen_range(0.15..0.95);
    gen_random_chordal(n, density, rng.gen())
}

fn random_non_chordal(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(4..=max_n.max(4));
        let g = gen_random_graph(n, rng.gen_range(0.25..0.7), rng.gen());
        if !mcs_order(&g).1 {
            return g;
        }
    }
}

fn random_weights(rng: &mut ChaCha8Rng, g: &Graph, lo: i64, hi: i64) -> ExtendedVector {
    ExtendedVector {
        x: (0..g.n()).map(|_| int(rng.gen_range(lo..=hi))).collect(),
        y: (0..g.m()).map(|_| int(rng.gen_range(lo..=hi))).collect(),
    }
}

/// Subset scan: some set of at least four vertices induces a 2-regular
/// connected subgraph.
pub fn has_hole_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "subset scan is for small graphs");
    (0u32..1 << n).any(|mask| {
        if mask.count_ones() < 4 {
            return false;
        }
        let w: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if w.iter().any(|&u| w.iter().filter(|&&v| g.adjacent(u, v)).count() != 2) {
            return false;
        }
        g.components_of(&w).len() == 1
    })
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("valid labelled graph")
}

fn check_chordality(g: &Graph, t: &mut Trial) {
    let fast = mcs_order(g).1;
    let brute = !has_hole_bruteforce(g);
    t.check(fast == brute, || {
        format!("mcs says chordal={fast}, subset scan says {brute} on {g:?}")
    });
    match find_hole(g) {
        Some(h) => t.check(!fast && is_hole(g, &h), || format!("bad hole {h:?} in {g:?}")),
        None => t.check(fast, || format!("no hole found in non-chordal {g:?}")),
    }
    if fast {
        t.bump("chordal", 1);
    }
}

/// Every labelled graph on `1..=max_n` vertices.
pub fn chordality_exhaustive(max_n: usize) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport {
        name: format!("chordality-exhaustive(n<={max_n})"),
        ..SuiteReport::default()
    };
    for n in 1..=max_n {
        let pairs = n * (n - 1) / 2;
        let trials: Vec<Trial> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let mut t = Trial::default();
                check_chordality(&graph_from_mask(n, mask), &mut t);
                t
            })
            .collect();
        report.trials += trials.len();
        for t in trials {
            report.checks += t.checks;
            for f in t.failures {
                if report.failures.len() < MAX_REPORTED_FAILURES {
                    report.failures.push(f);
                }
            }
            for (k, v) in t.counters {
                *report.counters.entry(k).or_insert(0) += v;
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Random `G(n, p)` graphs with `n = max_n`.
pub fn chordality(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("chordality", cfg, cfg.trials, |_, rng, t| {
        let g = gen_random_graph(cfg.max_n, rng.gen_range(0.1..0.9), rng.gen());
        check_chordality(&g, t);
    })
}

/// Every induced tree (path) incidence vector satisfies its system in each
/// clique mode.
pub fn systems(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("systems", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n.min(9));
        let tree = tree_system(&g, true);
        for w in enumerate_induced(SubgraphKind::Tree, &g) {
            let ok = check_membership(&tree, &incidence_vector(&g, &w))
                .map(|r| r.0)
                .unwrap_or(false);
            t.check(ok, || format!("tree {w:?} violates the tree system of {g:?}"));
        }
        for mode in [CliqueMode::Orbits, CliqueMode::All] {
            let sys = match path_system(&g, mode, true) {
                Ok(s) => s,
                Err(e) => return t.check(false, || format!("{mode:?} system: {e}")),
            };
            for w in enumerate_induced(SubgraphKind::Path, &g) {
                let ok = check_membership(&sys, &incidence_vector(&g, &w))
                    .map(|r| r.0)
                    .unwrap_or(false);
                t.check(ok, || format!("path {w:?} violates the {mode:?} path system of {g:?}"));
            }
        }
    })
}

/// Exact LP optimum against the brute-force maximum, for both kinds; the
/// `integrality` counter tallies non-binary or non-induced optimal vertices.
pub fn lp(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("lp", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n);
        let w = random_weights(rng, &g, -5, 5);
        for kind in [SubgraphKind::Tree, SubgraphKind::Path] {
            let brute = enumerate_induced(kind, &g)
                .iter()
                .map(|s| incidence_vector(&g, s).dot(&w))
                .max()
                .expect("nonempty graph");
            match max_weight_subgraph(kind, &g, &w) {
                Ok(r) => {
                    t.bump("iterations", r.iterations);
                    t.check(r.value == brute, || {
                        format!("{kind}: LP {} vs brute force {} on {g:?}", r.value, brute)
                    });
                }
                Err(Error::InternalIntegralityViolation(msg)) => {
                    t.bump("integrality", 1);
                    t.check(false, || format!("{kind}: non-binary vertex {msg} on {g:?}"));
                }
                Err(e) => t.check(false, || format!("{kind}: {e} on {g:?}")),
            }
            t.bump("solves", 1);
        }
    })
}

fn check_witness(g: &Graph, t: &mut Trial) {
    let Some(p) = non_binary_witness(g) else {
        return t.check(false, || format!("no witness for non-chordal {g:?}"));
    };
    let two = int(2);
    t.check(p.iter().any(|c| *c == two), || format!("witness without a 2 on {g:?}"));
    let tree_ok = check_membership(&tree_system(g, true), &p)
        .map(|r| r.0)
        .unwrap_or(false);
    t.check(tree_ok, || format!("witness outside the tree system of {g:?}"));
    let mut modes = vec![CliqueMode::Orbits];
    if (0..g.n()).all(|v| g.degree(v) <= 12) {
        modes.push(CliqueMode::All);
    }
    for mode in modes {
        let ok = path_system(g, mode, true)
            .and_then(|s| check_membership(&s, &p))
            .map(|r| r.0)
            .unwrap_or(false);
        t.check(ok, || format!("witness outside the {mode:?} path system of {g:?}"));
    }
}

/// Cycles `C4..C8` followed by random non-chordal graphs.
pub fn witness(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("witness", cfg, cfg.trials + 5, |i, rng, t| {
        let g = if i < 5 {
            Graph::cycle(i + 4)
        } else {
            random_non_chordal(rng, cfg.max_n)
        };
        check_witness(&g, t);
    })
}

fn random_combination(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    kind: SubgraphKind,
    max_supports: usize,
    max_lambda: u64,
) -> Combination {
    let all = enumerate_induced(kind, g);
    let mut c = Combination::new();
    for _ in 0..rng.gen_range(1..=max_supports) {
        let w = all.choose(rng).expect("nonempty graph");
        c.add(w, rng.gen_range(1..=max_lambda));
    }
    c
}

fn check_roundtrip(g: &Graph, kind: SubgraphKind, p: &ExtendedVector, want_total: u64, t: &mut Trial) {
    match decompose_with(kind, g, p, DecomposeOptions { check_invariants: true }) {
        Ok(d) => {
            let ok = verify_combination(g, kind, &d.combination, p);
            t.check(ok, || {
                format!("{kind}: {} does not verify on {g:?}", d.combination.to_text())
            });
            let total = d.combination.total();
            t.check(total == want_total && expected_total(p) == Some(total), || {
                format!("{kind}: Σλ = {total}, expected {want_total} on {g:?}")
            });
            let m = d.moves;
            for (key, count) in [
                ("move-tree", m.tree_shift),
                ("move-extend", m.extend),
                ("move-split", m.split_edge),
                ("move-splice", m.splice_inner),
                ("move-splice-v", m.splice_with_v),
                ("move-chain", m.chain),
            ] {
                t.bump(key, count);
            }
        }
        Err(e) => {
            if matches!(e, Error::StuckWithPositiveGap(_)) {
                t.bump("stuck", 1);
            }
            t.check(false, || {
                format!(
                    "{kind}: {e} on {g:?}\n{}",
                    p.iter().map(crate::rational::format).collect::<Vec<_>>().join(" ")
                )
            });
        }
    }
}

/// Random combinations (≤ 5 supports, λ ≤ 3) decomposed and verified.
pub fn decomposition(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("decomposition", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n);
        for kind in [SubgraphKind::Tree, SubgraphKind::Path] {
            let c = random_combination(rng, &g, kind, 5, 3);
            check_roundtrip(&g, kind, &c.sum_vector(&g), c.total(), t);
        }
    })
}

/// Sums of `k ∈ {2, 3, 4}` incidence vectors; `cfg.trials` per `k`.
pub fn idp(cfg: &SuiteConfig) -> SuiteReport {
    let mut reports = Vec::new();
    for k in 2..=4usize {
        reports.push(idp_k(cfg, k));
    }
    merge("idp", cfg.seed, reports)
}

pub fn idp_k(cfg: &SuiteConfig, k: usize) -> SuiteReport {
    let sub = SuiteConfig {
        seed: cfg.seed.wrapping_add(k as u64),
        ..*cfg
    };
    run_trials(&format!("idp(k={k})"), &sub, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n);
        for kind in [SubgraphKind::Tree, SubgraphKind::Path] {
            let all = enumerate_induced(kind, &g);
            let mut p = ExtendedVector::zeros(&g);
            for _ in 0..k {
                let w = all.choose(rng).expect("nonempty graph");
                p.add_scaled(&incidence_vector(&g, w), &Rational::one());
            }
            check_roundtrip(&g, kind, &p, k as u64, t);
        }
    })
}

fn merge(name: &str, seed: u64, reports: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport {
        name: name.to_string(),
        seed,
        ..SuiteReport::default()
    };
    for r in reports {
        out.trials += r.trials;
        out.checks += r.checks;
        out.elapsed += r.elapsed;
        out.failures
            .extend(r.failures.into_iter().map(|f| format!("{}: {f}", r.name)));
        for (k, v) in r.counters {
            *out.counters.entry(k).or_insert(0) += v;
        }
    }
    out
}

/// The combinatorial facet test against exact affine rank on every
/// orbit-defining clique.
pub fn facets(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("facets", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n.min(7));
        for w in 0..g.n() {
            for o in orbit_cliques_oracle(&g, w) {
                let fast = is_facet_defining(&g, w, &o.clique);
                let rank = facet_rank_oracle(&g, w, &o.clique);
                let (Ok(fast), Ok(rank)) = (fast, rank) else {
                    return t.check(false, || format!("facet test errored on {g:?}"));
                };
                t.bump(if fast { "facet" } else { "non-facet" }, 1);
                if rank == RankVerdict::Improper {
                    t.bump("improper", 1);
                }
                t.check(fast == (rank == RankVerdict::Facet), || {
                    format!(
                        "w={} K={}: criterion says {fast}, rank oracle says {rank} on {g:?}",
                        w + 1,
                        crate::graph::format_set(o.clique.verts())
                    )
                });
            }
        }
    })
}

/// Twin-graph orbit cliques against the definition, with the `2n` and `2n²`
/// size bounds.
pub fn orbits(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("orbits", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n.min(8));
        let n = g.n();
        for w in 0..n {
            let fast: Result<Vec<Vec<usize>>, _> =
                orbit_cliques(&g, w).map(|os| os.into_iter().map(|o| o.clique.verts().to_vec()).collect());
            let slow: Vec<Vec<usize>> = orbit_cliques_oracle(&g, w)
                .into_iter()
                .map(|o| o.clique.verts().to_vec())
                .collect();
            match fast {
                Ok(fast) => {
                    t.check(fast == slow, || {
                        format!("w={}: {fast:?} vs oracle {slow:?} on {g:?}", w + 1)
                    });
                    t.check(fast.len() <= 2 * n, || {
                        format!("w={}: {} orbits > 2n", w + 1, fast.len())
                    });
                }
                Err(e) => t.check(false, || format!("w={}: {e}", w + 1)),
            }
            let nw = g.neighbors(w);
            if !nw.is_empty() {
                let (local, _) = g.induced_subgraph(nw).expect("neighbourhood");
                let h = twin_graph(&local).expect("twin graph");
                t.bump("twin-graphs", 1);
                if !mcs_order(&h).1 {
                    t.bump("twin-graphs-non-chordal", 1);
                }
            }
        }
        match path_system(&g, CliqueMode::Orbits, false) {
            Ok(sys) => {
                let rows = sys.count_tagged(|tag| matches!(tag, RowTag::PathClique { .. }));
                t.check(rows <= 2 * n * n, || format!("{rows} clique rows > 2n² on {g:?}"));
            }
            Err(e) => t.check(false, || e.to_string()),
        }
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-10..=10), rng.gen_range(1..=4))
}

/// LP optima over the orbit-row and all-clique-row path systems coincide.
pub fn domination(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("domination", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n.min(8));
        let obj = ExtendedVector {
            x: (0..g.n()).map(|_| random_rational(rng)).collect(),
            y: (0..g.m()).map(|_| random_rational(rng)).collect(),
        };
        let solve = |mode| {
            path_system(&g, mode, true)
                .and_then(|s| simplex_max(&s, &obj))
                .map(|r| (r.status, r.value))
        };
        match (solve(CliqueMode::Orbits), solve(CliqueMode::All)) {
            (Ok((LpStatus::Optimal, a)), Ok((LpStatus::Optimal, b))) => t.check(a == b, || {
                format!("orbit optimum {a:?} vs all-clique optimum {b:?} on {g:?}")
            }),
            (a, b) => t.check(false, || {
                format!("solves ended {:?} / {:?}", a.map(|r| r.0), b.map(|r| r.0))
            }),
        }
    })
}

/// Contracting any edge set of a chordal graph keeps it chordal.
pub fn contraction(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("contraction", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n);
        let q = rng.gen_range(0.0..0.6);
        let f: Vec<usize> = (0..g.m()).filter(|_| rng.gen_bool(q)).collect();
        match g.contract_edges(&f) {
            Ok((h, _)) => {
                t.check(mcs_order(&h).1, || format!("contracting {f:?} in {g:?} gives {h:?}"));
                t.bump("contracted-edges", f.len());
            }
            Err(e) => t.check(false, || e.to_string()),
        }
    })
}

/// Every valid `(P1, P2, u)` on `g`: the two `u`-neighbours are adjacent or
/// the paths splice into an induced path. Returns the number of triples.
pub fn check_claim_exhaustive(g: &Graph) -> (usize, Vec<String>) {
    let paths = enumerate_induced(SubgraphKind::Path, g);
    let ordered: Vec<Vec<usize>> = paths.iter().map(|p| path_order(g, p).expect("path")).collect();
    let mut triples = 0;
    let mut bad = Vec::new();
    for (i, a) in ordered.iter().enumerate() {
        if a.len() < 2 {
            continue;
        }
        for (j, b) in ordered.iter().enumerate().skip(i + 1) {
            if b.len() < 2 {
                continue;
            }
            let ends_a = [(a[0], a[1]), (a[a.len() - 1], a[a.len() - 2])];
            let ends_b = [(b[0], b[1]), (b[b.len() - 1], b[b.len() - 2])];
            for &(u, u1) in &ends_a {
                for &(u_b, u2) in &ends_b {
                    if u != u_b || u1 == u2 {
                        continue;
                    }
                    triples += 1;
                    if let Err(e) = splice_paths(g, &paths[i], &paths[j], u) {
                        bad.push(format!("{a:?} + {b:?} at {}: {e}", u + 1));
                    }
                }
            }
        }
    }
    (triples, bad)
}

pub fn claim(cfg: &SuiteConfig) -> SuiteReport {
    run_trials("claim", cfg, cfg.trials, |_, rng, t| {
        let g = random_chordal(rng, 1, cfg.max_n.min(7));
        let (triples, bad) = check_claim_exhaustive(&g);
        t.checks += triples;
        t.bump("triples", triples);
        for b in bad {
            t.failures.push(format!("{b} on {g:?}"));
        }
    })
}

/// Runs a suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    Some(match name {
        "chordality" => chordality(cfg),
        "systems" => systems(cfg),
        "lp" => lp(cfg),
        "witness" => witness(cfg),
        "decomposition" => decomposition(cfg),
        "idp" => idp(cfg),
        "facets" => facets(cfg),
        "orbits" => orbits(cfg),
        "domination" => domination(cfg),
        "contraction" => contraction(cfg),
        "claim" => claim(cfg),
        _ => return None,
    })
}

/// Search for an integral point of the tree cone of the complement of `C7`
/// that is not an integer combination of induced trees. Every set of
/// `2..=max_size` distinct generators whose sum is divisible by some
/// `d ∈ {2, 3, 4}` (`d ≤` set size) yields the cone point `Σ ξ^{W_i} / d`,
/// which is handed to the oracle. Stops at the first point the oracle rules out.
pub fn hilbert_gap_search(max_size: usize, oracle_nodes: usize) -> HilbertSearch {
    let g = Graph::cycle(7).complement();
    let gens = enumerate_induced(SubgraphKind::Tree, &g);
    let vecs: Vec<Vec<u64>> = gens
        .iter()
        .map(|w| {
            incidence_vector(&g, w)
                .iter()
                .map(|c| crate::rational::to_u64(c).expect("binary"))
                .collect()
        })
        .collect();
    let mut out = HilbertSearch {
        generators: gens.len(),
        ..HilbertSearch::default()
    };
    let dim = g.n() + g.m();
    let mut seen = std::collections::HashSet::new();
    let mut pick: Vec<usize> = Vec::new();
    let mut sum = vec![0u64; dim];
    fn rec(
        start: usize,
        max_size: usize,
        pick: &mut Vec<usize>,
        sum: &mut Vec<u64>,
        vecs: &[Vec<u64>],
        visit: &mut dyn FnMut(&[usize], &[u64]) -> bool,
    ) -> bool {
        if pick.len() >= 2 && visit(pick, sum) {
            return true;
        }
        if pick.len() == max_size {
            return false;
        }
        for i in start..vecs.len() {
            pick.push(i);
            sum.iter_mut().zip(&vecs[i]).for_each(|(s, v)| *s += v);
            if rec(i + 1, max_size, pick, sum, vecs, visit) {
                return true;
            }
            sum.iter_mut().zip(&vecs[i]).for_each(|(s, v)| *s -= v);
            pick.pop();
        }
        false
    }
    let mut visit = |pick: &[usize], sum: &[u64]| {
        for d in 2..=4u64 {
            if pick.len() < d as usize || sum.iter().any(|c| c % d != 0) {
                continue;
            }
            let point: Vec<u64> = sum.iter().map(|c| c / d).collect();
            if !seen.insert(point.clone()) {
                continue;
            }
            out.integral_points += 1;
            let p = ExtendedVector {
                x: point[..g.n()].iter().map(|&c| int(c as i64)).collect(),
                y: point[g.n()..].iter().map(|&c| int(c as i64)).collect(),
            };
            match oracle_decompose_bounded(SubgraphKind::Tree, &g, &p, oracle_nodes) {
                OracleOutcome::Found(_) => out.decomposed += 1,
                OracleOutcome::Exhausted => out.undecided += 1,
                OracleOutcome::NoDecomposition => {
                    out.witness = Some((p, pick.iter().map(|&i| gens[i].clone()).collect(), d));
                    return true;
                }
            }
        }
        false
    };
    rec(0, max_size, &mut pick, &mut sum, &vecs, &mut visit);
    out
}

#[derive(Clone, Debug, Default)]
pub struct HilbertSearch {
    pub generators: usize,
    pub integral_points: usize,
    pub decomposed: usize,
    pub undecided: usize,
    /// Point, generators, and common denominator.
    pub witness: Option<(ExtendedVector, Vec<Vec<usize>>, u64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_hole_scan() {
        assert!(has_hole_bruteforce(&Graph::cycle(5)));
        assert!(!has_hole_bruteforce(&Graph::complete(5)));
        assert!(!has_hole_bruteforce(&Graph::path(6)));
    }

    #[test]
    fn masks_cover_all_graphs() {
        assert_eq!(graph_from_mask(3, 0b111), Graph::complete(3));
        assert_eq!(graph_from_mask(3, 0), Graph::empty(3));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig::new(7, 4, 6);
        for name in SUITES {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.passed(), "{}\n{:#?}", r.summary_line(), r.failures);
        }
        assert!(run_suite("nope", &cfg).is_none());
    }

    #[test]
    fn trials_are_deterministic() {
        let cfg = SuiteConfig::new(11, 6, 7);
        let a = decomposition(&cfg);
        let b = decomposition(&cfg);
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.counters, b.counters);
    }
}
