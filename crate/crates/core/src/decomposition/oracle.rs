use std::collections::HashSet;

use crate::graph::Graph;
use crate::rational;
use crate::subgraph::{enumerate_induced, ExtendedVector, SubgraphKind};

use super::Combination;

/// Result of a bounded exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(Combination),
    NoDecomposition,
    /// The node budget ran out before the search finished.
    Exhausted,
}

/// Exhaustive search for a nonnegative integer combination of induced tree
/// (path) incidence vectors equal to `p`. `None` when `p` is not integral
/// and nonnegative or no combination exists. Exponential; small graphs only.
pub fn oracle_decompose(kind: SubgraphKind, g: &Graph, p: &ExtendedVector) -> Option<Combination> {
    match oracle_decompose_bounded(kind, g, p, usize::MAX) {
        OracleOutcome::Found(c) => Some(c),
        _ => None,
    }
}

pub fn oracle_decompose_bounded(kind: SubgraphKind, g: &Graph, p: &ExtendedVector, max_nodes: usize) -> OracleOutcome {
    if p.check_dims(g).is_err() {
        return OracleOutcome::NoDecomposition;
    }
    let Some(target) = p.iter().map(rational::to_u64).collect::<Option<Vec<u64>>>() else {
        return OracleOutcome::NoDecomposition;
    };
    let n = g.n();
    let sets = enumerate_induced(kind, g);
    let gens: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut support = s.clone();
            support.extend(g.induced_edges(s).into_iter().map(|e| n + e));
            support
        })
        .collect();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            by_vertex[v].push(i);
        }
    }
    // Larger supports first: they consume edges that singletons cannot.
    for list in &mut by_vertex {
        list.sort_by_key(|&i| std::cmp::Reverse(gens[i].len()));
    }
    let mut search = Search {
        n,
        gens: &gens,
        by_vertex: &by_vertex,
        failed: HashSet::new(),
        stack: Vec::new(),
        nodes: 0,
        max_nodes,
    };
    let mut residual = target;
    match search.dfs(&mut residual) {
        Some(true) => {
            let mut c = Combination::new();
            for &i in &search.stack {
                c.add(&sets[i], 1);
            }
            OracleOutcome::Found(c)
        }
        Some(false) => OracleOutcome::NoDecomposition,
        None => OracleOutcome::Exhausted,
    }
}

struct Search<'a> {
    n: usize,
    gens: &'a [Vec<usize>],
    by_vertex: &'a [Vec<usize>],
    failed: HashSet<Vec<u64>>,
    stack: Vec<usize>,
    nodes: usize,
    max_nodes: usize,
}

impl Search<'_> {
    /// `Some(found)`, or `None` when the budget ran out.
    fn dfs(&mut self, r: &mut Vec<u64>) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        let Some(v) = (0..self.n).find(|&v| r[v] > 0) else {
            return Some(r.iter().all(|&c| c == 0));
        };
        if self.failed.contains(r.as_slice()) {
            return Some(false);
        }
        for &i in &self.by_vertex[v] {
            if self.gens[i].iter().any(|&j| r[j] == 0) {
                continue;
            }
            for &j in &self.gens[i] {
                r[j] -= 1;
            }
            self.stack.push(i);
            let res = self.dfs(r);
            if res != Some(false) {
                return res;
            }
            self.stack.pop();
            for &j in &self.gens[i] {
                r[j] += 1;
            }
        }
        self.failed.insert(r.clone());
        Some(false)
    }
}
