use std::collections::BTreeMap;

use num_traits::One;

use super::orbits::{all_cliques_within, orbit_cliques, orbit_cliques_oracle};
use super::{LinearRow, LinearSystem, Relation, RowTag};
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, maximal_cliques_any, mcs_order, Clique, Graph};
use crate::rational::{int, Rational};

/// Which cliques `K ⊆ N(w)` generate path inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueMode {
    /// Orbit-defining cliques only; at most `2n` per vertex on chordal graphs.
    Orbits,
    /// Every clique of `G[N(w)]`, the empty one included. Exponential.
    All,
}

fn graph_maximal_cliques(g: &Graph) -> Vec<Clique> {
    let (peo, chordal) = mcs_order(g);
    if chordal {
        maximal_cliques(g, &peo).expect("MCS order validated")
    } else {
        maximal_cliques_any(g)
    }
}

/// `Σ_{u ∈ K∖{v}} y_uv − x_v ≤ 0`.
pub fn tree_row(g: &Graph, v: usize, clique: &[usize]) -> LinearRow {
    let mut coeffs = BTreeMap::from([(v, -Rational::one())]);
    for &u in clique.iter().filter(|&&u| u != v) {
        let e = g.edge_index(u, v).expect("clique members adjacent to v");
        coeffs.insert(g.n() + e, Rational::one());
    }
    LinearRow {
        coeffs,
        rel: Relation::Le,
        rhs: Rational::from_integer(0.into()),
        tag: RowTag::TreeClique {
            v,
            clique: clique.to_vec(),
        },
    }
}

/// `y(δ(w, C(K∪{w}))) + 2·y(δ(w, K)) − 2·x_w ≤ 0`.
pub fn path_row(g: &Graph, w: usize, clique: &[usize]) -> LinearRow {
    let mut kw = clique.to_vec();
    kw.push(w);
    let mut coeffs = BTreeMap::from([(w, int(-2))]);
    for u in g.complete_to(&kw) {
        let e = g.edge_index(u, w).expect("vertices complete to w are neighbours");
        coeffs.insert(g.n() + e, int(1));
    }
    for &u in clique {
        let e = g.edge_index(u, w).expect("clique inside N(w)");
        coeffs.insert(g.n() + e, int(2));
    }
    LinearRow {
        coeffs,
        rel: Relation::Le,
        rhs: int(0),
        tag: RowTag::PathClique {
            w,
            clique: clique.to_vec(),
        },
    }
}

/// The induced tree cone system (one row per vertex and maximal clique
/// through it, plus nonnegativity), optionally cut by `x(V) − y(E) = 1`.
pub fn tree_system(g: &Graph, with_hyperplane: bool) -> LinearSystem {
    let cliques = graph_maximal_cliques(g);
    let mut sys = LinearSystem::new(g);
    for v in 0..g.n() {
        for k in cliques.iter().filter(|k| k.contains(v)) {
            sys.push(tree_row(g, v, k.verts()));
        }
    }
    sys.push_nonnegativity(g);
    if with_hyperplane {
        sys.push_hyperplane(g);
    }
    sys
}

/// The induced path cone system, optionally cut by `x(V) − y(E) = 1`.
///
/// In [`CliqueMode::Orbits`] a vertex whose neighbourhood is not chordal (only
/// possible when `g` is not chordal) falls back to the brute-force orbit
/// enumeration.
pub fn path_system(g: &Graph, mode: CliqueMode, with_hyperplane: bool) -> Result<LinearSystem> {
    let mut sys = LinearSystem::new(g);
    for w in 0..g.n() {
        let cliques: Vec<Vec<usize>> = match mode {
            CliqueMode::All => all_cliques_within(g, g.neighbors(w)),
            CliqueMode::Orbits => match orbit_cliques(g, w) {
                Ok(orbits) => orbits.into_iter().map(|o| o.clique.verts().to_vec()).collect(),
                Err(Error::NonChordalInput { .. }) => orbit_cliques_oracle(g, w)
                    .into_iter()
                    .map(|o| o.clique.verts().to_vec())
                    .collect(),
                Err(e) => return Err(e),
            },
        };
        for k in cliques {
            sys.push(path_row(g, w, &k));
        }
    }
    sys.push_nonnegativity(g);
    if with_hyperplane {
        sys.push_hyperplane(g);
    }
    Ok(sys)
}
