//! Induced trees and paths: recognition, brute-force enumeration and
//! extended incidence vectors. This is the ground-truth layer the polyhedral
//! code is checked against.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgraphKind {
    Tree,
    Path,
}

impl fmt::Display for SubgraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgraphKind::Tree => "tree",
            SubgraphKind::Path => "path",
        })
    }
}

/// A rational point of `R^V × R^E`; `y` is indexed by canonical edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedVector {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl ExtendedVector {
    pub fn zeros(g: &Graph) -> Self {
        ExtendedVector {
            x: vec![Rational::zero(); g.n()],
            y: vec![Rational::zero(); g.m()],
        }
    }

    pub fn from_ints(x: &[i64], y: &[i64]) -> Self {
        ExtendedVector {
            x: x.iter().map(|&v| rational::int(v)).collect(),
            y: y.iter().map(|&v| rational::int(v)).collect(),
        }
    }

    pub fn check_dims(&self, g: &Graph) -> Result<()> {
        if self.x.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                got: self.x.len(),
            });
        }
        if self.y.len() != g.m() {
            return Err(Error::DimensionMismatch {
                expected: g.m(),
                got: self.y.len(),
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate in the flat `V ⊎ E` index space (vertices first).
    pub fn coord(&self, i: usize) -> &Rational {
        if i < self.x.len() {
            &self.x[i]
        } else {
            &self.y[i - self.x.len()]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.x.iter().chain(&self.y)
    }

    pub fn dot(&self, other: &ExtendedVector) -> Rational {
        self.iter()
            .zip(other.iter())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add_scaled(&mut self, other: &ExtendedVector, scale: &Rational) {
        for (a, b) in self.x.iter_mut().zip(&other.x) {
            *a += b * scale;
        }
        for (a, b) in self.y.iter_mut().zip(&other.y) {
            *a += b * scale;
        }
    }

    pub fn is_binary(&self) -> bool {
        self.iter().all(rational::is_binary)
    }

    pub fn is_integral(&self) -> bool {
        self.iter().all(|r| r.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.iter().all(|r| !r.is_negative())
    }

    /// `x(V) - y(E)`.
    pub fn hyperplane_value(&self) -> Rational {
        let sx = self.x.iter().fold(Rational::zero(), |a, b| a + b);
        let sy = self.y.iter().fold(Rational::zero(), |a, b| a + b);
        sx - sy
    }

    /// Vertices with `x_v = 1` (the support of a binary vector).
    pub fn x_support(&self) -> Vec<usize> {
        (0..self.x.len()).filter(|&v| !self.x[v].is_zero()).collect()
    }
}

/// `ξ^W = (χ^W, ζ^{E(W)})`. Defined for any vertex set.
pub fn incidence_vector(g: &Graph, w: &[usize]) -> ExtendedVector {
    let mut p = ExtendedVector::zeros(g);
    for &v in w {
        p.x[v] = Rational::one();
    }
    for e in g.induced_edges(w) {
        p.y[e] = Rational::one();
    }
    p
}

fn connected(g: &Graph, w: &[usize]) -> bool {
    if w.is_empty() {
        return true;
    }
    let mut seen = vec![w[0]];
    let mut stack = vec![w[0]];
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if w.contains(&v) && !seen.contains(&v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == w.len()
}

pub fn is_induced(kind: SubgraphKind, g: &Graph, w: &[usize]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g.is_vertex_set(w)?;
    let mut w = w.to_vec();
    w.sort_unstable();
    w.dedup();
    if g.induced_edges(&w).len() + 1 != w.len() || !connected(g, &w) {
        return Ok(false);
    }
    Ok(match kind {
        SubgraphKind::Tree => true,
        SubgraphKind::Path => w.iter().all(|&u| w.iter().filter(|&&v| g.adjacent(u, v)).count() <= 2),
    })
}

/// The vertices of an induced path in path order, starting from the smaller
/// extremity; `None` if `w` does not induce a path.
pub fn path_order(g: &Graph, w: &[usize]) -> Option<Vec<usize>> {
    if w.is_empty() || !is_induced(SubgraphKind::Path, g, w).ok()? {
        return None;
    }
    if w.len() == 1 {
        return Some(w.to_vec());
    }
    let inside = |u: usize| -> Vec<usize> { w.iter().copied().filter(|&v| g.adjacent(u, v)).collect() };
    let start = w.iter().copied().filter(|&u| inside(u).len() == 1).min()?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < w.len() {
        let next = inside(cur).into_iter().find(|&v| v != prev)?;
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Some(order)
}

/// Default vertex count above which [`enumerate_induced`] logs a warning.
pub const ENUMERATION_WARN_SIZE: usize = 16;

/// Every nonempty induced tree (or path), as sorted vertex sets in
/// lexicographic order.
pub fn enumerate_induced(kind: SubgraphKind, g: &Graph) -> Vec<Vec<usize>> {
    enumerate_induced_capped(kind, g, ENUMERATION_WARN_SIZE)
}

/// As [`enumerate_induced`], warning when `g` has more than `warn_above`
/// vertices.
///
/// Sets are grown from their smallest vertex by adding one neighbour at a
/// time while the induced subgraph stays a tree (path); every induced tree
/// (path) is reachable this way because its subtrees (subpaths) containing
/// the root are.
pub fn enumerate_induced_capped(kind: SubgraphKind, g: &Graph, warn_above: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 128, "brute-force enumeration supports at most 128 vertices");
    if n > warn_above {
        log::warn!("enumerating induced {kind}s of a graph with {n} vertices");
    }
    let nbr: Vec<u128> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u128, |m, &v| m | (1 << v)))
        .collect();
    let mut found: Vec<u128> = Vec::new();
    for root in 0..n {
        let start = 1u128 << root;
        let mut seen: HashSet<u128> = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(set) = stack.pop() {
            found.push(set);
            let frontier = (0..n).filter(|&v| v > root && set & (1 << v) == 0);
            for v in frontier {
                let touch = nbr[v] & set;
                if touch.count_ones() != 1 {
                    continue;
                }
                if kind == SubgraphKind::Path {
                    let anchor = touch.trailing_zeros() as usize;
                    if (nbr[anchor] & set).count_ones() > 1 {
                        continue;
                    }
                }
                let next = set | (1 << v);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found
        .into_iter()
        .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.iter().map(|v| v + 1).collect()).collect()
    }

    /// Subset scan: the obviously-correct definition.
    fn brute(kind: SubgraphKind, g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let mut out: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect::<Vec<_>>())
            .filter(|w| is_induced(kind, g, w).unwrap())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn recognition() {
        let p3 = Graph::path(3);
        let k3 = Graph::complete(3);
        let star = Graph::star(3);
        assert!(is_induced(SubgraphKind::Path, &p3, &[0, 1, 2]).unwrap());
        assert!(!is_induced(SubgraphKind::Path, &k3, &[0, 1, 2]).unwrap());
        assert!(!is_induced(SubgraphKind::Tree, &k3, &[0, 1, 2]).unwrap());
        assert!(is_induced(SubgraphKind::Tree, &star, &[0, 1, 2, 3]).unwrap());
        assert!(!is_induced(SubgraphKind::Path, &star, &[0, 1, 2, 3]).unwrap());
        assert!(!is_induced(SubgraphKind::Tree, &p3, &[0, 2]).unwrap());
        assert!(matches!(
            is_induced(SubgraphKind::Tree, &p3, &[]),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn enumeration_examples() {
        let k3 = enumerate_induced(SubgraphKind::Path, &Graph::complete(3));
        assert_eq!(
            one_based(&k3),
            vec![vec![1], vec![1, 2], vec![1, 3], vec![2], vec![2, 3], vec![3]]
        );
        let p3 = enumerate_induced(SubgraphKind::Path, &Graph::path(3));
        assert_eq!(
            one_based(&p3),
            vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![2], vec![2, 3], vec![3]]
        );
        assert_eq!(enumerate_induced(SubgraphKind::Tree, &Graph::empty(1)), vec![vec![0]]);
        assert_eq!(enumerate_induced(SubgraphKind::Tree, &Graph::star(3)).len(), 11);
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        for seed in 0..60 {
            let g = crate::graph::gen_random_graph(8, 0.4, seed);
            for kind in [SubgraphKind::Tree, SubgraphKind::Path] {
                assert_eq!(enumerate_induced(kind, &g), brute(kind, &g), "{g:?} {kind}");
            }
        }
    }

    #[test]
    fn incidence_vectors() {
        let p3 = Graph::path(3);
        assert_eq!(
            incidence_vector(&p3, &[0, 1, 2]),
            ExtendedVector::from_ints(&[1, 1, 1], &[1, 1])
        );
        assert_eq!(
            incidence_vector(&p3, &[0, 2]),
            ExtendedVector::from_ints(&[1, 0, 1], &[0, 0])
        );
        let fig5 = parse_graph(crate::fixtures::ORBIT_NOT_FACET).unwrap();
        let xi = incidence_vector(&fig5, &[3, 0, 4]);
        assert_eq!(xi.x_support(), vec![0, 3, 4]);
        let on: Vec<(usize, usize)> = (0..fig5.m())
            .filter(|&e| xi.y[e].is_one())
            .map(|e| fig5.edge(e))
            .collect();
        assert_eq!(on, vec![(0, 3), (0, 4), (3, 4)]);
        assert!(!is_induced(SubgraphKind::Path, &fig5, &[3, 0, 4]).unwrap());
    }

    #[test]
    fn path_orders() {
        let p5 = Graph::path(5);
        assert_eq!(path_order(&p5, &[3, 1, 2]), Some(vec![1, 2, 3]));
        assert_eq!(path_order(&p5, &[0, 2]), None);
        assert_eq!(path_order(&p5, &[4]), Some(vec![4]));
    }
}
