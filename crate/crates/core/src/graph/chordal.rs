use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A vertex order `(v_1, …, v_n)`; a perfect elimination order when every
/// `v_i`'s neighbours among `v_{i+1}, …, v_n` form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peo {
    pub order: Vec<usize>,
}

/// A sorted set of pairwise adjacent vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    verts: Vec<usize>,
}

impl Clique {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Self> {
        g.is_vertex_set(verts)?;
        let mut verts = verts.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if !is_clique(g, &verts) {
            return Err(Error::NotAClique(format_set(&verts)));
        }
        Ok(Clique { verts })
    }

    pub(crate) fn from_sorted_unchecked(verts: Vec<usize>) -> Self {
        Clique { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }
}

pub fn format_set(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &a)| verts[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

/// Checks the perfect elimination property directly.
pub fn validate_peo(g: &Graph, peo: &Peo) -> Result<()> {
    let n = g.n();
    if peo.order.len() != n {
        return Err(Error::InvalidPeo(format!(
            "order has {} entries for {n} vertices",
            peo.order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in peo.order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidPeo(format!("not a permutation at entry {i}")));
        }
        pos[v] = i;
    }
    for (i, &v) in peo.order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        if !is_clique(g, &later) {
            return Err(Error::InvalidPeo(format!(
                "later neighbours of {} are not a clique",
                v + 1
            )));
        }
    }
    Ok(())
}

/// Maximum cardinality search. The reverse of the visiting order is returned
/// together with whether it is a perfect elimination order, which holds
/// exactly when the graph is chordal.
pub fn mcs_order(g: &Graph) -> (Peo, bool) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[u] = true;
        visit.push(u);
        for &v in g.neighbors(u) {
            if !visited[v] {
                weight[v] += 1;
            }
        }
    }
    visit.reverse();
    let peo = Peo { order: visit };
    let ok = validate_peo(g, &peo).is_ok();
    (peo, ok)
}

pub fn is_chordal(g: &Graph) -> bool {
    mcs_order(g).1
}

/// A chordless cycle of length at least four, in cycle order, if any.
///
/// For every vertex `b` and every pair of non-adjacent neighbours `a, c`, a
/// shortest `a`–`c` path avoiding the rest of `N[b]` closes a hole through
/// `b`; every hole arises this way.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for b in 0..n {
        let nb = g.neighbors(b);
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if g.adjacent(a, c) {
                    continue;
                }
                let blocked = |x: usize| x == b || (x != a && x != c && g.adjacent(x, b));
                let mut prev = vec![usize::MAX; n];
                prev[a] = a;
                let mut queue = VecDeque::from([a]);
                while let Some(x) = queue.pop_front() {
                    if x == c {
                        break;
                    }
                    for &y in g.neighbors(x) {
                        if prev[y] == usize::MAX && !blocked(y) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if prev[c] == usize::MAX {
                    continue;
                }
                let mut cycle = vec![c];
                let mut x = c;
                while x != a {
                    x = prev[x];
                    cycle.push(x);
                }
                cycle.reverse();
                cycle.push(b);
                debug_assert!(is_hole(g, &cycle));
                return Some(cycle);
            }
        }
    }
    None
}

/// Whether the sequence induces a chordless cycle of length at least four.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive || cycle[i] == cycle[j] {
                return false;
            }
        }
    }
    true
}

/// Maximal cliques of a chordal graph from a perfect elimination order:
/// they are among the sets `{v_i} ∪ (later neighbours of v_i)`.
pub fn maximal_cliques(g: &Graph, peo: &Peo) -> Result<Vec<Clique>> {
    validate_peo(g, peo)?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let maximal: Vec<Clique> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|x| d.binary_search(x).is_ok()))
        })
        .map(|c| Clique::from_sorted_unchecked(c.clone()))
        .collect();
    Ok(maximal)
}

/// Maximal cliques of an arbitrary graph (Bron–Kerbosch with pivoting),
/// sorted lexicographically.
pub fn maximal_cliques_any(g: &Graph) -> Vec<Clique> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Clique>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(Clique::from_sorted_unchecked(c));
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.adjacent(u, v)).count())
            .expect("p is nonempty");
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.adjacent(pivot, v)).collect();
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&u| g.adjacent(u, v)).collect();
            let nx = x.iter().copied().filter(|&u| g.adjacent(u, v)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    expand(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}
