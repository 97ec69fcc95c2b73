use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{find_hole, format_set, mcs_order, Graph};
use crate::polyhedra::{check_membership, path_system, tree_system, CliqueMode};
use crate::rational;
use crate::subgraph::{is_induced, path_order, ExtendedVector, SubgraphKind};

use super::buckets::{bucket_of, buckets_for, Bucket, Buckets};
use super::splice::{end_neighbour, splice_paths, SpliceOutcome};
use super::Combination;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Re-check the bookkeeping invariants after every move (slow).
    pub check_invariants: bool,
}

/// How often each move fired.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MoveCounts {
    /// Tree kind: shift `T → T ∪ {v}`.
    pub tree_shift: usize,
    /// Extend an end path by `v`.
    pub extend: usize,
    /// Trade `{u,v}` and an inner path for two halves, one carrying `v`.
    pub split_edge: usize,
    /// Splice an inner path with an end-two path, the rest carrying `v`.
    pub splice_inner: usize,
    /// Splice a path through `v` with an end-two path, releasing `{u,v}`.
    pub splice_with_v: usize,
    /// Prefix-swap chains.
    pub chain: usize,
    pub longest_chain: usize,
}

impl MoveCounts {
    pub fn total(&self) -> usize {
        self.tree_shift + self.extend + self.split_edge + self.splice_inner + self.splice_with_v + self.chain
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub combination: Combination,
    pub moves: MoveCounts,
}

/// Writes an integral point of the tree (path) cone of a chordal graph as a
/// nonnegative integer combination of induced tree (path) incidence vectors.
pub fn decompose(kind: SubgraphKind, g: &Graph, p: &ExtendedVector) -> Result<Combination> {
    decompose_with(kind, g, p, DecomposeOptions::default()).map(|d| d.combination)
}

pub fn decompose_with(
    kind: SubgraphKind,
    g: &Graph,
    p: &ExtendedVector,
    opts: DecomposeOptions,
) -> Result<Decomposition> {
    p.check_dims(g)?;
    let (peo, chordal) = mcs_order(g);
    if !chordal {
        return Err(Error::NonChordalInput {
            hole: find_hole(g).unwrap_or_default(),
        });
    }
    if !p.is_integral() {
        return Err(Error::NonIntegralPoint);
    }
    let sys = match kind {
        SubgraphKind::Tree => tree_system(g, false),
        SubgraphKind::Path => path_system(g, CliqueMode::Orbits, false)?,
    };
    let (ok, violated) = check_membership(&sys, p)?;
    if !ok {
        return Err(Error::NotInCone {
            violated: violated.iter().map(ToString::to_string).collect(),
        });
    }
    let to_u64 = |r| rational::to_u64(r).ok_or_else(|| Error::Precondition("coordinate exceeds u64".into()));
    let x = p.x.iter().map(to_u64).collect::<Result<Vec<u64>>>()?;
    let y = p.y.iter().map(to_u64).collect::<Result<Vec<u64>>>()?;
    let mut d = Driver {
        kind,
        g,
        x,
        y,
        c: Combination::new(),
        active: vec![false; g.n()],
        opts,
        moves: MoveCounts::default(),
    };
    d.run(&peo.order)?;
    debug_assert!(super::verify_combination(g, kind, &d.c, p));
    Ok(Decomposition {
        combination: d.c,
        moves: d.moves,
    })
}

struct Driver<'a> {
    kind: SubgraphKind,
    g: &'a Graph,
    x: Vec<u64>,
    y: Vec<u64>,
    c: Combination,
    active: Vec<bool>,
    opts: DecomposeOptions,
    moves: MoveCounts,
}

fn with(set: &[usize], v: usize) -> Vec<usize> {
    let mut s = set.to_vec();
    s.push(v);
    s.sort_unstable();
    s
}

/// Splits the induced path `p` at its interior vertex `u` into the side
/// through `a` and the other side, both keeping `u`.
fn split_at(g: &Graph, p: &[usize], u: usize, a: usize) -> (Vec<usize>, Vec<usize>) {
    let order = path_order(g, p).expect("combination supports are induced paths");
    let i = order.iter().position(|&x| x == u).expect("u on the path");
    let (left, right) = (order[..=i].to_vec(), order[i..].to_vec());
    let (mut a_side, mut rest) = if i > 0 && order[i - 1] == a {
        (left, right)
    } else {
        (right, left)
    };
    a_side.sort_unstable();
    rest.sort_unstable();
    (a_side, rest)
}

fn spliced(g: &Graph, p1: &[usize], p2: &[usize], u: usize) -> Result<Vec<usize>> {
    match splice_paths(g, p1, p2, u)? {
        SpliceOutcome::Spliced(s) => Ok(s),
        SpliceOutcome::Adjacent => Err(Error::Internal(format!(
            "splice of {} and {} at {} hit adjacent neighbours",
            format_set(p1),
            format_set(p2),
            u + 1
        ))),
    }
}

/// A move on the path combination, for the edge `uv` under consideration.
enum PathMove {
    Extend(Vec<usize>),
    SplitEdge(Vec<usize>, usize),
    SpliceInner { p: Vec<usize>, u1: usize, q: Vec<usize> },
    SpliceWithV { p: Vec<usize>, q: Vec<usize> },
    Chain(Vec<Vec<usize>>),
}

impl Driver<'_> {
    fn run(&mut self, order: &[usize]) -> Result<()> {
        let Some((&last, rest)) = order.split_last() else {
            return Ok(());
        };
        self.active[last] = true;
        self.c.add(&[last], self.x[last]);
        for &v in rest.iter().rev() {
            let nv: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| self.active[u])
                .collect();
            self.active[v] = true;
            let mut edges: Vec<(usize, usize)> = nv
                .iter()
                .map(|&u| (self.g.edge_index(u, v).expect("neighbour"), u))
                .collect();
            edges.sort_unstable();
            let budget = self.budget();
            let mut used = 0usize;
            for &(e, u) in &edges {
                match self.kind {
                    SubgraphKind::Tree => self.tree_edge(v, &nv, u, e, budget, &mut used)?,
                    SubgraphKind::Path => self.path_edge(v, &nv, u, e, budget, &mut used)?,
                }
            }
            let yv: u64 = edges.iter().map(|&(e, _)| self.y[e]).sum();
            let Some(single) = self.x[v].checked_sub(yv) else {
                return Err(Error::Internal(format!(
                    "x_{} = {} is below y(δ({})) = {yv}",
                    v + 1,
                    self.x[v],
                    v + 1
                )));
            };
            self.c.add(&[v], single);
        }
        Ok(())
    }

    /// `4·(n+m)·(Σx* + Σy*)` over the active subgraph.
    fn budget(&self) -> usize {
        let act: Vec<usize> = (0..self.g.n()).filter(|&v| self.active[v]).collect();
        let edges = self.g.induced_edges(&act);
        let mass: u64 = act.iter().map(|&v| self.x[v]).sum::<u64>() + edges.iter().map(|&e| self.y[e]).sum::<u64>();
        4 * (act.len() + edges.len()) * (mass as usize).max(1)
    }

    /// `y*_uv − y'_uv`.
    fn gap(&self, u: usize, v: usize, e: usize) -> Result<u64> {
        let covered: u64 = self
            .c
            .iter()
            .filter(|(s, _)| s.contains(&u) && s.contains(&v))
            .map(|(_, &l)| l)
            .sum();
        self.y[e].checked_sub(covered).ok_or_else(|| {
            Error::Internal(format!(
                "edge {}-{} covered {covered} > {} times",
                u + 1,
                v + 1,
                self.y[e]
            ))
        })
    }

    fn tick(&self, used: &mut usize, budget: usize, v: usize, u: usize, gap: u64) -> Result<()> {
        *used += 1;
        if *used > budget {
            return Err(Error::StuckWithPositiveGap(format!(
                "move budget {budget} exhausted at v={}, u={}, gap {gap}\n{}",
                v + 1,
                u + 1,
                self.c.to_text()
            )));
        }
        Ok(())
    }

    fn tree_edge(&mut self, v: usize, nv: &[usize], u: usize, e: usize, budget: usize, used: &mut usize) -> Result<()> {
        let mut prev = u64::MAX;
        loop {
            let gap = self.gap(u, v, e)?;
            if gap == 0 {
                return Ok(());
            }
            self.check_progress(gap, &mut prev, v, u)?;
            self.tick(used, budget, v, u, gap)?;
            let pick = self
                .c
                .iter()
                .find(|(t, _)| t.contains(&u) && !t.contains(&v) && t.iter().all(|x| *x == u || !nv.contains(x)))
                .map(|(t, &l)| (t.clone(), l));
            let Some((t, lt)) = pick else {
                return Err(self.stuck(v, u, gap, None));
            };
            let alpha = gap.min(lt);
            self.c.remove(&t, alpha);
            self.c.add(&with(&t, v), alpha);
            self.moves.tree_shift += 1;
            self.check_invariants(v, nv)?;
        }
    }

    fn path_edge(&mut self, v: usize, nv: &[usize], u: usize, e: usize, budget: usize, used: &mut usize) -> Result<()> {
        let mut prev = u64::MAX;
        loop {
            let gap = self.gap(u, v, e)?;
            if gap == 0 {
                return Ok(());
            }
            self.check_progress(gap, &mut prev, v, u)?;
            self.tick(used, budget, v, u, gap)?;
            let b = buckets_for(self.g, v, nv, u, &self.c);
            let Some(mv) = self.choose(v, u, &b) else {
                return Err(self.stuck(v, u, gap, Some(&b)));
            };
            self.apply(v, u, gap, mv)?;
            self.check_invariants(v, nv)?;
            if self.opts.check_invariants {
                let b = buckets_for(self.g, v, nv, u, &self.c);
                let through: u64 = b.with_v.iter().map(|p| self.c.get(p)).sum();
                if self.y[e] - self.gap(u, v, e)? != through {
                    return Err(Error::Internal(
                        "y'_uv differs from the weight of paths through uv".into(),
                    ));
                }
                if b.end.is_empty() {
                    let at_u: u64 = [&b.end_two, &b.inner_one, &b.inner_two, &b.with_v]
                        .iter()
                        .flat_map(|ps| ps.iter())
                        .map(|p| self.c.get(p))
                        .sum();
                    if at_u != self.x[u] {
                        return Err(Error::Internal(format!("paths through {} weigh {at_u}, not x*", u + 1)));
                    }
                }
            }
        }
    }

    /// First applicable move in priority order, smallest candidates first.
    fn choose(&self, v: usize, u: usize, b: &Buckets) -> Option<PathMove> {
        let g = self.g;
        if let Some(p) = b.end.first() {
            return Some(PathMove::Extend(p.clone()));
        }
        let uv = with(&[u], v);
        if self.c.get(&uv) > 0 {
            if let Some(p) = b.inner_one.first() {
                let a = *p.iter().find(|&&x| g.adjacent(u, x)).expect("interior u");
                return Some(PathMove::SplitEdge(p.clone(), a));
            }
        }
        let end_two_k = |q: &Vec<usize>| end_neighbour(g, q, u).expect("u ends the path");
        for p in &b.inner_one {
            for &u1 in p.iter().filter(|&&x| g.adjacent(u, x)) {
                if let Some(q) = b.end_two.iter().find(|q| !g.adjacent(u1, end_two_k(q))) {
                    return Some(PathMove::SpliceInner {
                        p: p.clone(),
                        u1,
                        q: q.clone(),
                    });
                }
            }
        }
        for p in &b.with_v {
            let Some(u1) = p.iter().copied().find(|&x| x != v && g.adjacent(u, x)) else {
                continue;
            };
            if let Some(q) = b.end_two.iter().find(|q| !g.adjacent(u1, end_two_k(q))) {
                return Some(PathMove::SpliceWithV {
                    p: p.clone(),
                    q: q.clone(),
                });
            }
        }
        self.find_chain(v, u, b).map(PathMove::Chain)
    }

    /// Breadth-first search for `P_1, …, P_ℓ` with `P_1, …, P_{ℓ-1}` inner-two
    /// paths, `P_ℓ` an end-two path, `w_{P_i}` nonadjacent to `k_{P_{i+1}}`,
    /// and `k_{P_1}` nonadjacent to a `u`-neighbour of some inner-one path or
    /// path through `v`.
    fn find_chain(&self, v: usize, u: usize, b: &Buckets) -> Option<Vec<Vec<usize>>> {
        let g = self.g;
        let nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| self.active[x]).collect();
        let kw = |p: &Vec<usize>| match bucket_of(g, v, &nv, u, p) {
            Bucket::InnerTwo { k, w } => (k, Some(w)),
            Bucket::EndTwo { k } => (k, None),
            _ => unreachable!("chain nodes are two-neighbour paths"),
        };
        let mut u1s: Vec<usize> = b
            .inner_one
            .iter()
            .chain(&b.with_v)
            .flat_map(|p| p.iter().copied().filter(|&x| x != v && g.adjacent(u, x)))
            .collect();
        u1s.sort_unstable();
        u1s.dedup();
        let nodes: Vec<&Vec<usize>> = b.inner_two.iter().chain(&b.end_two).collect();
        let info: Vec<(usize, Option<usize>)> = nodes.iter().map(|p| kw(p)).collect();
        let mut prev: BTreeMap<usize, Option<usize>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for (i, &(k, w)) in info.iter().enumerate() {
            if w.is_some() && u1s.iter().any(|&a| !g.adjacent(a, k)) {
                prev.insert(i, None);
                queue.push_back(i);
            }
        }
        while let Some(i) = queue.pop_front() {
            let Some(wi) = info[i].1 else {
                let mut chain = vec![nodes[i].clone()];
                let mut at = i;
                while let Some(Some(p)) = prev.get(&at) {
                    chain.push(nodes[*p].clone());
                    at = *p;
                }
                chain.reverse();
                return Some(chain);
            };
            for (j, &(kj, _)) in info.iter().enumerate() {
                if !prev.contains_key(&j) && !g.adjacent(wi, kj) {
                    prev.insert(j, Some(i));
                    queue.push_back(j);
                }
            }
        }
        None
    }

    fn apply(&mut self, v: usize, u: usize, gap: u64, mv: PathMove) -> Result<()> {
        let g = self.g;
        let uv = with(&[u], v);
        match mv {
            PathMove::Extend(p) => {
                let alpha = gap.min(self.c.get(&p));
                self.c.remove(&p, alpha);
                self.c.add(&with(&p, v), alpha);
                self.moves.extend += 1;
            }
            PathMove::SplitEdge(p, a) => {
                let alpha = self.c.get(&uv).min(self.c.get(&p));
                let (p1, p2) = split_at(g, &p, u, a);
                self.c.remove(&uv, alpha);
                self.c.remove(&p, alpha);
                self.c.add(&with(&p1, v), alpha);
                self.c.add(&p2, alpha);
                self.moves.split_edge += 1;
            }
            PathMove::SpliceInner { p, u1, q } => {
                let alpha = gap.min(self.c.get(&p)).min(self.c.get(&q));
                let (p1, rest) = split_at(g, &p, u, u1);
                let s = spliced(g, &p1, &q, u)?;
                self.c.remove(&p, alpha);
                self.c.remove(&q, alpha);
                self.c.add(&s, alpha);
                self.c.add(&with(&rest, v), alpha);
                self.moves.splice_inner += 1;
            }
            PathMove::SpliceWithV { p, q } => {
                let alpha = self.c.get(&p).min(self.c.get(&q));
                let without: Vec<usize> = p.iter().copied().filter(|&x| x != v).collect();
                let s = spliced(g, &without, &q, u)?;
                self.c.remove(&p, alpha);
                self.c.remove(&q, alpha);
                self.c.add(&s, alpha);
                self.c.add(&uv, alpha);
                self.moves.splice_with_v += 1;
            }
            PathMove::Chain(chain) => {
                let alpha = chain.iter().map(|p| self.c.get(p)).min().expect("nonempty chain");
                let nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| self.active[x]).collect();
                let mut halves = Vec::with_capacity(chain.len());
                for p in &chain {
                    halves.push(match bucket_of(g, v, &nv, u, p) {
                        Bucket::InnerTwo { k, w } => {
                            let (kside, _) = split_at(g, p, u, k);
                            let (wside, _) = split_at(g, p, u, w);
                            (Some(wside), kside)
                        }
                        Bucket::EndTwo { .. } => (None, p.clone()),
                        _ => return Err(Error::Internal("chain node changed bucket".into())),
                    });
                }
                let mut added = vec![halves[0].1.clone()];
                for i in 0..chain.len() - 1 {
                    let ui = halves[i].0.as_ref().expect("inner-two node");
                    added.push(spliced(g, ui, &halves[i + 1].1, u)?);
                }
                for p in &chain {
                    self.c.remove(p, alpha);
                }
                for s in &added {
                    self.c.add(s, alpha);
                }
                self.moves.chain += 1;
                self.moves.longest_chain = self.moves.longest_chain.max(chain.len());
            }
        }
        Ok(())
    }

    fn check_progress(&self, gap: u64, prev: &mut u64, v: usize, u: usize) -> Result<()> {
        if self.opts.check_invariants && gap > *prev {
            return Err(Error::Internal(format!(
                "gap on {}-{} grew from {prev} to {gap}",
                u + 1,
                v + 1
            )));
        }
        *prev = gap;
        Ok(())
    }

    /// Supports are induced, the sum matches the target off `v`, edges at `v`
    /// are not over-covered, and `x'_v = y'(δ(v))`.
    fn check_invariants(&self, v: usize, nv: &[usize]) -> Result<()> {
        if !self.opts.check_invariants {
            return Ok(());
        }
        let g = self.g;
        for (s, _) in self.c.iter() {
            if !is_induced(self.kind, g, s)? || s.iter().any(|&x| !self.active[x]) {
                return Err(Error::Internal(format!(
                    "support {} is not an induced {}",
                    format_set(s),
                    self.kind
                )));
            }
        }
        let sum = self.c.sum_vector(g);
        let as_int = |r: &crate::Rational| rational::to_u64(r).expect("integral sums");
        for w in (0..g.n()).filter(|&w| w != v) {
            let want = if self.active[w] { self.x[w] } else { 0 };
            if as_int(&sum.x[w]) != want {
                return Err(Error::Internal(format!(
                    "x'_{} = {} differs from {want}",
                    w + 1,
                    sum.x[w]
                )));
            }
        }
        let mut at_v = 0;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let got = as_int(&sum.y[e]);
            if a == v || b == v {
                let other = if a == v { b } else { a };
                let want = if nv.contains(&other) { self.y[e] } else { 0 };
                if got > want {
                    return Err(Error::Internal(format!("edge {}-{} over-covered", a + 1, b + 1)));
                }
                at_v += got;
            } else {
                let want = if self.active[a] && self.active[b] { self.y[e] } else { 0 };
                if got != want {
                    return Err(Error::Internal(format!(
                        "y'_{}{} = {got} differs from {want}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        if as_int(&sum.x[v]) != at_v {
            return Err(Error::Internal(format!("x'_{} differs from y'(δ({}))", v + 1, v + 1)));
        }
        Ok(())
    }

    fn stuck(&self, v: usize, u: usize, gap: u64, b: Option<&Buckets>) -> Error {
        let mut msg = format!("no move applies at v={}, u={}, gap {gap}\n", v + 1, u + 1);
        if let Some(b) = b {
            msg.push_str(&format!(
                "buckets: end {} end-two {} inner-one {} inner-two {} with-v {} other {} k2 {}\n",
                b.end.len(),
                b.end_two.len(),
                b.inner_one.len(),
                b.inner_two.len(),
                b.with_v.len(),
                b.other.len(),
                format_set(&b.k2)
            ));
        }
        msg.push_str(&self.c.to_text());
        Error::StuckWithPositiveGap(msg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::verify_combination;
    use crate::subgraph::incidence_vector;

    fn checked(kind: SubgraphKind, g: &Graph, p: &ExtendedVector) -> Combination {
        let d = decompose_with(kind, g, p, DecomposeOptions { check_invariants: true }).unwrap();
        assert!(verify_combination(g, kind, &d.combination, p), "{}", d.combination);
        d.combination
    }

    #[test]
    fn tree_p3_sum_of_edges() {
        let g = Graph::path(3);
        let p = ExtendedVector::from_ints(&[1, 2, 1], &[1, 1]);
        let c = checked(SubgraphKind::Tree, &g, &p);
        assert_eq!(c.total(), 2);
    }

    #[test]
    fn path_p3_unique() {
        let g = Graph::path(3);
        let c = checked(SubgraphKind::Path, &g, &ExtendedVector::from_ints(&[1, 1, 2], &[1, 0]));
        assert_eq!(c.to_text(), "1 : 1 2\n2 : 3\n");
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let c = checked(SubgraphKind::Tree, &g, &ExtendedVector::from_ints(&[5], &[]));
        assert_eq!(c.to_text(), "5 : 1\n");
    }

    #[test]
    fn star_path() {
        // Centre 2, leaves 1, 3, 4.
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let p = ExtendedVector::from_ints(&[1, 1, 1, 1], &[1, 1, 0]);
        let c = checked(SubgraphKind::Path, &g, &p);
        assert_eq!(c.to_text(), "1 : 1 2 3\n1 : 4\n");
    }

    fn from_text(edges: &str, combo: &str) -> (Graph, ExtendedVector) {
        let pairs: Vec<&str> = edges.split_whitespace().collect();
        let mut text = format!("p edge 9 {}\n", pairs.len());
        for e in pairs {
            let (a, b) = e.split_once('-').unwrap();
            text.push_str(&format!("e {a} {b}\n"));
        }
        let g = crate::graph::parse_graph(&text).unwrap();
        let p = Combination::parse(combo, 9).unwrap().sum_vector(&g);
        (g, p)
    }

    #[test]
    fn splice_through_v_fires() {
        let (g, p) = from_text(
            "1-2 1-3 1-4 1-5 1-6 1-8 2-3 2-4 2-7 2-8 2-9 4-7 4-9",
            "2 : 1 2 5 9\n2 : 1 2 9\n1 : 1 3 4 7\n2 : 1 4 6 9\n1 : 1 4 9\n2 : 2 3 4\n3 : 2 7 9\n",
        );
        let d = decompose_with(SubgraphKind::Path, &g, &p, DecomposeOptions { check_invariants: true }).unwrap();
        assert!(d.moves.splice_with_v > 0, "{:?}", d.moves);
        assert!(verify_combination(&g, SubgraphKind::Path, &d.combination, &p));
        assert_eq!(d.combination.total(), 13);
    }

    #[test]
    fn chain_fires() {
        let (g, p) = from_text(
            "1-2 1-3 1-4 1-5 1-6 1-7 1-8 1-9 2-9 3-4 3-5 3-6 3-7 3-8 4-8 5-6 5-7",
            "1 : 1 2 3\n1 : 1 4 5\n1 : 1 5 8\n2 : 1 6 7\n2 : 1 7 8\n1 : 3 4 7\n",
        );
        let d = decompose_with(SubgraphKind::Path, &g, &p, DecomposeOptions { check_invariants: true }).unwrap();
        assert!(d.moves.chain > 0, "{:?}", d.moves);
        assert!(verify_combination(&g, SubgraphKind::Path, &d.combination, &p));
        assert_eq!(d.combination.total(), 8);
    }

    #[test]
    fn errors() {
        let k3 = Graph::complete(3);
        let tri = incidence_vector(&k3, &[0, 1, 2]);
        assert!(matches!(
            decompose(SubgraphKind::Tree, &k3, &tri),
            Err(Error::NotInCone { .. })
        ));
        let c4 = Graph::cycle(4);
        assert!(matches!(
            decompose(SubgraphKind::Tree, &c4, &incidence_vector(&c4, &[0])),
            Err(Error::NonChordalInput { .. })
        ));
        let half = ExtendedVector {
            x: vec![rational::frac(1, 2)],
            y: vec![],
        };
        assert!(matches!(
            decompose(SubgraphKind::Tree, &Graph::empty(1), &half),
            Err(Error::NonIntegralPoint)
        ));
    }
}
