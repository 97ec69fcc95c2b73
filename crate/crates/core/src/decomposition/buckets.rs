use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph};
use crate::subgraph::path_order;

use super::Combination;

/// Where a path of the current combination sits relative to an edge `uv`,
/// `v` simplicial. `k` is the second vertex of `N(v)` on the path (always a
/// path-neighbour of `u`), `w` the other path-neighbour of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bucket {
    /// `u` is an extremity and the only vertex of `N[v]` on the path.
    End,
    /// `u` is an extremity followed by `k ∈ N(v)`.
    EndTwo { k: usize },
    /// `u` is interior and the only vertex of `N[v]` on the path.
    InnerOne,
    /// `u` is interior between `k ∈ N(v)` and `w ∉ N(v)`.
    InnerTwo { k: usize, w: usize },
    /// The path contains `u` and `v`.
    WithV,
    /// Everything else.
    Other,
}

/// Paths of a combination grouped by [`Bucket`] for one neighbour `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Buckets {
    pub u: usize,
    pub end: Vec<Vec<usize>>,
    pub end_two: Vec<Vec<usize>>,
    pub inner_one: Vec<Vec<usize>>,
    pub inner_two: Vec<Vec<usize>>,
    pub with_v: Vec<Vec<usize>>,
    pub other: Vec<Vec<usize>>,
    /// Vertices of `N(v) ∖ {u}` lying on some `EndTwo` path.
    pub k2: Vec<usize>,
}

/// Per-neighbour buckets for a simplicial vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionState {
    pub v: usize,
    pub buckets: Vec<Buckets>,
}

/// Classifies the induced path `p` with respect to the edge `uv`, where
/// `nv = N(v)` restricted to the graph being decomposed.
pub(crate) fn bucket_of(g: &Graph, v: usize, nv: &[usize], u: usize, p: &[usize]) -> Bucket {
    if !p.contains(&u) {
        return Bucket::Other;
    }
    if p.contains(&v) {
        return Bucket::WithV;
    }
    let on_path: Vec<usize> = p.iter().copied().filter(|&x| g.adjacent(u, x)).collect();
    let k = on_path.iter().copied().find(|x| nv.contains(x));
    match (on_path.len(), k) {
        (0 | 1, None) => Bucket::End,
        (1, Some(k)) => Bucket::EndTwo { k },
        (2, None) => Bucket::InnerOne,
        (2, Some(k)) => Bucket::InnerTwo {
            k,
            w: on_path.into_iter().find(|&x| x != k).expect("two path neighbours"),
        },
        _ => unreachable!("an induced path gives each vertex at most two neighbours"),
    }
}

pub(crate) fn buckets_for(g: &Graph, v: usize, nv: &[usize], u: usize, psi: &Combination) -> Buckets {
    let mut b = Buckets {
        u,
        ..Buckets::default()
    };
    for (p, _) in psi.iter() {
        let p = p.clone();
        match bucket_of(g, v, nv, u, &p) {
            Bucket::End => b.end.push(p),
            Bucket::EndTwo { k } => {
                if !b.k2.contains(&k) {
                    b.k2.push(k);
                }
                b.end_two.push(p);
            }
            Bucket::InnerOne => b.inner_one.push(p),
            Bucket::InnerTwo { .. } => b.inner_two.push(p),
            Bucket::WithV => b.with_v.push(p),
            Bucket::Other => b.other.push(p),
        }
    }
    b.k2.sort_unstable();
    b
}

/// Buckets of every `u ∈ N(v)` for the paths of `psi`.
pub fn classify_buckets(g: &Graph, v: usize, psi: &Combination) -> Result<DecompositionState> {
    g.is_vertex_set(&[v])?;
    let nv = g.neighbors(v);
    if !is_clique(g, nv) {
        return Err(Error::NotSimplicial(v + 1));
    }
    for (p, _) in psi.iter() {
        if path_order(g, p).is_none() {
            return Err(Error::Precondition(format!(
                "{} is not an induced path",
                crate::graph::format_set(p)
            )));
        }
    }
    Ok(DecompositionState {
        v,
        buckets: nv.iter().map(|&u| buckets_for(g, v, nv, u, psi)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(sets: &[&[usize]]) -> Combination {
        let mut c = Combination::new();
        for s in sets {
            c.add(s, 1);
        }
        c
    }

    #[test]
    fn star_leaf() {
        // Centre 2 (0-based 1), leaves 1, 3, 4.
        let g = Graph::new(4, [(1, 0), (1, 2), (1, 3)]).unwrap();
        let st = classify_buckets(&g, 0, &psi(&[&[1, 2]])).unwrap();
        assert_eq!(st.buckets.len(), 1);
        assert_eq!(st.buckets[0].u, 1);
        assert_eq!(st.buckets[0].end, vec![vec![1, 2]]);
    }

    #[test]
    fn p3_leaf() {
        let g = Graph::path(3);
        let st = classify_buckets(&g, 0, &psi(&[&[1, 2]])).unwrap();
        assert_eq!(st.buckets[0].end, vec![vec![1, 2]]);
        let st = classify_buckets(&g, 0, &psi(&[&[2]])).unwrap();
        assert_eq!(st.buckets[0].other, vec![vec![2]]);
        assert!(matches!(
            classify_buckets(&g, 1, &psi(&[])),
            Err(Error::NotSimplicial(2))
        ));
    }

    #[test]
    fn all_patterns() {
        // v = 0 adjacent to the clique {1, 2}; 3 hangs off 1, 4 hangs off 3.
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4)]).unwrap();
        let nv = g.neighbors(0).to_vec();
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[1, 3]), Bucket::End);
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[1, 2]), Bucket::EndTwo { k: 2 });
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[1, 2, 3]), Bucket::InnerTwo { k: 2, w: 3 });
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[0, 1, 3]), Bucket::WithV);
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[3, 4]), Bucket::Other);
        // 5 hangs off 1 as well, making 1 interior on 3-1-5.
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (1, 5)]).unwrap();
        let nv = g.neighbors(0).to_vec();
        assert_eq!(bucket_of(&g, 0, &nv, 1, &[1, 3, 5]), Bucket::InnerOne);
    }
}
