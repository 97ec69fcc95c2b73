use crate::error::{Error, Result};
use crate::graph::{find_hole, is_clique, maximal_cliques, maximal_cliques_any, mcs_order, Clique, Graph};

use super::facets::facet_verdict;

/// A clique `K ⊆ N(w)` together with its closure `K ∪ {w} ∪ C(K ∪ {w})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClique {
    pub w: usize,
    pub clique: Clique,
    pub closure: Vec<usize>,
    /// Whether the associated path inequality defines a facet.
    pub facet: bool,
}

impl OrbitClique {
    fn new(g: &Graph, w: usize, clique: Vec<usize>) -> Self {
        let closure = closure(g, w, &clique);
        let clique = Clique::from_sorted_unchecked(clique);
        let facet = facet_verdict(g, w, &clique)
            .expect("orbit cliques lie in N(w)")
            .is_facet();
        OrbitClique {
            w,
            clique,
            closure,
            facet,
        }
    }
}

/// `K ∪ {w} ∪ C(K ∪ {w})`, sorted.
pub fn closure(g: &Graph, w: usize, clique: &[usize]) -> Vec<usize> {
    let mut kw = clique.to_vec();
    kw.push(w);
    let mut out = g.complete_to(&kw);
    out.extend(kw);
    out.sort_unstable();
    out
}

/// Every clique of `G[within]` (sorted vertex sets, the empty one first).
pub(crate) fn all_cliques_within(g: &Graph, within: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    fn grow(g: &Graph, within: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..within.len() {
            let u = within[i];
            if cur.iter().all(|&c| g.adjacent(c, u)) {
                cur.push(u);
                out.push(cur.clone());
                grow(g, within, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    grow(g, within, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The twin graph of `local` (vertices `0..k`): vertex `k + u` is a true twin
/// of `u`, and the twins `k..2k` form a clique. It need not be chordal even
/// when `local` is: an induced path `a c d b` yields the hole `a' c d b'`.
pub fn twin_graph(local: &Graph) -> Result<Graph> {
    let k = local.n();
    let mut edges: Vec<(usize, usize)> = local.edges().to_vec();
    for u in 0..k {
        edges.push((u, k + u));
        edges.extend(local.neighbors(u).iter().map(|&x| (k + u, x)));
        edges.extend((u + 1..k).map(|t| (k + u, k + t)));
    }
    Graph::new(2 * k, edges)
}

/// Orbit-defining cliques of `w` via the twin construction.
///
/// `H` is `G[N(w)]` with a true twin `u'` added for every `u ∈ N(w)` (adjacent
/// to `u` and to `N(u) ∩ N(w)`) and the twins made pairwise adjacent. Each
/// maximal clique of `H`, intersected with `N(w)`, is an orbit-defining
/// clique and every orbit-defining clique arises this way. Maximal cliques
/// come from a perfect elimination order when `H` is chordal and from
/// Bron–Kerbosch otherwise.
pub fn orbit_cliques(g: &Graph, w: usize) -> Result<Vec<OrbitClique>> {
    g.is_vertex_set(&[w])?;
    let nw = g.neighbors(w);
    let k = nw.len();
    if k == 0 {
        return Ok(vec![OrbitClique::new(g, w, Vec::new())]);
    }
    let (local, map) = g.induced_subgraph(nw)?;
    let (_, local_chordal) = mcs_order(&local);
    if !local_chordal {
        let hole = find_hole(&local)
            .map(|h| h.into_iter().map(|i| map[i]).collect())
            .unwrap_or_default();
        return Err(Error::NonChordalInput { hole });
    }
    let h = twin_graph(&local)?;
    let (peo, chordal) = mcs_order(&h);
    let maximal = if chordal {
        maximal_cliques(&h, &peo)?
    } else {
        log::debug!("twin graph of vertex {} is not chordal; using Bron-Kerbosch", w + 1);
        maximal_cliques_any(&h)
    };
    let mut projected: Vec<Vec<usize>> = maximal
        .into_iter()
        .map(|c| {
            let mut kk: Vec<usize> = c.verts().iter().filter(|&&i| i < k).map(|&i| map[i]).collect();
            kk.sort_unstable();
            kk
        })
        .collect();
    projected.sort();
    let before = projected.len();
    projected.dedup();
    if projected.len() != before {
        log::warn!(
            "twin graph of vertex {}: {} maximal cliques project onto {} cliques",
            w + 1,
            before,
            projected.len()
        );
    }
    Ok(projected.into_iter().map(|kk| OrbitClique::new(g, w, kk)).collect())
}

/// Orbit-defining cliques of `w` straight from the definition: cliques
/// `K ⊆ N(w)` (the empty one included) such that no clique `K' ⊋ K` has a
/// closure containing the closure of `K`. Exponential in `|N(w)|`.
pub fn orbit_cliques_oracle(g: &Graph, w: usize) -> Vec<OrbitClique> {
    let cliques = all_cliques_within(g, g.neighbors(w));
    debug_assert!(cliques.iter().all(|c| is_clique(g, c)));
    let closures: Vec<Vec<usize>> = cliques.iter().map(|c| closure(g, w, c)).collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    (0..cliques.len())
        .filter(|&i| {
            !(0..cliques.len()).any(|j| {
                cliques[j].len() > cliques[i].len()
                    && subset(&cliques[i], &cliques[j])
                    && subset(&closures[i], &closures[j])
            })
        })
        .map(|i| OrbitClique::new(g, w, cliques[i].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::ORBIT_NOT_FACET;
    use crate::graph::parse_graph;

    fn sets(os: &[OrbitClique]) -> Vec<Vec<usize>> {
        os.iter()
            .map(|o| o.clique.verts().iter().map(|v| v + 1).collect())
            .collect()
    }

    #[test]
    fn p3_orbits() {
        let g = Graph::path(3);
        let expected = vec![vec![], vec![1], vec![3]];
        assert_eq!(sets(&orbit_cliques(&g, 1).unwrap()), expected);
        assert_eq!(sets(&orbit_cliques_oracle(&g, 1)), expected);
        assert_eq!(sets(&orbit_cliques(&g, 0).unwrap()), vec![vec![2]]);
        assert_eq!(sets(&orbit_cliques_oracle(&g, 0)), vec![vec![2]]);
    }

    #[test]
    fn star_centre_matches_oracle() {
        let g = Graph::star(3);
        let fast = sets(&orbit_cliques(&g, 0).unwrap());
        assert_eq!(fast, sets(&orbit_cliques_oracle(&g, 0)));
        assert_eq!(fast, vec![vec![], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn single_neighbour() {
        let g = Graph::path(2);
        assert_eq!(sets(&orbit_cliques_oracle(&g, 0)), vec![vec![2]]);
        let iso = Graph::empty(1);
        assert_eq!(sets(&orbit_cliques(&iso, 0).unwrap()), vec![Vec::<usize>::new()]);
        assert_eq!(sets(&orbit_cliques_oracle(&iso, 0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn orbit_not_facet_clique() {
        let g = parse_graph(ORBIT_NOT_FACET).unwrap();
        let oracle = orbit_cliques_oracle(&g, 0);
        let hit = oracle
            .iter()
            .find(|o| o.clique.verts() == [1, 2])
            .expect("{2,3} defines an orbit of 1");
        assert!(!hit.facet);
        assert_eq!(hit.closure, (0..7).collect::<Vec<_>>());
        assert_eq!(sets(&orbit_cliques(&g, 0).unwrap()), sets(&oracle));
    }

    #[test]
    fn twin_graph_of_p4_has_a_hole() {
        let h = twin_graph(&Graph::path(4)).unwrap();
        assert!(!mcs_order(&h).1);
        // w joined to a P4: orbits still match the definition.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(sets(&orbit_cliques(&g, 0).unwrap()), sets(&orbit_cliques_oracle(&g, 0)));
    }

    #[test]
    fn non_chordal_neighbourhood_is_reported() {
        // Wheel: hub 0 over the 4-cycle 1..4.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(matches!(orbit_cliques(&g, 0), Err(Error::NonChordalInput { .. })));
    }
}
