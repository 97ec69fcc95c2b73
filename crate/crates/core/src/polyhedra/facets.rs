use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{format_set, is_clique, Clique, Graph};
use crate::lp::affine_dimension;
use crate::subgraph::{enumerate_induced, incidence_vector, SubgraphKind};

use super::path_row;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetVerdict {
    Facet,
    /// `C(K ∪ {w})` is empty, so the bipartite condition holds vacuously.
    VacuousFacet,
    NotFacet,
}

impl FacetVerdict {
    pub fn is_facet(self) -> bool {
        !matches!(self, FacetVerdict::NotFacet)
    }
}

impl fmt::Display for FacetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FacetVerdict::Facet => "facet",
            FacetVerdict::VacuousFacet => "facet (vacuous)",
            FacetVerdict::NotFacet => "not a facet",
        })
    }
}

/// Outcome of the brute-force rank test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankVerdict {
    Facet,
    NotFacet,
    /// The row is tight on every induced path: an implicit equality.
    Improper,
}

impl fmt::Display for RankVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankVerdict::Facet => "facet",
            RankVerdict::NotFacet => "not a facet",
            RankVerdict::Improper => "improper (implicit equality)",
        })
    }
}

fn check_clique_in_neighbourhood(g: &Graph, w: usize, clique: &[usize]) -> Result<()> {
    g.is_vertex_set(&[w])?;
    g.is_vertex_set(clique)?;
    if !is_clique(g, clique) {
        return Err(Error::NotAClique(format_set(clique)));
    }
    if let Some(&u) = clique.iter().find(|&&u| !g.adjacent(u, w)) {
        return Err(Error::Precondition(format!(
            "{} is not a neighbour of {}",
            u + 1,
            w + 1
        )));
    }
    Ok(())
}

/// The combinatorial facet criterion for the path row of `(w, K)`: no
/// connected component of the complement of `G[C(K ∪ {w})]` is bipartite.
pub fn facet_verdict(g: &Graph, w: usize, clique: &Clique) -> Result<FacetVerdict> {
    check_clique_in_neighbourhood(g, w, clique.verts())?;
    let mut kw = clique.verts().to_vec();
    kw.push(w);
    let c = g.complete_to(&kw);
    if c.is_empty() {
        return Ok(FacetVerdict::VacuousFacet);
    }
    let (sub, _) = g.induced_subgraph(&c)?;
    let any_bipartite = sub.complement().components_bipartite().iter().any(|(_, b)| *b);
    Ok(if any_bipartite {
        FacetVerdict::NotFacet
    } else {
        FacetVerdict::Facet
    })
}

pub fn is_facet_defining(g: &Graph, w: usize, clique: &Clique) -> Result<bool> {
    facet_verdict(g, w, clique).map(FacetVerdict::is_facet)
}

/// Facet test by exact affine rank over all induced-path incidence vectors:
/// the face cut out by the row must have dimension one less than the
/// polytope. Exponential; meant for small graphs.
pub fn facet_rank_oracle(g: &Graph, w: usize, clique: &Clique) -> Result<RankVerdict> {
    check_clique_in_neighbourhood(g, w, clique.verts())?;
    let row = path_row(g, w, clique.verts());
    let points: Vec<_> = enumerate_induced(SubgraphKind::Path, g)
        .iter()
        .map(|p| incidence_vector(g, p))
        .collect();
    let tight: Vec<_> = points.iter().filter(|p| row.is_tight(p)).cloned().collect();
    let full = affine_dimension(&points);
    let face = affine_dimension(&tight);
    Ok(if face == full {
        RankVerdict::Improper
    } else if face == full - 1 {
        RankVerdict::Facet
    } else {
        RankVerdict::NotFacet
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::ORBIT_NOT_FACET;
    use crate::graph::parse_graph;

    fn k(g: &Graph, vs: &[usize]) -> Clique {
        Clique::new(g, vs).unwrap()
    }

    #[test]
    fn p3_cases() {
        let g = Graph::path(3);
        assert_eq!(facet_verdict(&g, 1, &k(&g, &[0])).unwrap(), FacetVerdict::VacuousFacet);
        assert_eq!(facet_rank_oracle(&g, 1, &k(&g, &[0])).unwrap(), RankVerdict::Facet);
        assert_eq!(facet_verdict(&g, 1, &k(&g, &[])).unwrap(), FacetVerdict::NotFacet);
        assert_eq!(facet_rank_oracle(&g, 1, &k(&g, &[])).unwrap(), RankVerdict::NotFacet);
    }

    #[test]
    fn orbit_not_facet() {
        let g = parse_graph(ORBIT_NOT_FACET).unwrap();
        let c = k(&g, &[1, 2]);
        assert!(!is_facet_defining(&g, 0, &c).unwrap());
        assert_eq!(facet_rank_oracle(&g, 0, &c).unwrap(), RankVerdict::NotFacet);
    }

    #[test]
    fn single_edge() {
        let g = Graph::path(2);
        assert_eq!(facet_rank_oracle(&g, 0, &k(&g, &[])).unwrap(), RankVerdict::NotFacet);
        // Only {1} is tight for 2y ≤ 2x_1 among {1},{2},{1,2}: not improper.
        assert_eq!(facet_rank_oracle(&g, 0, &k(&g, &[1])).unwrap(), RankVerdict::Facet);
        assert!(is_facet_defining(&g, 0, &k(&g, &[1])).unwrap());
    }

    #[test]
    fn rejects_clique_outside_neighbourhood() {
        let g = Graph::path(3);
        let c = k(&g, &[2]);
        assert!(matches!(facet_verdict(&g, 0, &c), Err(Error::Precondition(_))));
    }
}
