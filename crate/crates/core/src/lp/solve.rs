use crate::error::{Error, Result};
use crate::graph::{find_hole, mcs_order, Graph};
use crate::polyhedra::{path_system, tree_system, CliqueMode};
use crate::rational::Rational;
use crate::subgraph::{incidence_vector, is_induced, ExtendedVector, SubgraphKind};

use super::{simplex_max, LpStatus};

#[derive(Clone, Debug)]
pub struct MaxWeight {
    pub value: Rational,
    /// Sorted vertex set of the optimal induced tree (path).
    pub set: Vec<usize>,
    pub vertex: ExtendedVector,
    pub iterations: usize,
}

/// Maximum-weight induced tree (path) of a chordal graph, by one exact LP
/// over the corresponding polytope. The optimal vertex is checked to be the
/// incidence vector of an induced tree (path).
pub fn max_weight_subgraph(kind: SubgraphKind, g: &Graph, weights: &ExtendedVector) -> Result<MaxWeight> {
    weights.check_dims(g)?;
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !mcs_order(g).1 {
        return Err(Error::NonChordalInput {
            hole: find_hole(g).unwrap_or_default(),
        });
    }
    let sys = match kind {
        SubgraphKind::Tree => tree_system(g, true),
        SubgraphKind::Path => path_system(g, CliqueMode::Orbits, true)?,
    };
    let r = simplex_max(&sys, weights)?;
    if r.status != LpStatus::Optimal {
        return Err(Error::Internal(format!(
            "{kind} polytope LP ended {:?}; it is nonempty and bounded",
            r.status
        )));
    }
    let vertex = r.vertex.expect("optimal LP has a vertex");
    let value = r.value.expect("optimal LP has a value");
    if !vertex.is_binary() {
        let coords: Vec<String> = vertex.iter().map(crate::rational::format).collect();
        return Err(Error::InternalIntegralityViolation(coords.join(" ")));
    }
    let set = vertex.x_support();
    if set.is_empty() || !is_induced(kind, g, &set)? || incidence_vector(g, &set) != vertex {
        return Err(Error::InternalIntegralityViolation(format!(
            "binary vertex on {} is not an induced {kind}",
            crate::graph::format_set(&set)
        )));
    }
    Ok(MaxWeight {
        value,
        set,
        vertex,
        iterations: r.iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn examples() {
        let p3 = Graph::path(3);
        let r = max_weight_subgraph(SubgraphKind::Path, &p3, &ExtendedVector::from_ints(&[1, 1, 1], &[1, 1])).unwrap();
        assert_eq!(r.value, int(5));
        assert_eq!(r.set, vec![0, 1, 2]);

        let star = Graph::star(3);
        let ones = ExtendedVector::from_ints(&[1; 4], &[1; 3]);
        let t = max_weight_subgraph(SubgraphKind::Tree, &star, &ones).unwrap();
        assert_eq!(t.value, int(7));
        assert_eq!(t.set, vec![0, 1, 2, 3]);
        let p = max_weight_subgraph(SubgraphKind::Path, &star, &ones).unwrap();
        assert_eq!(p.value, int(5));
        assert_eq!(p.set.len(), 3);
        assert!(p.set.contains(&0));
    }

    #[test]
    fn rejects_non_chordal() {
        let c4 = Graph::cycle(4);
        let w = ExtendedVector::from_ints(&[1; 4], &[1; 4]);
        assert!(matches!(
            max_weight_subgraph(SubgraphKind::Tree, &c4, &w),
            Err(Error::NonChordalInput { .. })
        ));
    }

    #[test]
    fn negative_weights_pick_best_singleton() {
        let g = Graph::complete(3);
        let w = ExtendedVector::from_ints(&[-3, -1, -2], &[-1, -1, -1]);
        let r = max_weight_subgraph(SubgraphKind::Tree, &g, &w).unwrap();
        assert_eq!(r.value, int(-1));
        assert_eq!(r.set, vec![1]);
    }
}
