use num_traits::One;

use crate::graph::{find_hole, Graph};
use crate::rational::int;
use crate::subgraph::ExtendedVector;

/// For a graph with a hole `H`, the point with `x_v = 2` at the last vertex
/// `v` of `H`, `x = 1` on the rest of `H`, `y = 1` on the edges of `H` and
/// zero elsewhere. It satisfies both the tree and the path system (with the
/// hyperplane) while not being binary. `None` for chordal graphs.
pub fn non_binary_witness(g: &Graph) -> Option<ExtendedVector> {
    let hole = find_hole(g)?;
    let mut p = ExtendedVector::zeros(g);
    for &w in &hole {
        p.x[w] = crate::Rational::one();
    }
    let v = *hole.last().expect("holes have at least four vertices");
    p.x[v] = int(2);
    for i in 0..hole.len() {
        let (a, b) = (hole[i], hole[(i + 1) % hole.len()]);
        let e = g.edge_index(a, b).expect("consecutive hole vertices are adjacent");
        p.y[e] = crate::Rational::one();
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{check_membership, path_system, tree_system, CliqueMode};

    #[test]
    fn c4_witness() {
        let g = Graph::cycle(4);
        let p = non_binary_witness(&g).unwrap();
        let twos = p.x.iter().filter(|r| **r == int(2)).count();
        assert_eq!(twos, 1);
        assert_eq!(p.x.iter().filter(|r| r.is_one()).count(), 3);
        assert!(p.y.iter().all(|r| r.is_one()));
        assert_eq!(p.hyperplane_value(), int(1));
        assert!(check_membership(&tree_system(&g, true), &p).unwrap().0);
        assert!(
            check_membership(&path_system(&g, CliqueMode::Orbits, true).unwrap(), &p)
                .unwrap()
                .0
        );
    }

    #[test]
    fn chordal_has_none() {
        assert!(non_binary_witness(&Graph::path(3)).is_none());
    }

    #[test]
    fn c7_in_all_cliques_system() {
        let g = Graph::cycle(7);
        let p = non_binary_witness(&g).unwrap();
        assert!(
            check_membership(&path_system(&g, CliqueMode::All, true).unwrap(), &p)
                .unwrap()
                .0
        );
    }

    #[test]
    fn pendant_vertices_stay_zero() {
        // C4 plus a pendant vertex hanging off vertex 0.
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let p = non_binary_witness(&g).unwrap();
        assert_eq!(p.hyperplane_value(), int(1));
        assert!(check_membership(&tree_system(&g, true), &p).unwrap().0);
    }
}
