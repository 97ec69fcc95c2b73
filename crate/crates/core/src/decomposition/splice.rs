use crate::error::{Error, Result};
use crate::graph::{format_set, Graph};
use crate::subgraph::{is_induced, path_order, SubgraphKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpliceOutcome {
    /// The neighbours of `u` on the two paths are adjacent.
    Adjacent,
    /// The union, which induces a path.
    Spliced(Vec<usize>),
}

/// The neighbour of extremity `u` on the induced path `p` (`None` when `p`
/// is `{u}` or `u` is not an extremity).
pub(crate) fn end_neighbour(g: &Graph, p: &[usize], u: usize) -> Option<usize> {
    let inside: Vec<usize> = p.iter().copied().filter(|&x| g.adjacent(u, x)).collect();
    match inside.as_slice() {
        [a] => Some(*a),
        _ => None,
    }
}

/// For two induced paths ending at `u` whose `u`-neighbours differ: either
/// those neighbours are adjacent, or (in a chordal graph) the union of the
/// paths induces a path. A union that fails to induce a path is reported as
/// an internal error.
pub fn splice_paths(g: &Graph, p1: &[usize], p2: &[usize], u: usize) -> Result<SpliceOutcome> {
    for p in [p1, p2] {
        if path_order(g, p).is_none() {
            return Err(Error::Precondition(format!("{} is not an induced path", format_set(p))));
        }
        if !p.contains(&u) {
            return Err(Error::Precondition(format!(
                "{} does not contain {}",
                format_set(p),
                u + 1
            )));
        }
    }
    let (Some(u1), Some(u2)) = (end_neighbour(g, p1, u), end_neighbour(g, p2, u)) else {
        return Err(Error::Precondition(format!(
            "{} is not an extremity of both paths with a neighbour on each",
            u + 1
        )));
    };
    if u1 == u2 {
        return Err(Error::Precondition(format!(
            "both paths leave {} through {}",
            u + 1,
            u1 + 1
        )));
    }
    if g.adjacent(u1, u2) {
        return Ok(SpliceOutcome::Adjacent);
    }
    let mut union: Vec<usize> = p1.iter().chain(p2).copied().collect();
    union.sort_unstable();
    union.dedup();
    if !is_induced(SubgraphKind::Path, g, &union)? || union.len() + 1 != p1.len() + p2.len() {
        return Err(Error::Internal(format!(
            "paths {} and {} through {} splice into {}, which is not an induced path",
            format_set(p1),
            format_set(p2),
            u + 1,
            format_set(&union)
        )));
    }
    Ok(SpliceOutcome::Spliced(union))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p5 = Graph::path(5);
        assert_eq!(
            splice_paths(&p5, &[0, 1, 2], &[2, 3, 4], 2).unwrap(),
            SpliceOutcome::Spliced(vec![0, 1, 2, 3, 4])
        );
        let k3 = Graph::complete(3);
        assert_eq!(splice_paths(&k3, &[0, 1], &[1, 2], 1).unwrap(), SpliceOutcome::Adjacent);
    }

    #[test]
    fn preconditions() {
        let p5 = Graph::path(5);
        assert!(splice_paths(&p5, &[0, 1, 2], &[1, 2], 2).is_err());
        assert!(splice_paths(&p5, &[1, 2, 3], &[3, 4], 2).is_err());
        assert!(splice_paths(&Graph::cycle(4), &[0, 1], &[0, 3], 0).is_ok());
    }

    #[test]
    fn hole_breaks_the_dichotomy() {
        // In C5 the paths 1-2-3 and 3-4-5 end at 3 with nonadjacent
        // neighbours, but their union closes the hole.
        let c5 = Graph::cycle(5);
        assert!(matches!(
            splice_paths(&c5, &[0, 1, 2], &[2, 3, 4], 2),
            Err(Error::Internal(_))
        ));
    }
}
