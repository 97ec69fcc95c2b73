use num_traits::Zero;

use crate::rational::Rational;
use crate::subgraph::ExtendedVector;

/// Rank of a list of rational row vectors by exact Gaussian elimination.
pub fn linear_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for j in col..width {
                if !pivot[j].is_zero() {
                    row[j] -= &f * &pivot[j];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of a nonempty list of points.
pub fn affine_rank(points: &[ExtendedVector]) -> usize {
    let (first, rest) = points.split_first().expect("affine rank of an empty set");
    let diffs = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    linear_rank(diffs)
}

/// As [`affine_rank`], with `-1` for the empty set.
pub fn affine_dimension(points: &[ExtendedVector]) -> isize {
    if points.is_empty() {
        -1
    } else {
        affine_rank(points) as isize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rational::frac;
    use crate::subgraph::{enumerate_induced, incidence_vector, SubgraphKind};

    #[test]
    fn p3_paths_span_four() {
        let g = Graph::path(3);
        let pts: Vec<_> = enumerate_induced(SubgraphKind::Path, &g)
            .iter()
            .map(|w| incidence_vector(&g, w))
            .collect();
        assert_eq!(pts.len(), 6);
        assert_eq!(affine_rank(&pts), 4);
    }

    #[test]
    fn small_cases() {
        let e1 = ExtendedVector::from_ints(&[1, 0], &[]);
        let e2 = ExtendedVector::from_ints(&[0, 1], &[]);
        assert_eq!(affine_rank(std::slice::from_ref(&e1)), 0);
        let mid = ExtendedVector {
            x: vec![frac(1, 2), frac(1, 2)],
            y: vec![],
        };
        assert_eq!(affine_rank(&[e1, e2, mid]), 1);
        assert_eq!(affine_dimension(&[]), -1);
    }
}
