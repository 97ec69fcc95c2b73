//! Exact linear programming, affine ranks, and the max-weight induced
//! tree/path solvers.

mod rank;
mod simplex;
mod solve;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyhedra::{LinearSystem, Relation};
use crate::rational::Rational;
use crate::subgraph::ExtendedVector;

pub use rank::{affine_dimension, affine_rank, linear_rank};
pub use simplex::{solve_raw, LpStatus, RawLp, RawRow, RawSolution};
pub use solve::{max_weight_subgraph, MaxWeight};

#[derive(Clone, Debug)]
pub struct LpResult {
    pub status: LpStatus,
    /// Set when the status is [`LpStatus::Optimal`].
    pub value: Option<Rational>,
    pub vertex: Option<ExtendedVector>,
    pub iterations: usize,
}

/// Maximizes `objective · z` over the system. Rows of the form `-c·z_j ≤ 0`
/// (`c > 0`) become sign constraints on `z_j` instead of tableau rows; every
/// other variable is free.
pub fn simplex_max(sys: &LinearSystem, objective: &ExtendedVector) -> Result<LpResult> {
    if objective.x.len() != sys.n() || objective.y.len() != sys.m() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            got: objective.len(),
        });
    }
    if sys.is_empty() {
        return Err(Error::Precondition("linear system has no rows".into()));
    }
    let dim = sys.dim();
    let mut nonneg = vec![false; dim];
    let mut rows = Vec::new();
    for row in sys.rows() {
        let sign_row =
            row.rel == Relation::Le && row.rhs.is_zero() && row.coeffs.values().filter(|c| !c.is_zero()).count() == 1;
        if sign_row {
            let (&j, c) = row.coeffs.iter().find(|(_, c)| !c.is_zero()).expect("one nonzero");
            if c.is_negative() {
                nonneg[j] = true;
                continue;
            }
        }
        rows.push((
            row.coeffs.iter().map(|(&j, c)| (j, c.clone())).collect(),
            row.rel,
            row.rhs.clone(),
        ));
    }
    let raw = RawLp {
        ncols: dim,
        rows,
        objective: objective.iter().cloned().collect(),
        nonneg,
    };
    let sol = solve_raw(&raw);
    let vertex = sol.z.map(|z| {
        let y = z[sys.n()..].to_vec();
        let mut x = z;
        x.truncate(sys.n());
        ExtendedVector { x, y }
    });
    if let Some(v) = &vertex {
        if let Some(bad) = sys.rows().iter().find(|r| !r.is_satisfied(v)) {
            return Err(Error::Internal(format!("simplex vertex violates {}", bad.tag)));
        }
    }
    Ok(LpResult {
        status: sol.status,
        value: sol.value,
        vertex,
        iterations: sol.iterations,
    })
}
