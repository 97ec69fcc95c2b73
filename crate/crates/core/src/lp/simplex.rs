//! Dense two-phase primal simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::polyhedra::Relation;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Sparse `Σ coeff·z_col (≤ | =) rhs`.
pub type RawRow = (Vec<(usize, Rational)>, Relation, Rational);

/// `max c·z` subject to `rows`, with `z_j ≥ 0` where `nonneg[j]` and `z_j`
/// free otherwise.
#[derive(Clone, Debug, Default)]
pub struct RawLp {
    pub ncols: usize,
    pub rows: Vec<RawRow>,
    pub objective: Vec<Rational>,
    pub nonneg: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct RawSolution {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub z: Option<Vec<Rational>>,
    pub iterations: usize,
}

struct Tableau {
    /// `rows[i]` has `width + 1` entries; the last is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
    iterations: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::one() / &self.rows[r][c];
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        let support: Vec<usize> = (0..=self.width).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let prow = std::mem::take(&mut self.rows[r]);
        let eliminate = |row: &mut Vec<Rational>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &prow[j];
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[r] = prow;
        self.basis[r] = c;
        self.iterations += 1;
    }

    /// Bland's rule over the columns allowed by `eligible`.
    fn run(&mut self, eligible: &dyn Fn(usize) -> bool) -> Outcome {
        loop {
            let Some(c) = (0..self.width).find(|&j| eligible(j) && self.obj[j].is_positive()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(Rational, usize, usize)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((q, _, b)) => ratio < *q || (ratio == *q && self.basis[i] < *b),
                };
                if better {
                    best = Some((ratio, i, self.basis[i]));
                }
            }
            match best {
                Some((_, r, _)) => self.pivot(r, c),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut obj = cost.to_vec();
        obj.resize(self.width + 1, Rational::zero());
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost.get(self.basis[i]).cloned().unwrap_or_else(Rational::zero);
            if cb.is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(row) {
                if !a.is_zero() {
                    *o -= cb * a;
                }
            }
        }
        self.obj = obj;
    }
}

/// Solves a [`RawLp`] exactly.
pub fn solve_raw(lp: &RawLp) -> RawSolution {
    let nvars = lp.ncols;
    // Column layout: one column per variable, a second (negated) one for each
    // free variable, then slacks, then artificials.
    let mut neg_col = vec![None; nvars];
    let mut width = nvars;
    for (slot, &nonneg) in neg_col.iter_mut().zip(&lp.nonneg) {
        if !nonneg {
            *slot = Some(width);
            width += 1;
        }
    }
    let n_slack = lp.rows.iter().filter(|r| r.1 == Relation::Le).count();
    let first_slack = width;
    width += n_slack;
    let first_art = width;
    let needs_art: Vec<bool> = lp
        .rows
        .iter()
        .map(|(_, rel, rhs)| *rel == Relation::Eq || rhs.is_negative())
        .collect();
    width += needs_art.iter().filter(|&&b| b).count();

    let mut rows = Vec::with_capacity(lp.rows.len());
    let mut basis = Vec::with_capacity(lp.rows.len());
    let (mut slack, mut art) = (first_slack, first_art);
    for (k, (coeffs, rel, rhs)) in lp.rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        for (j, a) in coeffs {
            row[*j] += a;
            if let Some(nc) = neg_col[*j] {
                row[nc] -= a;
            }
        }
        row[width] = rhs.clone();
        let mut slack_col = None;
        if *rel == Relation::Le {
            row[slack] = Rational::one();
            slack_col = Some(slack);
            slack += 1;
        }
        if rhs.is_negative() {
            for a in row.iter_mut() {
                *a = -a.clone();
            }
        }
        if needs_art[k] {
            row[art] = Rational::one();
            basis.push(art);
            art += 1;
        } else {
            basis.push(slack_col.expect("rows without artificials are slack rows"));
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis,
        width,
        iterations: 0,
    };

    // Phase one: maximize minus the sum of the artificials.
    if first_art < width {
        let mut cost = vec![Rational::zero(); width];
        for c in cost.iter_mut().skip(first_art) {
            *c = -Rational::one();
        }
        t.set_objective(&cost);
        t.run(&|_| true);
        if !t.obj[width].is_zero() {
            return RawSolution {
                status: LpStatus::Infeasible,
                value: None,
                z: None,
                iterations: t.iterations,
            };
        }
        // Drive remaining (zero-valued) artificials out of the basis; rows
        // where that is impossible are redundant.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(c) => t.pivot(i, c),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); width];
    for j in 0..nvars {
        cost[j] = lp.objective[j].clone();
        if let Some(nc) = neg_col[j] {
            cost[nc] = -lp.objective[j].clone();
        }
    }
    t.set_objective(&cost);
    if let Outcome::Unbounded = t.run(&|j| j < first_art) {
        return RawSolution {
            status: LpStatus::Unbounded,
            value: None,
            z: None,
            iterations: t.iterations,
        };
    }
    let mut cols = vec![Rational::zero(); width];
    for (i, &b) in t.basis.iter().enumerate() {
        cols[b] = t.rows[i][width].clone();
    }
    let z: Vec<Rational> = (0..nvars)
        .map(|j| match neg_col[j] {
            Some(nc) => &cols[j] - &cols[nc],
            None => cols[j].clone(),
        })
        .collect();
    RawSolution {
        status: LpStatus::Optimal,
        value: Some(-t.obj[width].clone()),
        z: Some(z),
        iterations: t.iterations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    type IntRow<'a> = (&'a [(usize, i64)], Relation, i64);

    fn lp(ncols: usize, rows: &[IntRow], obj: &[i64], nonneg: &[bool]) -> RawLp {
        RawLp {
            ncols,
            rows: rows
                .iter()
                .map(|(c, rel, b)| (c.iter().map(|&(j, a)| (j, int(a))).collect(), *rel, int(*b)))
                .collect(),
            objective: obj.iter().map(|&c| int(c)).collect(),
            nonneg: nonneg.to_vec(),
        }
    }

    #[test]
    fn textbook() {
        // max 3a + 5b, a ≤ 4, 2b ≤ 12, 3a + 2b ≤ 18 → 36 at (2, 6).
        let s = solve_raw(&lp(
            2,
            &[
                (&[(0, 1)], Relation::Le, 4),
                (&[(1, 2)], Relation::Le, 12),
                (&[(0, 3), (1, 2)], Relation::Le, 18),
            ],
            &[3, 5],
            &[true, true],
        ));
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Some(int(36)));
        assert_eq!(s.z, Some(vec![int(2), int(6)]));
    }

    #[test]
    fn free_variables_and_equalities() {
        // a - b = -3, b ≤ 1, both free: max a = -2, while max -a is unbounded.
        let s = solve_raw(&lp(
            2,
            &[(&[(0, 1), (1, -1)], Relation::Eq, -3), (&[(1, 1)], Relation::Le, 1)],
            &[1, 0],
            &[false, false],
        ));
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Some(int(-2)));

        let s = solve_raw(&lp(
            2,
            &[(&[(0, 1), (1, -1)], Relation::Eq, -3), (&[(1, 1)], Relation::Le, 1)],
            &[-1, 0],
            &[false, false],
        ));
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn infeasible() {
        let s = solve_raw(&lp(1, &[(&[(0, 1)], Relation::Le, -1)], &[1], &[true]));
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn redundant_equalities() {
        let s = solve_raw(&lp(
            2,
            &[
                (&[(0, 1), (1, 1)], Relation::Eq, 2),
                (&[(0, 2), (1, 2)], Relation::Eq, 4),
            ],
            &[1, 2],
            &[true, true],
        ));
        assert_eq!(s.value, Some(int(4)));
    }
}
