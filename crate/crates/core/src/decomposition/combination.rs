use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::subgraph::{incidence_vector, is_induced, ExtendedVector, SubgraphKind};

/// A nonnegative integer combination `Σ λ_W ξ^W`, keyed by sorted vertex
/// sets. Coefficients are kept positive; zero entries are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    entries: BTreeMap<Vec<usize>, u64>,
}

impl Combination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &u64)> {
        self.entries.iter()
    }

    pub fn get(&self, set: &[usize]) -> u64 {
        self.entries.get(set).copied().unwrap_or(0)
    }

    /// Adds `lambda` copies of `set` (sorted on insertion).
    pub fn add(&mut self, set: &[usize], lambda: u64) {
        if lambda == 0 {
            return;
        }
        let mut key = set.to_vec();
        key.sort_unstable();
        *self.entries.entry(key).or_insert(0) += lambda;
    }

    /// Removes `lambda` copies of `set`; panics if fewer are present.
    pub fn remove(&mut self, set: &[usize], lambda: u64) {
        if lambda == 0 {
            return;
        }
        let mut key = set.to_vec();
        key.sort_unstable();
        let slot = self.entries.get_mut(&key).expect("removing an absent set");
        assert!(*slot >= lambda, "removing more copies than present");
        *slot -= lambda;
        if *slot == 0 {
            self.entries.remove(&key);
        }
    }

    /// `Σ λ`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn sum_vector(&self, g: &Graph) -> ExtendedVector {
        let mut p = ExtendedVector::zeros(g);
        for (set, &lambda) in &self.entries {
            p.add_scaled(&incidence_vector(g, set), &Rational::from_integer(lambda.into()));
        }
        p
    }

    /// One line per entry: `<lambda> : v1 v2 …` (1-based).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (set, lambda) in &self.entries {
            let vs: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&format!("{lambda} : {}\n", vs.join(" ")));
        }
        s
    }

    /// Parses [`Combination::to_text`] output; `#` starts a comment.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut c = Combination::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let (lam, vs) = line
                .split_once(':')
                .ok_or_else(|| err("expected `<lambda> : <vertices>`".into()))?;
            let lambda: u64 = lam
                .trim()
                .parse()
                .map_err(|_| err(format!("bad coefficient `{}`", lam.trim())))?;
            if lambda == 0 {
                return Err(err("coefficients must be positive".into()));
            }
            let mut set = Vec::new();
            for tok in vs.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| err(format!("bad vertex `{tok}`")))?;
                if v == 0 || v > n {
                    return Err(err(format!("vertex {v} out of range 1..={n}")));
                }
                set.push(v - 1);
            }
            if set.is_empty() {
                return Err(err("empty vertex set".into()));
            }
            c.add(&set, lambda);
        }
        Ok(c)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Every support is an induced tree (path), every coefficient positive, and
/// `Σ λ_W ξ^W = p` exactly.
pub fn verify_combination(g: &Graph, kind: SubgraphKind, c: &Combination, p: &ExtendedVector) -> bool {
    if p.check_dims(g).is_err() {
        return false;
    }
    let supports_ok = c
        .iter()
        .all(|(set, &lambda)| lambda > 0 && !set.is_empty() && is_induced(kind, g, set).unwrap_or(false));
    supports_ok && c.sum_vector(g) == *p
}

/// `x(V) − y(E)` of an integral point, which is `Σ λ` for any decomposition.
pub fn expected_total(p: &ExtendedVector) -> Option<u64> {
    let h = p.hyperplane_value();
    if h < Rational::zero() {
        return None;
    }
    crate::rational::to_u64(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_remove_and_text() {
        let mut c = Combination::new();
        c.add(&[2, 1], 2);
        c.add(&[1, 2], 1);
        c.add(&[0], 1);
        assert_eq!(c.get(&[1, 2]), 3);
        c.remove(&[1, 2], 3);
        assert_eq!(c.len(), 1);
        c.add(&[1, 2], 2);
        let text = c.to_text();
        assert_eq!(text, "1 : 1\n2 : 2 3\n");
        assert_eq!(Combination::parse(&text, 3).unwrap(), c);
        assert!(Combination::parse("0 : 1", 3).is_err());
        assert!(Combination::parse("1 : 4", 3).is_err());
    }

    #[test]
    fn verify_examples() {
        let p3 = Graph::path(3);
        let mut c = Combination::new();
        c.add(&[0, 1, 2], 1);
        assert!(!verify_combination(
            &p3,
            SubgraphKind::Tree,
            &c,
            &incidence_vector(&p3, &[0, 1])
        ));
        assert!(verify_combination(
            &p3,
            SubgraphKind::Tree,
            &c,
            &incidence_vector(&p3, &[0, 1, 2])
        ));
        let k3 = Graph::complete(3);
        assert!(!verify_combination(
            &k3,
            SubgraphKind::Tree,
            &c,
            &incidence_vector(&k3, &[0, 1, 2])
        ));
    }
}
