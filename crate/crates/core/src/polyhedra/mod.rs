//! Linear systems over `V ⊎ E` for the induced tree and induced path cones
//! and polytopes, together with the orbit and facet machinery for the path
//! inequalities.

mod facets;
mod orbits;
mod systems;
mod witness;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::subgraph::ExtendedVector;

pub use facets::{facet_rank_oracle, facet_verdict, is_facet_defining, FacetVerdict, RankVerdict};
pub use orbits::{closure, orbit_cliques, orbit_cliques_oracle, twin_graph, OrbitClique};
pub use systems::{path_row, path_system, tree_row, tree_system, CliqueMode};
pub use witness::non_binary_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

/// Where a row came from. Vertex and clique members are 0-based; `Display`
/// renders them 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RowTag {
    TreeClique { v: usize, clique: Vec<usize> },
    PathClique { w: usize, clique: Vec<usize> },
    NonNegVertex(usize),
    NonNegEdge(usize, usize),
    Hyperplane,
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |vs: &[usize]| crate::graph::format_set(vs);
        match self {
            RowTag::TreeClique { v, clique } => write!(f, "TreeClique({},{})", v + 1, set(clique)),
            RowTag::PathClique { w, clique } => write!(f, "PathClique({},{})", w + 1, set(clique)),
            RowTag::NonNegVertex(v) => write!(f, "NonNegVertex({})", v + 1),
            RowTag::NonNegEdge(u, v) => write!(f, "NonNegEdge({},{})", u + 1, v + 1),
            RowTag::Hyperplane => f.write_str("Hyperplane"),
        }
    }
}

/// Integer coefficients, relation and right-hand side with gcd one.
type RowKey = (Vec<(usize, BigInt)>, Relation, BigInt);

/// `Σ coeffs[i]·z_i (≤ | =) rhs`, with `z` the flat `V ⊎ E` vector
/// (vertices first, then edges by canonical index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRow {
    pub coeffs: BTreeMap<usize, Rational>,
    pub rel: Relation,
    pub rhs: Rational,
    pub tag: RowTag,
}

impl LinearRow {
    pub fn evaluate(&self, p: &ExtendedVector) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, (&i, c)| acc + c * p.coord(i))
    }

    pub fn is_satisfied(&self, p: &ExtendedVector) -> bool {
        let lhs = self.evaluate(p);
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }

    pub fn is_tight(&self, p: &ExtendedVector) -> bool {
        self.evaluate(p) == self.rhs
    }

    /// Key identifying the row up to positive scaling (and sign, for
    /// equalities): integer coefficients with gcd one.
    fn canonical_key(&self) -> RowKey {
        let lcm = self
            .coeffs
            .values()
            .chain(std::iter::once(&self.rhs))
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scaled: Vec<(usize, BigInt)> = self
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&i, c)| (i, (c * Rational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let rhs = (&self.rhs * Rational::from_integer(lcm)).to_integer();
        let gcd = scaled
            .iter()
            .map(|(_, c)| c)
            .chain(std::iter::once(&rhs))
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut sign = BigInt::one();
        if self.rel == Relation::Eq && scaled.first().is_some_and(|(_, c)| c.is_negative()) {
            sign = -sign;
        }
        let div = if gcd.is_zero() { BigInt::one() } else { gcd * sign };
        (
            scaled.into_iter().map(|(i, c)| (i, c / &div)).collect(),
            self.rel,
            rhs / &div,
        )
    }

    /// Renders `+2*y1_2 -2*x1 <= 0` with 1-based variable names.
    pub fn to_lp_line(&self, g: &Graph) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&i, c)| {
                let sign = if c.is_negative() { "-" } else { "+" };
                format!("{sign}{}*{}", rational::format(&c.abs()), var_name(g, i))
            })
            .collect();
        format!("{} {} {}", terms.join(" "), self.rel, rational::format(&self.rhs))
    }
}

/// `x<i>` for vertices, `y<i>_<j>` (i < j) for edges, 1-based.
pub fn var_name(g: &Graph, i: usize) -> String {
    if i < g.n() {
        format!("x{}", i + 1)
    } else {
        let (u, v) = g.edge(i - g.n());
        format!("y{}_{}", u + 1, v + 1)
    }
}

/// Rows over `V ⊎ E` for a graph with `n` vertices and `m` edges. Rows that
/// coincide after canonical scaling are stored once (the first tag wins).
#[derive(Clone, Debug)]
pub struct LinearSystem {
    n: usize,
    m: usize,
    rows: Vec<LinearRow>,
    keys: HashSet<RowKey>,
}

impl LinearSystem {
    pub fn new(g: &Graph) -> Self {
        LinearSystem {
            n: g.n(),
            m: g.m(),
            rows: Vec::new(),
            keys: HashSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn rows(&self) -> &[LinearRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds a row unless an equivalent one is present; returns whether it
    /// was added.
    pub fn push(&mut self, row: LinearRow) -> bool {
        debug_assert!(!row.coeffs.is_empty(), "rows need at least one coefficient");
        debug_assert!(row.coeffs.keys().all(|&i| i < self.dim()));
        if self.keys.insert(row.canonical_key()) {
            self.rows.push(row);
            true
        } else {
            false
        }
    }

    pub fn push_nonnegativity(&mut self, g: &Graph) {
        for v in 0..g.n() {
            self.push(LinearRow {
                coeffs: BTreeMap::from([(v, -Rational::one())]),
                rel: Relation::Le,
                rhs: Rational::zero(),
                tag: RowTag::NonNegVertex(v),
            });
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            self.push(LinearRow {
                coeffs: BTreeMap::from([(g.n() + e, -Rational::one())]),
                rel: Relation::Le,
                rhs: Rational::zero(),
                tag: RowTag::NonNegEdge(u, v),
            });
        }
    }

    /// `x(V) - y(E) = 1`.
    pub fn push_hyperplane(&mut self, g: &Graph) {
        let coeffs = (0..g.n())
            .map(|v| (v, Rational::one()))
            .chain((0..g.m()).map(|e| (g.n() + e, -Rational::one())))
            .collect();
        self.push(LinearRow {
            coeffs,
            rel: Relation::Eq,
            rhs: Rational::one(),
            tag: RowTag::Hyperplane,
        });
    }

    pub fn count_tagged(&self, pred: impl Fn(&RowTag) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.tag)).count()
    }

    /// LP text: a comment header, then one `# <tag>` line before each row.
    pub fn to_lp_text(&self, g: &Graph, title: &str) -> String {
        let mut out = format!(
            "# {title}\n# vertices {} edges {} rows {}\n",
            self.n,
            self.m,
            self.rows.len()
        );
        for row in &self.rows {
            out.push_str(&format!("# {}\n{}\n", row.tag, row.to_lp_line(g)));
        }
        out
    }
}

/// Exact evaluation of every row; returns whether all hold and the tags of
/// the violated ones.
pub fn check_membership(sys: &LinearSystem, p: &ExtendedVector) -> Result<(bool, Vec<RowTag>)> {
    if p.x.len() != sys.n || p.y.len() != sys.m {
        return Err(crate::error::Error::DimensionMismatch {
            expected: sys.dim(),
            got: p.len(),
        });
    }
    let violated: Vec<RowTag> = sys
        .rows
        .iter()
        .filter(|r| !r.is_satisfied(p))
        .map(|r| r.tag.clone())
        .collect();
    Ok((violated.is_empty(), violated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn row(coeffs: &[(usize, i64)], rhs: i64) -> LinearRow {
        LinearRow {
            coeffs: coeffs.iter().map(|&(i, c)| (i, int(c))).collect(),
            rel: Relation::Le,
            rhs: int(rhs),
            tag: RowTag::Hyperplane,
        }
    }

    #[test]
    fn dedup_uses_positive_scaling_only() {
        let g = Graph::path(2);
        let mut sys = LinearSystem::new(&g);
        assert!(sys.push(row(&[(0, -2)], 0)));
        assert!(!sys.push(row(&[(0, -1)], 0)));
        // Opposite direction is a different inequality.
        assert!(sys.push(row(&[(0, 1)], 0)));
        assert_eq!(sys.len(), 2);
    }

    #[test]
    fn lp_line_format() {
        let g = Graph::path(2);
        let r = LinearRow {
            coeffs: BTreeMap::from([(0, int(-2)), (2, int(2))]),
            rel: Relation::Le,
            rhs: int(0),
            tag: RowTag::PathClique { w: 0, clique: vec![1] },
        };
        assert_eq!(r.to_lp_line(&g), "-2*x1 +2*y1_2 <= 0");
        assert_eq!(r.tag.to_string(), "PathClique(1,{2})");
    }

    #[test]
    fn membership_dimension_mismatch() {
        let g = Graph::path(2);
        let mut sys = LinearSystem::new(&g);
        sys.push_nonnegativity(&g);
        assert!(check_membership(&sys, &ExtendedVector::from_ints(&[1], &[])).is_err());
        let (ok, bad) = check_membership(&sys, &ExtendedVector::from_ints(&[1, -1], &[0])).unwrap();
        assert!(!ok);
        assert_eq!(bad, vec![RowTag::NonNegVertex(1)]);
    }
}
