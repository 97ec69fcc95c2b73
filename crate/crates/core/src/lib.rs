//! Induced tree and induced path polyhedra of chordal graphs, in exact
//! rational arithmetic.

pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lp;
pub mod polyhedra;
pub mod rational;
pub mod subgraph;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{parse_graph, Graph};
pub use rational::Rational;
pub use subgraph::{ExtendedVector, SubgraphKind};
