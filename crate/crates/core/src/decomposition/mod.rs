//! Constructive decompositions of integral cone points into induced tree or
//! induced path incidence vectors, plus an exhaustive oracle.

mod buckets;
mod combination;
mod driver;
mod oracle;
mod splice;

pub use buckets::{classify_buckets, Bucket, Buckets, DecompositionState};
pub use combination::{expected_total, verify_combination, Combination};
pub use driver::{decompose, decompose_with, DecomposeOptions, Decomposition, MoveCounts};
pub use oracle::{oracle_decompose, oracle_decompose_bounded, OracleOutcome};
pub use splice::{splice_paths, SpliceOutcome};
