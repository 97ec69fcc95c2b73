use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("{0} is not a clique")]
    NotAClique(String),

    #[error("invalid perfect elimination order: {0}")]
    InvalidPeo(String),

    /// `hole` is 0-based; the message lists it 1-based.
    #[error("graph is not chordal (hole {})", format_cycle(.hole))]
    NonChordalInput { hole: Vec<usize> },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vertex {0} is not simplicial")]
    NotSimplicial(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("point is not integral")]
    NonIntegralPoint,

    #[error("point is not in the cone; violated rows: {violated:?}")]
    NotInCone { violated: Vec<String> },

    #[error("optimal vertex is not binary: {0}")]
    InternalIntegralityViolation(String),

    #[error("decomposition stuck with positive gap: {0}")]
    StuckWithPositiveGap(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors that can only arise if a proven property failed or the
    /// code has a bug, as opposed to bad input.
    pub fn is_theory_violation(&self) -> bool {
        matches!(
            self,
            Error::InternalIntegralityViolation(_) | Error::StuckWithPositiveGap(_) | Error::Internal(_)
        )
    }
}

/// `1-2-3-4` for the 0-based cycle `[0, 1, 2, 3]`.
pub fn format_cycle(cycle: &[usize]) -> String {
    let vs: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
    vs.join("-")
}

pub type Result<T> = std::result::Result<T, Error>;
