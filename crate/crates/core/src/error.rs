use crate::alphabet::AlphabetKind;

/// Errors reported by the solver, vector, and reduction operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch {
        expected: AlphabetKind,
        found: AlphabetKind,
    },

    #[error("byte {byte:#04x} is not a symbol of the {kind} alphabet")]
    InvalidSymbol { byte: u8, kind: AlphabetKind },

    #[error("empty pattern: episode matching is undefined for an empty pattern")]
    EmptyPattern,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("bit vector must have dimension of at least 1")]
    EmptyVector,

    #[error("vector set must contain at least one vector")]
    EmptySet,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Raised when a construction invariant that is supposed to hold by
    /// design is observed to be violated, e.g. a reduction pattern that is
    /// not a subsequence of its source string.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
