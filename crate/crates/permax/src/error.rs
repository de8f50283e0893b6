use thiserror::Error;

/// Errors shared across the crate.
///
/// Row and column indices are stored 0-based; messages print them 1-based.
#[derive(Error, Debug)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("expected {expected} entries, got {got}")]
    BadEntryCount { expected: usize, got: usize },

    #[error("row {} has zero sum, row normalization undefined", .0 + 1)]
    ZeroRowSum(usize),

    #[error("column {} has zero sum, column normalization undefined", .0 + 1)]
    ZeroColSum(usize),

    #[error("rank bound k={k} out of range for n={n} (need 1 <= k <= n)")]
    InvalidRank { n: usize, k: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {n} exceeds the supported maximum {max} for {op}")]
    DimensionTooLarge {
        n: usize,
        max: usize,
        op: &'static str,
    },

    #[error("matrix has a negative entry at ({}, {})", .row + 1, .col + 1)]
    NotNonnegative { row: usize, col: usize },

    #[error("operation requires an exact-mode matrix; rationalize float input first")]
    NotExactMode,

    #[error("kind=diagonal requires a permutation (--sigma)")]
    MissingSigma,

    #[error("exact certification failed: {0}")]
    RationalizationFailed(String),

    #[error("non-finite float entry at ({}, {})", .row + 1, .col + 1)]
    NonFinite { row: usize, col: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
