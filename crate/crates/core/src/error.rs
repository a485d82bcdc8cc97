use thiserror::Error;

/// Errors raised by the matrix, analysis and pattern operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrices and vectors need at least one row and one column")]
    Empty,

    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, got: usize },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("column sums are not all equal")]
    NotTyped,

    #[error("matrix is not of type 1 (column sums: {found})")]
    NotType1 { found: String },

    #[error("type must be positive, found {found}")]
    NonPositiveType { found: String },

    #[error("negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("no unique fixed vector with entry sum 1 (eigenvalue 1 is not simple)")]
    NonUniqueFixedVector,

    #[error("computed fixed vector fails M*E = E (residual {residual})")]
    FixedVectorResidual { residual: String },

    #[error("vector entries must sum to 1, found {found}")]
    VsumNotOne { found: String },

    #[error("{what} must be positive")]
    NonPositiveInteger { what: &'static str },

    #[error("variation at the contraction power must be < 1, found {found}")]
    NotContracting { found: String },

    #[error("need at least 2 columns, found {found}")]
    TooFewColumns { found: usize },

    #[error("need at least 2 rows, found {found}")]
    TooFewRows { found: usize },

    #[error("matrix has zero variation")]
    ZeroVariation,

    #[error("vectors of different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
