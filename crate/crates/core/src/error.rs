use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder where the formulas
    /// guarantee exactness, so this always indicates a logic error upstream.
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    OutOfBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("partition {partition} has more than {max_rows} rows")]
    TooManyRows { partition: String, max_rows: usize },

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    InvalidSkewShape { outer: String, inner: String },

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarMismatch { expected: usize, found: usize },

    #[error("degree mismatch: |a| + |b| = {got}, box has {expected} cells")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("enumeration budget exceeded: {what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: u64,
        budget: u64,
    },

    #[error("unsupported field size q = {q} (supported: 2, 3, 4, 5)")]
    UnsupportedField { q: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
