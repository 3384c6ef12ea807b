//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by the library.
///
/// Exact algebra either succeeds or fails loudly; there are no silent
/// approximations.  `CapExceeded` is the only "resource" error: it is raised
/// when an explicitly requested computation is larger than the configured
/// work cap, and callers may retry with a smaller request.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("division is not exact")]
    InexactDivision,

    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),

    #[error("evaluation requires invertible coordinates, found zero at position {0}")]
    ZeroEvaluation(usize),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("relator {index} does not map to the identity under the representation")]
    NotARepresentation { index: usize },

    #[error("the polynomial is identically zero, so its Newton polytope is undefined")]
    ZeroPolynomial,

    #[error("membership test requires a nonzero point")]
    ZeroVector,

    #[error("work cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
