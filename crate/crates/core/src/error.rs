//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tableau does not match the expected shape")]
    ShapeMismatch,
    #[error("tableau is not constant along diagonals")]
    NotDiagonal,
    #[error("missing diagonal value a_{0}")]
    MissingDiagonal(i64),
    #[error("arguments outside the convergence region (non-corner entries must be >= 1, corner entries > 1)")]
    RegionViolation,
    #[error("entries must be positive integers")]
    NonPositiveEntry,
    #[error("ribbon spec is not in canonical form")]
    NonCanonicalRibbon,
    #[error("shape is not a ribbon")]
    NotRibbon,
    #[error("resource cap exceeded: needed {needed}, cap {cap}")]
    ResourceCap { needed: u128, cap: u128 },
    #[error("tolerance {tol} not reached within resource cap (best difference {best})")]
    ToleranceUnreachable { tol: f64, best: f64 },
    #[error("pi powers differ: {0} vs {1}")]
    PiPowerMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
