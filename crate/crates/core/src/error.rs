use thiserror::Error;

/// Errors surfaced by the engine. Geometric findings (non-integrable
/// structures, torsion types, ...) are values, not errors; these are
/// reserved for contract violations and malformed input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero in Q(sqrt 3)")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degree/arity mismatch: {0}")]
    DegreeMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("Jacobi identity fails; certificate has {0} nonzero coefficients")]
    NotJacobi(usize),

    #[error("structure is not nearly integrable; violated functional: {0}")]
    NotNearlyIntegrable(String),

    #[error("subspaces are not complementary")]
    NotComplementary,

    #[error("({0}) is not a symmetric pair")]
    NotSymmetricPair(String),

    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("no catalog entry matches {0:?}")]
    UnknownEntry(String),

    #[error("internal convention corruption: {0}")]
    Internal(String),

    #[error("search space too large: {0} candidates exceeds cap {1}")]
    SearchTooLarge(u128, u128),
}

pub type Result<T> = std::result::Result<T, Error>;
