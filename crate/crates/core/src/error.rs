use thiserror::Error;

/// Failures of ring and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("leading coefficient does not commute with the divisor's coefficients")]
    NotCentral,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("operation is only defined when sigma is the identity")]
    UnsupportedSigma,
    #[error("left shift by a negative amount ({0}) is not a skew polynomial")]
    NegativeLeftShift(i64),
    #[error("no convergence after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
