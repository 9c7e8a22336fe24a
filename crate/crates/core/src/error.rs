use thiserror::Error;

use crate::ring::Ring;

/// Errors raised by the algebra, geometry and configuration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 65536")]
    NotPrime(u64),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),

    #[error("operation requires a prime field, got {0}")]
    NotAField(Ring),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial has a negative exponent in {0}; normalize it first")]
    NegativeExponent(&'static str),

    #[error("polynomial must not contain the variable {0}")]
    UnexpectedVariable(&'static str),

    #[error("matrix [[{0}, {1}], [{2}, {3}]] is not unimodular")]
    NotUnimodular(i64, i64, i64, i64),

    #[error("polynomials share a common factor of positive degree in {0}")]
    CommonFactor(&'static str),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("invalid configuration source: {0}")]
    Source(String),

    #[error("region is too small: {0}")]
    RegionTooSmall(String),

    #[error("row {0} lies above the seed row and cannot be generated")]
    Unreachable(i64),

    #[error("integer overflow while evaluating a configuration")]
    Overflow,

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
