use thiserror::Error;

/// Errors produced by the arithmetic and verification layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    NonPositive,

    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact polynomial division: nonzero remainder")]
    InexactDivision,

    #[error("extended gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("mismatched ambient cyclic orders: {0} and {1}")]
    OrderMismatch(u64, u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed cache record: {0}")]
    CacheFormat(String),

    #[error("cached entry for n={n} violates its invariants: {reason}")]
    CacheInvariant { n: u64, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
