use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter that must be prime (or a prime power, where stated) is not.
    #[error("{0} is not prime")]
    NonPrime(u64),

    /// Building the requested object would exceed the configured element bound.
    #[error("{what} would have {needed} elements, exceeding the bound of {bound}")]
    SizeExceeded {
        what: String,
        needed: u128,
        bound: u64,
    },

    /// A parameter is out of the documented domain (wrong parity, zero, too large…).
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Two vectors (or a vector and a structure) disagree on length.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Division by zero in a field or modular inverse of a non-unit.
    #[error("division by zero")]
    DivisionByZero,

    /// An internal invariant failed; indicates a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
