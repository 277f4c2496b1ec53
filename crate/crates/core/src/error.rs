use thiserror::Error;

/// Errors raised by the algebra and verification layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero scalar
    #[error("division by zero")]
    DivisionByZero,

    /// A denominator vanishes at the requested point
    #[error("pole at {0}")]
    Pole(String),

    /// Specialization value for q is 0, 1 or -1
    #[error("forbidden specialization q = {0}: must avoid 0, 1 and -1")]
    ForbiddenQ(String),

    /// An evaluation parameter was specialized to zero
    #[error("evaluation parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    /// A combinatorial argument is outside its domain
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Canonical polynomial text did not parse
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Exponent arithmetic overflowed
    #[error("exponent overflow")]
    ExponentOverflow,

    /// A linear system that must be solvable was not
    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    /// Two vectors expected to be proportional are not
    #[error("vectors are not proportional: {0}")]
    NotProportional(String),

    /// An extremal vector needed as divisor vanishes identically
    #[error("degenerate extremal vector: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
