use thiserror::Error;

use crate::word::Word;

/// Domain errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The exponent pair has a common divisor, so no primitive element has it.
    #[error("gcd({x},{y})={gcd}")]
    NonCoprime { x: i64, y: i64, gcd: i64 },

    /// A precondition on the integer input of the descent was violated.
    #[error("{0}")]
    OutOfRange(String),

    #[error("{0} is not primitive")]
    NotPrimitive(Word),

    #[error("{0}")]
    NotApplicable(String),

    #[error("{r} is not in the normal closure of {p}")]
    NotInClosure { r: Word, p: Word },

    #[error("{0}")]
    PreconditionViolated(String),

    /// Exhaustive oracles refuse inputs beyond their size guard.
    #[error("{0}")]
    ResourceGuard(String),

    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonCoprime { .. } => "non-coprime",
            Error::OutOfRange(_) => "out-of-range",
            Error::NotPrimitive(_) => "not-primitive",
            Error::NotApplicable(_) => "not-applicable",
            Error::NotInClosure { .. } => "not-in-closure",
            Error::PreconditionViolated(_) => "precondition",
            Error::ResourceGuard(_) => "resource-guard",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
