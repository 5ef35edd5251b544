use thiserror::Error;

use crate::report::Counterexample;

/// Errors raised by the exact-arithmetic kernel and the identity suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polynomial division leaves a nonzero remainder")]
    NonDivisible,
    #[error("not representable in powers of x(x+1): {0}")]
    NotInV(String),
    #[error("evaluation at a pole: {0}")]
    Pole(String),
    #[error("identity violated: {0}")]
    IdentityViolation(Box<Counterexample>),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
