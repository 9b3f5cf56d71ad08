use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    InvalidInput(String),
    /// A size cap of an exhaustive routine was exceeded before any work began.
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// A search ran out of its node budget; its answer is not authoritative.
    BudgetExhausted { what: &'static str, limit: u64 },
    /// A validation guard caught an inconsistency. Always a bug.
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for cap and budget failures.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::BudgetExhausted { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "cap exceeded: {what} has size {size}, cap is {cap}")
            }
            Error::BudgetExhausted { what, limit } => {
                write!(f, "budget exhausted: {what} used all {limit} nodes")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
