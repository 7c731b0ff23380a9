use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure categories, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The caller supplied something malformed or out of domain.
    InvalidInput,
    /// The requested computation exceeds a configured resource limit.
    Resource,
    /// An exactness or consistency check failed. Always a bug.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("{n} is a prime power; no coprime split exists")]
    PrimePowerInput { n: u64 },

    #[error("term budget exceeded: {needed} terms needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("N = {n} is too large for {what} (limit {limit})")]
    TooLarge { n: usize, limit: usize, what: &'static str },

    #[error("coefficient is not a rational integer{}", at.as_ref().map(|e| format!(" at exponents {e:?}")).unwrap_or_default())]
    NotRational { at: Option<Vec<u16>> },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("kernel witness failed: {0}")]
    WitnessFailure(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Domain(_)
            | Error::OrderMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidInput(_)
            | Error::InvalidAction(_)
            | Error::PrimePowerInput { .. } => ErrorClass::InvalidInput,
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } => ErrorClass::Resource,
            Error::NotRational { .. } | Error::InexactDivision(_) | Error::WitnessFailure(_) | Error::Internal(_) => {
                ErrorClass::Internal
            }
        }
    }
}
