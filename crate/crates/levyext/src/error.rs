//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A model or configuration failed a validity check.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature failure in {what}: {detail}")]
    Quadrature { what: String, detail: String },

    /// An iterative scheme (series, continued fraction) did not converge.
    #[error("convergence failure: {0}")]
    Convergence(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn quadrature(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Quadrature {
            what: what.into(),
            detail: detail.into(),
        }
    }

    /// True for errors that indicate a numerical failure rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Quadrature { .. } | Error::Convergence(_))
    }
}
