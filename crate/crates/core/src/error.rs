use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation-specific precondition (integer orders, parity, ...) was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A series or continued fraction exhausted its term budget.
    #[error("{what} did not converge after {terms} terms (partial value {partial:e})")]
    NonConvergence {
        what: &'static str,
        terms: usize,
        partial: f64,
    },

    /// The log of a single series term left the representable range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Quadrature could not reach the requested absolute tolerance.
    #[error(
        "tolerance {requested:e} not met: best value {best:e} with error estimate {achieved:e}"
    )]
    ToleranceNotMet {
        best: f64,
        achieved: f64,
        requested: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
