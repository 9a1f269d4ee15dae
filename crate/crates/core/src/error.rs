use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates a documented precondition. `name` is the
    /// parameter (or constraint) that failed.
    #[error("invalid {name}: {reason}")]
    Domain { name: &'static str, reason: String },

    #[error("series did not converge to {abs_tol:e} within {terms} terms")]
    NonConvergence { terms: usize, abs_tol: f64 },

    #[error("alternating series loses precision: largest term {max_term:e} exceeds tolerance budget")]
    Cancellation { max_term: f64 },

    #[error("inverse subordinator needs more than {cap} operational steps")]
    StepCap { cap: usize },

    #[error("covariance factorization failed for {size} distinct times")]
    Factorization { size: usize },

    #[error("degenerate problem: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        name,
        reason: reason.into(),
    }
}

/// Fails with a domain error unless `cond` holds.
pub(crate) fn ensure(cond: bool, name: &'static str, reason: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(domain(name, reason()))
    }
}
