//! Shared error type for all toolkit operations.

use thiserror::Error;

/// Errors surfaced by the evaluation, root-finding and sieve layers.
///
/// Everything that only depends on exact integer arithmetic is total and
/// does not appear here; `InternalInconsistency` is the one exception and
/// signals a broken invariant (a division that must be exact was not),
/// never an expected run-time condition.
#[derive(Debug, Error)]
pub enum Error {
    /// Requested digits exceed the configured working-precision ceiling.
    #[error("requested {requested} digits exceeds the working-precision limit of {limit}")]
    PrecisionExhausted { requested: u32, limit: u32 },

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error in {op}: {msg}")]
    DomainError { op: &'static str, msg: String },

    /// Iterative inversion did not reach the requested tolerance.
    #[error("no convergence in {op} after {iterations} iterations")]
    NoConvergence { op: &'static str, iterations: usize },

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature failed to reach relative tolerance {tolerance:e}")]
    QuadratureFailure { tolerance: f64 },

    /// Request beyond the configured sieve limit.
    #[error("{op}: argument {value} exceeds the configured limit {limit}")]
    OutOfRange {
        op: &'static str,
        value: u64,
        limit: u64,
    },

    /// An exact-division step failed; indicates an implementation bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Hard ceiling on requested decimal digits; far beyond anything the
/// expansions here need, but it turns typos into clean errors.
pub const MAX_DIGITS: u32 = 100_000;

pub(crate) fn check_digits(digits: u32) -> Result<()> {
    if digits > MAX_DIGITS {
        return Err(Error::PrecisionExhausted {
            requested: digits,
            limit: MAX_DIGITS,
        });
    }
    Ok(())
}
