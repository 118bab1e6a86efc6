//! Error taxonomy shared by every layer of the crate.
//!
//! Three kinds of failure are distinguished because the CLI maps them to
//! different exit codes: malformed input, a violated precondition of an
//! operation, and an algebra that fails structural validation.  Mathematical
//! check failures (a reciprocity table that does not match, a purity
//! violation) are *data*, not errors; they are carried inside reports.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input: unknown vertex labels, dimension
    /// mismatches, modules over different algebras, unparsable rationals.
    #[error("input error: {0}")]
    Input(String),

    /// An algebra specification failed validation (dangling arrows, an
    /// unbounded cycle, relations that do not share endpoints, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// A documented precondition of an operation does not hold (a stratum
    /// is not internally extension-free, an open set is not restrictable,
    /// an ordering is missing).
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
