use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A request exceeded a fixed capacity (table size, sieve limit, ...).
    #[error("{what}: requested {requested}, limit is {limit}")]
    Capacity {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("argument out of supported range: {0}")]
    Range(String),

    #[error("no convergence: {0}")]
    Convergence(String),

    #[error("{path}:{line}: format error: {msg}")]
    Format {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}:{line}: data error: {msg}")]
    Data {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("|zeta'(1/2 + i*{gamma})| = {magnitude:e} is below the simplicity threshold")]
    SimplicityViolation { gamma: f64, magnitude: f64 },

    #[error(
        "cannot classify: inner radius {inner:e} lies within the truncation tail bound {tail:e}"
    )]
    Indeterminate { inner: f64, tail: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
