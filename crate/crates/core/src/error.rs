//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape or size constraints violated (non-square input, count out of range, ...).
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Requested matrix dimensions exceed the configured cap.
    #[error("matrix dimension {requested} exceeds cap {cap}")]
    DimensionCap { requested: usize, cap: usize },

    /// Iterative decomposition did not converge within the sweep cap.
    #[error("no convergence after {sweeps} sweeps (residual {residual:e})")]
    Convergence { sweeps: u32, residual: f64 },

    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient stream does not reach the index an operation requires.
    #[error("coefficient stream too short: need indices through {needed}, have through {have}")]
    StreamTooShort { needed: usize, have: usize },

    /// Malformed input (wrong sample count, bad spec, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Numeric failure in an iterative scheme other than a decomposition.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The symbol is rational with too few poles for the requested experiment.
    #[error("degenerate case: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
