use thiserror::Error;

use crate::lattice::{DivisorClass, Surface};

#[derive(Debug, Error)]
pub enum Error {
    #[error("divisor classes live on different surfaces ({left} vs {right})")]
    SurfaceMismatch { left: Surface, right: Surface },

    #[error("invalid divisor class: {0}")]
    InvalidClass(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is the exceptional curve E, which is barred from the recursion")]
    Excluded(DivisorClass),

    #[error("no degree available for {class} with tangency index {tangency}")]
    MissingDegree { class: DivisorClass, tangency: u32 },

    /// A formula produced a value that violates an exactness guard
    /// (odd sum before halving, non-integral rational, inexact division).
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("conflicting values for {key}: {first} vs {second}")]
    Conflict {
        key: String,
        first: String,
        second: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
