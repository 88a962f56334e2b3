use thiserror::Error;

use crate::hypercube::Host;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {n} outside supported range {min}..={max}")]
    Dimension { n: u32, min: u32, max: u32 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid numbering: {0}")]
    InvalidNumbering(String),

    #[error("expected a {expected} numbering, got {found}")]
    HostMismatch { expected: Host, found: Host },

    #[error("numbering covers {numbering} vertices but graph has {graph}")]
    SizeMismatch { graph: usize, numbering: usize },

    #[error("routing has {routing} entries but graph has {edges} edges")]
    RoutingMismatch { edges: usize, routing: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(n: u32, min: u32, max: u32) -> Result<()> {
    if n < min || n > max {
        return Err(Error::Dimension { n, min, max });
    }
    Ok(())
}
