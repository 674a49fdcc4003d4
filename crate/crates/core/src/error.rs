use std::io;

use thiserror::Error;

use crate::planar_map::Violation;

/// Errors produced by the generator and its supporting operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a dual fullerene: {0}")]
    NotFullerene(#[from] Violation),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("malformed planar_code stream: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
