use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point lies outside the open disk or ball.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numeric parameter is out of its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The inputs have incompatible kinds (disk function on a ball point, ...).
    #[error("type error: {0}")]
    Type(String),
}

pub type Result<T> = std::result::Result<T, Error>;
