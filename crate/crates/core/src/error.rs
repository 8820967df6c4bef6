use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("unsupported algebra: {0}")]
    Unsupported(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
