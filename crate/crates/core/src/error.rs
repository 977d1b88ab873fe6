use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("fusion coefficient N[{a}][{b}] -> {c} is not a rational integer")]
    NonIntegralFusion { a: usize, b: usize, c: usize },

    #[error("fusion coefficient N[{a}][{b}] -> {c} is negative ({value})")]
    NegativeFusion { a: usize, b: usize, c: usize, value: i64 },

    #[error("computation exceeded its budget of {budget} steps")]
    ResourceLimit { budget: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(msg.into()))
}
