use thiserror::Error;

/// Errors produced by the numerics library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum PfsError {
    #[error("invalid precision settings: {0}")]
    InvalidPrecision(String),

    #[error("division by exact zero")]
    DivisionByZero,

    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error("duplicate node at index {first} and {second}")]
    DuplicateNode { first: usize, second: usize },

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("could not parse `{input}` as a number")]
    Parse { input: String },
}

pub type Result<T> = std::result::Result<T, PfsError>;
