use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("qubit count {0} outside 1..=32")]
    QubitCount(usize),
    #[error("invalid Pauli character {0:?}")]
    PauliChar(char),
    #[error("generators do not commute: rows {0} and {1}")]
    NonCommuting(usize, usize),
    #[error("generators are linearly dependent")]
    Dependent,
    #[error("unknown code {0:?}")]
    UnknownCode(String),
    #[error("code file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("code file: expected {expected} generator lines, found {found}")]
    LineCount { expected: usize, found: usize },
    #[error("invalid code: {0}")]
    Invalid(String),
    #[error("channel type incompatible: {0}")]
    ChannelType(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
