use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("biarity mismatch: ({0}, {1}) vs ({2}, {3})")]
    BiarityMismatch(usize, usize, usize, usize),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("invalid cycle notation: {0}")]
    InvalidCycles(String),

    #[error("{subset:?} is not a subset of 1..{n}")]
    NotASubset { subset: Vec<usize>, n: usize },

    #[error("index {index} out of range 1..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("{0} must be at least 1")]
    ZeroArity(&'static str),

    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}
