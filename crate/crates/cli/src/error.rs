use propwheel_oracle::OracleError;
use thiserror::Error;

/// Failures of parsing and evaluating morphism expressions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arity error in `{subterm}`: {message}")]
    Arity { subterm: String, message: String },

    #[error(transparent)]
    Engine(#[from] propwheel::Error),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),

    #[error(transparent)]
    Engine(#[from] propwheel::Error),

    #[error(transparent)]
    Oracle(#[from] OracleError),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("resource guard: {0}")]
    Guard(String),

    #[error("{0}")]
    Usage(String),
}
