//! Expression language, command implementations and check suites of the
//! `propwheel` command-line tool.

pub mod commands;
pub mod error;
pub mod eval;
pub mod expr;
pub mod parser;
pub mod printer;
pub mod random;
pub mod suites;

pub use error::{CliError, ExprError};
pub use eval::{eval, eval_text};
pub use expr::MorphismExpr;
pub use parser::parse;
pub use printer::{print_expr, render_element};
