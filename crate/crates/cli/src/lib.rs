//! Configuration, expression language and commands behind the `qdim` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod expr;
pub mod output;

pub use commands::{execute, parse_exponents, Command, Request};
pub use config::GroupConfig;
pub use error::CliError;
pub use expr::{parse_rep, ExprError, RepExpr};
pub use output::{Format, Report};
