use std::path::PathBuf;

use qdim_core::ErrorKind;
use thiserror::Error;

use crate::expr::ExprError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qdim_core::Error),

    #[error("config: {0}")]
    Config(String),

    #[error("expression: {0}")]
    Expr(#[from] ExprError),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", .path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Validation => EXIT_VALIDATION,
                ErrorKind::ResourceGuard => EXIT_RESOURCE,
                ErrorKind::Internal => EXIT_INTERNAL,
            },
            _ => EXIT_VALIDATION,
        }
    }
}
