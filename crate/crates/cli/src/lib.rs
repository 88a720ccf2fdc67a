//! The `cubetwist` command line: argument grammar, the central-value cache,
//! output records and their readers.

pub mod args;
pub mod cache;
mod commands;
pub mod format;
pub mod records;

pub use args::{Cli, Format};
pub use commands::run;

/// Why a command failed. Usage errors exit with status 2, domain errors
/// with status 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e:#}"),
        }
    }
}

impl<E: Into<anyhow::Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(e.into())
    }
}
