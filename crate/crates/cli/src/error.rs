//! CLI error split: configuration problems exit 1, runtime failures exit 2.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, missing or unreadable files, unparseable inputs.
    Config(String),
    /// The pipeline itself failed on valid inputs.
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }

    pub fn runtime(err: impl fmt::Display) -> Self {
        CliError::Runtime(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
