//! Command-line surface over the `satake` library.

pub mod commands;
pub mod config;
pub mod output;

use std::fmt;

/// Failure of a command: bad input (exit 2) or a computation error (exit 1).
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Compute(satake::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(s) => write!(f, "parse error: {s}"),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<satake::Error> for CliError {
    fn from(e: satake::Error) -> Self {
        use satake::Error::*;
        match e {
            Parse(s) => CliError::Parse(s),
            Invalid(_) | InvalidParity(_) | NotDominant(_) | UnsupportedDatum(_) => CliError::Parse(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}
