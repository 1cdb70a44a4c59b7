//! File formats, the expression language and the command-line front end
//! over [`idemdim_core`].

pub mod cli;
pub mod corpus;
pub mod parse;
pub mod report;
pub mod ring_spec;

pub use idemdim_core as core;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("mode error: {0}")]
    Mode(String),
    #[error("base error: {0}")]
    Base(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("table: {0}")]
    Table(String),
    #[error("io: {0}")]
    Io(String),
    #[error("{0}")]
    Core(idemdim_core::Error),
}

impl From<idemdim_core::Error> for CliError {
    fn from(e: idemdim_core::Error) -> Self {
        match e {
            idemdim_core::Error::NegativeExponentAtZero { .. } | idemdim_core::Error::BadExponent(_) => {
                CliError::Mode(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}
