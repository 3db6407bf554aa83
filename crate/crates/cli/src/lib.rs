//! Command-line front end for the shade enumerator: output records, the
//! renderers for each output format, and the subcommand drivers used by the
//! `shadows` binary.

pub mod commands;
pub mod record;
pub mod render;

use thiserror::Error;

pub use record::{OutputRecord, VerdictRecord};
pub use render::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Shadow(#[from] shadows::ShadowError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("record {0}: witness failed verification")]
    InvalidWitness(usize),

    #[error("enumerator and brute-force oracle disagree at n = {0}")]
    OracleMismatch(usize),
}

pub type Result<T> = std::result::Result<T, CliError>;
