//! Command-line front end for the `hnla-core` laboratory.
//!
//! The binary is a thin wrapper around [`run`].

// `!(x > 0.0)` style checks are intended to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod output;

pub use args::{Cli, Command, Format};
pub use commands::{epr, fig1, nosignal, transform, Fig1Row, TransformReport, EprReport};
pub use output::{format_sig, write_atomic};

use hnla_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_PHYSICS: u8 = 2;

/// What a successful invocation produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub exit_code: u8,
    /// Printed to stderr when set, e.g. the bound that failed.
    pub diagnostic: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Config(String),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::InvalidArgument(_)) | CliError::Config(_) | CliError::Io(_) => EXIT_INVALID,
            CliError::Core(_) => EXIT_PHYSICS,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Runs one subcommand and writes its output to `--output` or stdout.
pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let outcome = render(cli)?;
    match &cli.output {
        Some(path) => write_atomic(path, &outcome.text)?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome)
}

/// Like [`run`] but only returns the rendered text.
pub fn render(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Fig1(a) => fig1(a, cli.format.unwrap_or(Format::Csv)),
        Command::Transform(a) => transform(a, cli.format.unwrap_or(Format::Json)),
        Command::Nosignal(a) => nosignal(a, cli.format.unwrap_or(Format::Json)),
        Command::Epr(a) => epr(a, cli.format.unwrap_or(Format::Json)),
    }
}
