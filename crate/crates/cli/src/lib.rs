//! Command-line surface for `apolar-core`: configuration, report formats, the
//! golden example suite and the subcommand bodies behind the `apolar` binary.

pub mod commands;
pub mod config;
pub mod paperbook;
pub mod report;

pub use commands::Outcome;
pub use config::{ActionChoice, CliError, OutputFormat, RunConfig};
