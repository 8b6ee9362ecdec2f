//! Parallel drivers, file formats and the command line for `runoff-core`.

pub mod cli;
pub mod config;
pub mod tables;
mod error;
pub mod numfmt;
pub mod parallel;
pub mod report;
pub mod svg;

pub use error::CliError;
