//! Command-line front end, file formats and IO for `liemech-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod formats;

pub use cli::{dispatch, run};
pub use error::{CliError, CliResult};
