//! File formats, JSON reports and the command layer behind the `pursuit`
//! binary.

pub mod commands;
pub mod error;
pub mod graphio;
pub mod report;
pub mod table;
pub mod trace;

pub use commands::{run, Cli};
pub use error::{CliError, CliResult};
