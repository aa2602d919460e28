//! Instance files and commands of the `solvcohom` tool.

pub mod commands;
pub mod error;
pub mod instance;
mod table;

pub use commands::{run, Command, Options, Outcome};
pub use error::CliError;
pub use instance::{Instance, InstanceFile, Kind};
