//! Library side of the `compbern` command: text formats, table rendering,
//! the discrepancy registry and the verification suite.

pub mod commands;
pub mod error;
pub mod format;
pub mod input;
pub mod published;
pub mod registry;
pub mod sample;
pub mod table;
pub mod verify;

pub use error::{CliError, CliResult};
