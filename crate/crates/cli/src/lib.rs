//! Command layer for the `primaltop` binary.

pub mod args;
pub mod commands;
pub mod report;

pub use commands::{run, Failure, Outcome};
pub use report::{Report, SCHEMA_VERSION};
