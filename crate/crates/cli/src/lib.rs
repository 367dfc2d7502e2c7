//! Command-line front end: JSON documents in, JSON reports out.

pub mod commands;
pub mod document;
pub mod error;
pub mod examples;
pub mod report;
pub mod selftest;

pub use commands::{run, Outcome};
pub use document::Document;
pub use error::{CliError, CliResult};
pub use report::Report;
