//! Library side of the `ncquo` command-line tool: the JSON document format,
//! ring codecs and the command implementations, kept out of `main.rs` so the
//! integration tests can drive them directly.

pub mod codec;
pub mod commands;
pub mod document;
mod error;

pub use error::{CliError, CliResult};
