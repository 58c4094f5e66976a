//! Command-line front end for `increg`: argument parsing, output rendering
//! and the bundled verification suites. The binary is a thin wrapper
//! around [`run`].

pub mod args;
pub mod commands;
pub mod error;
pub mod suite;
pub mod table;

pub use args::{Cli, Format, Suite, Verb};
pub use commands::{load_spec, parse_spec, run, Options};
pub use error::CliError;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
