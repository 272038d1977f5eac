//! Command-line front-end for `monideal`: parses ideals, runs the
//! computations and prints text, JSON lines or batch CSV.

pub mod commands;
pub mod error;
pub mod parse;
pub mod report;

pub use commands::run;
pub use error::CliError;
pub use parse::{format_ideal, parse_ideal, ParsedIdeal};
