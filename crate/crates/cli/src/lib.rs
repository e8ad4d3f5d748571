//! File formats, diagram export and the `pomlab` command line.

pub mod cli;
pub mod doc;
pub mod dot;
pub mod reproduce;

pub use cli::{run, EXIT_FAILS, EXIT_HOLDS, EXIT_USAGE};
