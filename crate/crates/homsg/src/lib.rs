//! Std companion to `homsg-core`: the expression language, JSON structure
//! files, and the `homsg` command-line tool.

pub mod cli;
pub mod expr;
pub mod structure_file;

pub use cli::run;
