//! Command line front end for `braidforce-core`: word grammars, JSON reports
//! and subcommand dispatch.

pub mod app;
pub mod parse;
pub mod report;

pub use app::{run, Outcome};
