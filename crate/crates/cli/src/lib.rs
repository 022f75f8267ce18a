//! Command-line front end: polytope files, element expressions, reports.

mod cli;
pub mod expr;
pub mod file;
pub mod report;

pub use cli::{run, Format};
