//! Input documents and the `towercheck` command-line front end.

pub mod app;
pub mod build;
pub mod document;
pub mod syntax;

pub use app::{run, run_args, Cli};
pub use document::InputDocument;
pub use syntax::{parse, parse_any, parse_json, ParseError};
