//! Library half of the `spbw` command-line tool.

pub mod app;
pub mod document;
pub mod error;
pub mod expr;
pub mod report;

pub use app::{execute, Cli, Command};
pub use document::PresentationDocument;
pub use error::CliError;
