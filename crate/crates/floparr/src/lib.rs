//! File formats, rendering, caching and the command-line driver for
//! `floparr-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod svg;
pub mod workspace;

pub use cli::{run, Cli, Outcome};
pub use error::CliError;
pub use workspace::Workspace;
