//! Command-line front end for `packsyz-core`: configuration, a persistent
//! homology cache, JSON documents and the verification suites.

pub mod cache;
pub mod cli;
pub mod config;
pub mod error;
pub mod json;
pub mod verify;

pub use cache::{DiskCache, Engine};
pub use config::{Config, Format};
pub use error::{CliError, CliResult};
