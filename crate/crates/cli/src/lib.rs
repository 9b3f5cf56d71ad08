//! Command-line companion of `cobip-core`: text formats, the exhaustive
//! equivalence suites and the decision benchmark.

pub mod bench;
pub mod error;
pub mod formats;
pub mod sweep;

pub use error::CliError;
