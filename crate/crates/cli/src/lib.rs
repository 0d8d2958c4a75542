//! Library side of the `algshift` command-line tool.

pub mod commands;
pub mod config;
pub mod document;
pub mod random;
pub mod report;

pub use commands::{cmd_betti, cmd_shift, cmd_verify, exit, CliError, VerifyOutcome, VerifySource};
pub use config::RunConfig;
pub use document::ComplexDocument;
pub use random::random_pair;
