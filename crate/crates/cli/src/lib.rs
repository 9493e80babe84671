//! Command-line front end: claim selection, run configuration, concurrent
//! execution and deterministic JSON reports.

pub mod claims;
pub mod config;
pub mod report;
pub mod runner;

pub use claims::Claim;
pub use config::{Cli, Command, ConfigError, RunConfig, VerifyArgs};
pub use report::{emit_report, EntryStatus, VerificationReport};
pub use runner::{human_summary, run};
