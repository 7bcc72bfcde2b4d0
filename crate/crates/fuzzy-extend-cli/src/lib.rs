//! Library surface of the `fuzzy-extend` binary: configuration, report and
//! command implementations, exposed for integration tests.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
