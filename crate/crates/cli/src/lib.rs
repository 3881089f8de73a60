//! Verification suites, reports and expression evaluation for the `qeuclid`
//! command-line tool.

pub mod config;
pub mod eval;
pub mod report;
pub mod suites;
