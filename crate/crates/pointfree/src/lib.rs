//! File formats, reports, the frame corpus and the check suites behind the
//! `pointfree` command-line tool.

pub mod corpus;
pub mod dot;
pub mod format;
pub mod report;
pub mod suites;
