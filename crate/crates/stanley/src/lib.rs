//! Command-line companion to `stanley-core`: a text syntax for ideals,
//! decomposition files, JSON output, a threaded partition search and seeded
//! property experiments.

pub mod cli;
pub mod experiment;
pub mod format;
pub mod parallel;
pub mod parse;
