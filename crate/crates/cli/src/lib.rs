//! Host-side companion to `monowalk-core`: the character-table cache,
//! parallel table builds and scans, report formats, self-tests and the
//! `monowalk` command line.

pub mod cache;
pub mod cli;
pub mod known;
pub mod parallel;
pub mod report;
pub mod selftest;

pub use monowalk_core;
