//! Command-line surface over `kneser-core`: file formats, reproducible
//! JSON reports, and the `gen` / `compute` / `check` commands.

pub mod cli;
pub mod error;
pub mod fmt_hg;
pub mod report;
pub mod run;
pub mod sample;
