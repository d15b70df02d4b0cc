//! Example registry, batch verification, seeded instance generation, and
//! report types.

pub mod entries;
pub mod gen;
pub mod report;
pub mod rings;

pub use entries::{all_entry_ids, run_all, run_example, RunOptions, UnknownEntry};
pub use report::{Certification, CheckResult, Report, ReportBody, Verdict};
