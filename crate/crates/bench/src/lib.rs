//! Experiment runner: named suites of numerical checks over `bergman-core`,
//! each producing an [`ExperimentReport`] with pass/fail records, a config
//! echo and CSV plot series.

pub mod config;
pub mod error;
pub mod report;
pub mod suites;

pub use config::{RunConfig, Suite};
pub use error::{BenchError, Result};
pub use report::{Check, ExperimentReport, Relation, Series};
pub use suites::run_suite;
