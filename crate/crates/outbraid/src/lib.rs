//! Verification suites, JSON reports and presentation files on top of
//! [`outbraid_core`].

pub mod presentation_file;
pub mod report;
pub mod sampling;
pub mod suites;

pub use report::{Check, Counts, Report, Status};
pub use suites::{list_suites, run_suite, Params, SuiteError};
