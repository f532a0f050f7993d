//! Command-line harness for the verification suites of `ymick-core`.

pub mod config;
pub mod error;
pub mod params;
pub mod report;
pub mod suites;

pub use config::Config;
pub use error::{HarnessError, HarnessResult};
pub use params::{Overrides, SuiteParams};
pub use report::Report;
pub use suites::{run_suite, suite_names};
