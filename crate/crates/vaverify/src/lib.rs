//! Verification suites over the exact vertex algebra engine: a catalog of named
//! checks, request validation, deterministic JSON reports and the command line.
//!
//! The module crates are re-exported for the examples.

pub mod catalog;
pub mod cli;
pub mod json;
pub mod report;
pub mod request;
pub mod run;

pub use catalog::{list_suites, suite, ParamKind, ParamSpec, Suite};
pub use report::{Check, Report, Verdict};
pub use request::{parse_fraction, CheckRequest, ParamValue, RawRequest, UsageError};
pub use run::run;

pub use characters;
pub use orbifold_invariants;
pub use truncation_curves;
pub use va_core;
pub use va_exact;

/// Validate and run a suite given as name and `(parameter, value)` pairs.
pub fn run_suite(suite: &str, params: &[(&str, &str)]) -> Result<Report, UsageError> {
    let raw = RawRequest { suite: suite.into(), params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), ..Default::default() };
    Ok(run(&raw.validate()?))
}
