//! Randomized theorem suites, the scene language and SVG figures.

pub mod gen;
pub mod report;
pub mod scene;
pub mod suites;

pub use report::{run_suite, Report, RunConfig};
pub use suites::{Backend, Suite, SUITES};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
