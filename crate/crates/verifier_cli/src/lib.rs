//! Batch driver for the duality checks: parses a parameter grid, fans the
//! checks out over a thread pool and renders an order-stable report.

pub mod config;
pub mod plan;
pub mod report;
mod run;

pub use config::{Args, Config, ConfigError, Format};
pub use plan::{Plan, SubjectKey, Task, STRUCTURAL_CASES};
pub use report::{Report, Row, Summary};
pub use run::run;
