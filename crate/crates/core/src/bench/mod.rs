//! Benchmark harness: the three test problems, published comparison values,
//! error metrics and report files.

pub mod cases;
pub mod published;
pub mod report;
pub mod run;

pub use cases::{CaseDefinition, CaseId};
pub use report::{error_metrics, ErrorReport, PropertyRow};
pub use run::{run_case, write_outputs, ReportFormat, RunOptions, RunOutput};
