//! Query-file ingestion and report emission.

mod query;
mod report;

pub use query::{parse_query_file, Diagnostic, Diagnostics, Format, Options, QueryFile, VERSION};
pub use report::{emit_report, parse_report, Outcome, Report};
