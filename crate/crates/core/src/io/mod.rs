//! Text formats: edge lists, id mappings, metric reports and plot series.
//!
//! All writers are byte-stable: the same input always produces the same
//! bytes, with no locale-dependent formatting.

mod edgelist;
mod report;

pub use edgelist::{
    read_edge_list, read_edge_list_mapped, write_edge_list, IdMapping, ReadMode, ReadSummary,
};
pub use report::{read_reports, read_series, write_report, write_series, ReportFormat};
