//! Serialization: edge lists, DOT, JSON reports and CSV sweeps.

mod dot;
mod edgelist;
mod report;
mod sweep;

pub use dot::write_dot;
pub use edgelist::{read_edgelist, write_edgelist};
pub use report::{report_json, write_report};
pub use sweep::{format_significant, run_sweep, SweepMetric, SweepSpec};
