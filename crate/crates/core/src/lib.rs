//! Deterministic hierarchical small-world scale-free graphs H(n,k).
//!
//! H(n,1) is the complete graph K_n; H(n,k) joins n copies of H(n,k−1) by
//! attaching the global root to every vertex without a zero digit and by a
//! clique on the roots of the nonzero copies. Vertices are k-digit base-n
//! labels.
//!
//! The crate builds the graph (recursively or from pairwise rules), evaluates
//! exact closed forms for its size, degree and clustering distributions,
//! triangles and transitivity, measures the same quantities by brute force,
//! and answers distance queries from labels alone in O(k).
//!
//! Counting code is generic over the exact integer type (see
//! [`scalar::ExactInt`]) and regressions over the float type
//! ([`scalar::Real`]); the aliases below fix the common choices.

pub mod adjacency;
pub mod analytic;
pub mod classify;
pub mod empirical;
pub mod error;
pub mod fit;
pub mod graph;
pub mod io;
pub mod label;
pub mod oracle;
pub mod params;
pub mod scalar;
pub mod verify;

pub use adjacency::{is_adjacent, neighbors, AdjacencyRule};
pub use classify::{classify, subgraph_vertices, VertexClass};
pub use empirical::EmpiricalReport;
pub use error::{HkError, Result};
pub use graph::{enumerate_edges, from_rules, GraphView, VertexId};
pub use label::Label;
pub use params::{Params, DEFAULT_CAP};

/// Unbounded exact integer.
pub type Count = num_bigint::BigInt;
/// Unbounded exact rational.
pub type Fraction = num_rational::BigRational;

pub type ClassStat = analytic::ClassStat<Count>;
pub type AnalyticReport = analytic::AnalyticReport<Count>;

/// Fixed-width variants; overflow is reported, never wrapped.
pub type ClassStat128 = analytic::ClassStat<i128>;
pub type AnalyticReport128 = analytic::AnalyticReport<i128>;
pub type Fraction128 = num_rational::Ratio<i128>;

/// Analytic report with unbounded integers.
pub fn analytic_report(params: &Params) -> Result<AnalyticReport> {
    analytic::analytic_report::<Count>(params)
}
