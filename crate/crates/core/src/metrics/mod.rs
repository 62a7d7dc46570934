//! Topological statistics of an immutable graph.
//!
//! Every function takes `&Graph` and allocates its own scratch space, so any
//! number of them may run concurrently on the same graph. The all-pairs
//! sweeps accept an [`Exec`] mode; serial and parallel runs are bit-identical.

mod cycles;
mod degree;
mod exec;
mod knn;
mod paths;
mod report;
mod richclub;
mod series;

pub use cycles::{
    clustering_coefficient, quadrangle_coefficients, quadrangle_coefficients_with,
    triangle_coefficients, triangle_coefficients_with,
};
pub use degree::{
    degree_distribution, degree_rank, fit_powerlaw_gamma, rank_exponent, rank_order, FitWindow,
    FIT_TAIL_MIN_NODES,
};
pub use exec::Exec;
pub use knn::{knn, Knn};
pub use paths::{
    betweenness, betweenness_with, paths_and_betweenness, shortest_path_stats,
    shortest_path_stats_with, Betweenness, PathStats,
};
pub use report::{analyze, full_report, Analysis, MetricsReport, RICH_CLUB_FRACTION};
pub use richclub::{club_size, phi_at, rich_club};
pub use series::{ccdf_of, per_degree_mean, DistributionSeries, NodeMetricVector, SeriesKind};
