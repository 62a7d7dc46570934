//! Growth models and topology metrics for Internet-like AS-level graphs.
//!
//! The crate grows synthetic networks under four attachment models
//! (Barabási–Albert, Interactive Growth, the fixed-exponent "Test*" variant
//! and the Positive-Feedback Preference model) and computes the statistics
//! used to compare them against a measured AS graph: degree distribution and
//! power-law exponent, rich-club connectivity, degree–rank, shortest paths,
//! triangles and quadrangles, nearest-neighbor degree and betweenness.
//!
//! ```
//! use astopo::generators::{generate, GrowthConfig, Model};
//! use astopo::metrics::{analyze, Exec};
//!
//! let cfg = GrowthConfig::defaults(Model::Pfp).with_target_n(500);
//! let run = generate(&cfg).unwrap();
//! let analysis = analyze(&run.graph, None, Exec::Parallel).unwrap();
//! assert_eq!(analysis.report.n, 500);
//! ```

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod reference;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
