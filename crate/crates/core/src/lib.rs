//! Books and triangles in graphs just past the Turán threshold.
//!
//! A *book* of size `k` is a set of `k` triangles sharing one edge, so the book
//! size of an edge is its codegree and `b(G)` is the largest codegree over edges.
//! The crate measures `t(G)` and `b(G)`, builds the extremal constructions, runs
//! the stability partition for triangle-free graphs, and searches for graphs
//! with few triangles under a book cap, exhaustively for `n <= 8` and by
//! simulated annealing beyond.
//!
//! Data-parallel loops go through [`Exec`]; the `parallel` feature (default)
//! backs it with rayon.

pub mod analytics;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod par;
pub mod partition;
pub mod search;

pub use analytics::{
    analyze, book_profile, book_size, codegree, max_book, triangle_count, AnalysisReport,
};
pub use constructions::{
    edwards_generalized, rademacher_extremal, theorem1_sharp, Alpha, ConstructionKind,
    ConstructionParams, ConstructionReport, Rounding,
};
pub use error::{Error, Result};
pub use format::{from_edge_list_text, from_graph6, to_edge_list, to_graph6};
pub use graph::{Edge, Graph};
pub use par::Exec;
pub use partition::{
    bipartize_rewire, local_max_cut, stability_partition, Partition, StabilityReport,
};
