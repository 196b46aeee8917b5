//! Exhaustive and heuristic exploration of the `(b, t)` trade-off for graphs with
//! a fixed number of edges.

pub mod anneal;
pub mod enumerate;
pub mod frontier;
pub mod scan;
pub mod sweep;

pub use anneal::{anneal_min_triangles, anneal_run, anneal_seeds, AnnealOutcome, AnnealParams};
pub use enumerate::{enumerate_fixed_edges, FixedEdgeSpace, EXHAUSTIVE_LIMIT};
pub use frontier::{FrontierRecord, ParetoFront, SearchMode};
pub use scan::{extremal_scan, extremal_scan_with, ScanOptions};
pub use sweep::{alpha_sweep, sweep_csv, SweepConfig, SweepRow};
