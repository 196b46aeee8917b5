//! Two-sided vertex partitions: the max-degree stability partition of a
//! triangle-free graph, the rewiring that turns it into a bipartite graph, and a
//! local-search maximizer of the number of cross edges.

use serde::{Deserialize, Serialize};

use crate::analytics::find_triangle;
use crate::error::{Error, Result};
use crate::graph::{and_count, ones, Graph};

/// A 2-colouring of the vertices (`false` = X, `true` = Y) with cached edge counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub side: Vec<bool>,
    pub cross_edges: usize,
    pub internal_edges: usize,
}

impl Partition {
    pub fn new(g: &Graph, side: Vec<bool>) -> Result<Partition> {
        if side.len() != g.n() {
            return Err(Error::param(format!(
                "partition covers {} vertices, graph has {}",
                side.len(),
                g.n()
            )));
        }
        let cross_edges = g.edges().filter(|e| side[e.u] != side[e.v]).count();
        Ok(Partition {
            side,
            cross_edges,
            internal_edges: g.m() - cross_edges,
        })
    }

    /// Everything in X.
    pub fn all_x(g: &Graph) -> Partition {
        Partition {
            side: vec![false; g.n()],
            cross_edges: 0,
            internal_edges: g.m(),
        }
    }

    /// Edges with both endpoints on the side `y`.
    pub fn internal_on(&self, g: &Graph, y: bool) -> usize {
        g.edges()
            .filter(|e| self.side[e.u] == y && self.side[e.v] == y)
            .count()
    }

    fn mask(&self, g: &Graph, y: bool) -> Vec<u64> {
        let mut bits = vec![0u64; g.row(0).len()];
        for (v, &s) in self.side.iter().enumerate() {
            if s == y {
                bits[v / 64] |= 1 << (v % 64);
            }
        }
        bits
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub partition: Partition,
    /// The maximum-degree vertex whose neighbourhood is Y.
    pub pivot: usize,
    /// `⌊n²/4⌋ - e(G)`; negative above the Turán number.
    pub deficit_k: i64,
    pub internal_x: usize,
    pub internal_y: usize,
}

/// The serialized form `{n, m, k, internal_x, internal_y, sides}` with sides as
/// 0 (X) / 1 (Y) per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityRecord {
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub internal_x: usize,
    pub internal_y: usize,
    pub sides: Vec<u8>,
}

impl StabilityReport {
    pub fn record(&self, g: &Graph) -> StabilityRecord {
        StabilityRecord {
            n: g.n(),
            m: g.m(),
            k: self.deficit_k,
            internal_x: self.internal_x,
            internal_y: self.internal_y,
            sides: self.partition.side.iter().map(|&s| s as u8).collect(),
        }
    }
}

pub fn turan_edges(n: usize) -> usize {
    n * n / 4
}

fn require_triangle_free(g: &Graph) -> Result<()> {
    match find_triangle(g) {
        Some(t) => Err(Error::NotTriangleFree(t)),
        None => Ok(()),
    }
}

/// `Y = N(v)` for the lowest-indexed vertex `v` of maximum degree, `X = V ∖ Y`.
/// For triangle-free `G` the side Y is independent and
/// `e(G[X]) <= ⌊n²/4⌋ - e(G)` whenever the right side is non-negative.
pub fn stability_partition(g: &Graph) -> Result<StabilityReport> {
    require_triangle_free(g)?;
    let pivot = (0..g.n())
        .map(|v| (g.degree(v), v))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, v)| v)
        .expect("graphs have at least one vertex");
    let side: Vec<bool> = (0..g.n()).map(|u| g.has_edge(pivot, u)).collect();
    let partition = Partition::new(g, side)?;
    let internal_x = partition.internal_on(g, false);
    let internal_y = partition.internal_on(g, true);
    debug_assert_eq!(internal_y, 0);
    Ok(StabilityReport {
        partition,
        pivot,
        deficit_k: turan_edges(g.n()) as i64 - g.m() as i64,
        internal_x,
        internal_y,
    })
}

/// Makes the stability partition bipartite: each `w ∈ X` (ascending) drops its
/// edges inside X and gains as many new edges to the lowest-indexed
/// non-neighbours in Y, where the count is taken in the original graph. Every
/// intra-X edge is removed once and replaced by two cross edges, so
/// `e(G') = e(G) + e(G[X])`.
pub fn bipartize_rewire(g: &Graph) -> Result<Graph> {
    let report = stability_partition(g)?;
    let side = &report.partition.side;
    let x_mask = report.partition.mask(g, false);
    let y_size = side.iter().filter(|&&s| s).count();

    let mut out = g.clone();
    for w in (0..g.n()).filter(|&w| !side[w]) {
        let s = and_count(g.row(w), &x_mask) as usize;
        if s == 0 {
            continue;
        }
        for u in ones(g.row(w)).filter(|&u| !side[u]) {
            out.clear(w, u);
        }
        let targets: Vec<usize> = (0..g.n())
            .filter(|&y| side[y] && !out.has_edge(w, y))
            .take(s)
            .collect();
        // d(w) <= d(pivot) = |Y| leaves at least s free slots in Y.
        assert_eq!(
            targets.len(),
            s,
            "vertex {w} has degree above the maximum degree {y_size}"
        );
        for y in targets {
            out.set(w, y);
        }
    }
    debug_assert!(out.is_bipartite_with(side));
    Ok(out)
}

/// Move statistics from [`local_max_cut_traced`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutTrace {
    pub moves: usize,
    /// Full scans that performed at least one move; the closing scan is not counted.
    pub improving_scans: usize,
}

/// Single-vertex-flip local search for a maximum cut, starting from `seed`
/// (all vertices in X by default). Vertices are scanned in index order and every
/// improving flip is applied immediately; scans repeat until one finds no move.
/// At the result every vertex has at least as many neighbours across as on its
/// own side.
pub fn local_max_cut(g: &Graph, seed: Option<&Partition>) -> Result<Partition> {
    local_max_cut_traced(g, seed).map(|(p, _)| p)
}

pub fn local_max_cut_traced(g: &Graph, seed: Option<&Partition>) -> Result<(Partition, CutTrace)> {
    let mut part = match seed {
        Some(p) => Partition::new(g, p.side.clone())?,
        None => Partition::all_x(g),
    };
    let mut y_mask = part.mask(g, true);
    let mut trace = CutTrace::default();
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let deg = g.degree(v);
            let in_y = and_count(g.row(v), &y_mask) as usize;
            let (same, across) = if part.side[v] {
                (in_y, deg - in_y)
            } else {
                (deg - in_y, in_y)
            };
            if same > across {
                part.side[v] = !part.side[v];
                y_mask[v / 64] ^= 1 << (v % 64);
                part.cross_edges += same - across;
                part.internal_edges -= same - across;
                trace.moves += 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
        trace.improving_scans += 1;
    }
    Ok((part, trace))
}

/// `(cross-degree, same-side degree)` of `v` under `part`.
pub fn split_degree(g: &Graph, part: &Partition, v: usize) -> (usize, usize) {
    let across = g
        .neighbors(v)
        .filter(|&u| part.side[u] != part.side[v])
        .count();
    (across, g.degree(v) - across)
}
