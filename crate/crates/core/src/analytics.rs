//! Exact triangle and book statistics.
//!
//! The book of an edge `uv` is the set of triangles through it; its size is the
//! codegree `|N(u) ∩ N(v)|`. `t(G)` is the number of triangles and `b(G)` the
//! largest book size over all edges.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{and_count, ones, Edge, Graph};
use crate::par::Exec;

/// `|N(u) ∩ N(v)|` for distinct vertices `u`, `v`.
pub fn codegree(g: &Graph, u: usize, v: usize) -> Result<u32> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Loop(u));
    }
    Ok(and_count(g.row(u), g.row(v)))
}

/// Number of triangles containing the edge `e`. Non-edges are an error.
pub fn book_size(g: &Graph, e: Edge) -> Result<u32> {
    g.check_vertex(e.u)?;
    g.check_vertex(e.v)?;
    if !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge(e.u, e.v));
    }
    Ok(and_count(g.row(e.u), g.row(e.v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleStats {
    pub n: usize,
    pub count: u64,
}

impl TriangleStats {
    /// `t / n³` as a float.
    pub fn density(&self) -> f64 {
        self.count as f64 / (self.n as f64).powi(3)
    }

    /// `t / n³` rounded half-up to exactly 12 decimals, computed in integers.
    pub fn density_string(&self) -> String {
        const SCALE: u128 = 1_000_000_000_000;
        let cube = (self.n as u128).pow(3);
        let scaled = (self.count as u128 * SCALE * 2 + cube) / (cube * 2);
        format!("{}.{:012}", scaled / SCALE, scaled % SCALE)
    }
}

/// Sum of codegrees over the edges `{u, v}` with `v > u`, for a block of rows.
fn codegree_sum_rows(g: &Graph, rows: std::ops::Range<usize>) -> u64 {
    let mut total = 0u64;
    for u in rows {
        let ru = g.row(u);
        for v in ones(ru).skip_while(|&v| v <= u) {
            total += and_count(ru, g.row(v)) as u64;
        }
    }
    total
}

pub fn triangle_count(g: &Graph) -> TriangleStats {
    triangle_count_with(g, Exec::default())
}

/// `t(G)` as one third of the codegree sum over all edges.
pub fn triangle_count_with(g: &Graph, exec: Exec) -> TriangleStats {
    let n = g.n();
    // Small graphs are not worth the fan-out.
    let jobs = if g.m() < 4096 {
        1
    } else {
        exec.split_hint().min(n)
    };
    let chunk = n.div_ceil(jobs);
    let sum = exec.map_reduce(
        jobs,
        |j| codegree_sum_rows(g, j * chunk..((j + 1) * chunk).min(n)),
        || 0,
        |a, b| a + b,
    );
    debug_assert_eq!(sum % 3, 0);
    TriangleStats { n, count: sum / 3 }
}

/// Largest book over all edges; 0 for an edgeless graph.
pub fn max_book(g: &Graph) -> u32 {
    (0..g.n())
        .flat_map(|u| {
            let ru = g.row(u);
            ones(ru)
                .skip_while(move |&v| v <= u)
                .map(move |v| and_count(ru, g.row(v)))
        })
        .max()
        .unwrap_or(0)
}

/// Lexicographically smallest triangle `a < b < c`, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        let ra = g.row(a);
        for b in ones(ra).skip_while(|&b| b <= a) {
            let rb = g.row(b);
            let common = ones(ra)
                .skip_while(|&c| c <= b)
                .find(|&c| (rb[c / 64] >> (c % 64)) & 1 == 1);
            if let Some(c) = common {
                return Some([a, b, c]);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookProfile {
    /// One entry per edge, in lexicographic edge order.
    pub per_edge: Vec<(Edge, u32)>,
    /// Lexicographically smallest edge attaining `max_size`.
    pub max_edge: Edge,
    /// `b(G)`.
    pub max_size: u32,
}

impl BookProfile {
    pub fn get(&self, e: Edge) -> Option<u32> {
        self.per_edge
            .binary_search_by_key(&e, |&(edge, _)| edge)
            .ok()
            .map(|i| self.per_edge[i].1)
    }

    pub fn total(&self) -> u64 {
        self.per_edge.iter().map(|&(_, s)| s as u64).sum()
    }
}

pub fn book_profile(g: &Graph) -> Result<BookProfile> {
    let per_edge: Vec<(Edge, u32)> = g
        .edges()
        .map(|e| (e, and_count(g.row(e.u), g.row(e.v))))
        .collect();
    // `max_by_key` keeps the last maximum; scan for the first one instead.
    let (max_edge, max_size) = per_edge
        .iter()
        .copied()
        .fold(None, |best: Option<(Edge, u32)>, (e, s)| match best {
            Some((_, bs)) if bs >= s => best,
            _ => Some((e, s)),
        })
        .ok_or(Error::EmptyGraph)?;
    Ok(BookProfile {
        per_edge,
        max_edge,
        max_size,
    })
}

/// Book size -> number of edges with that book size.
pub fn book_histogram(g: &Graph) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for e in g.edges() {
        *hist.entry(and_count(g.row(e.u), g.row(e.v))).or_insert(0) += 1;
    }
    hist
}

/// The serializable summary `{n, m, t, b, max_edge, histogram}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub t: u64,
    pub b: Option<u32>,
    pub max_edge: Option<[usize; 2]>,
    pub histogram: BTreeMap<u32, u64>,
}

pub fn analyze(g: &Graph) -> AnalysisReport {
    let t = triangle_count(g).count;
    let profile = book_profile(g).ok();
    AnalysisReport {
        n: g.n(),
        m: g.m(),
        t,
        b: profile.as_ref().map(|p| p.max_size),
        max_edge: profile.as_ref().map(|p| [p.max_edge.u, p.max_edge.v]),
        histogram: book_histogram(g),
    }
}
