//! Simple undirected labeled graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one flat array of `n` rows, each `ceil(n / 64)` words
//! long. Row `v` has bit `u` set iff `{u, v}` is an edge. All statistics in this
//! crate reduce to AND + popcount over pairs of rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 1024;

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the pair so that `u < v`; rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Population count of the intersection of two equally long bit rows.
#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

/// Iterates the indices of set bits in a row, ascending.
pub fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + tz)
        })
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Size(n));
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// `K_{a,b}` with vertices `0..a` on one side and `a..a+b` on the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::param("complete_bipartite needs both sides nonempty"));
        }
        let mut g = Graph::new(a.checked_add(b).ok_or(Error::Size(usize::MAX))?)?;
        for u in 0..a {
            for v in a..a + b {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::param("a cycle needs at least 3 vertices"));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.set(v, (v + 1) % n);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Bounds {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    /// Inserts `{u, v}`. Returns whether the edge was new; repeated inserts are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(self.set(u, v))
    }

    /// Removes `{u, v}`. Returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(self.clear(u, v))
    }

    /// Unchecked insert for callers that already validated `u != v < n`.
    pub(crate) fn set(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.row_mut(u)[v / 64] |= 1 << (v % 64);
        self.row_mut(v)[u / 64] |= 1 << (u % 64);
        self.m += 1;
        true
    }

    pub(crate) fn clear(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            return false;
        }
        self.row_mut(u)[v / 64] &= !(1 << (v % 64));
        self.row_mut(v)[u / 64] &= !(1 << (u % 64));
        self.m -= 1;
        true
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            ones(self.row(u))
                .skip_while(move |&v| v <= u)
                .map(move |v| Edge { u, v })
        })
    }

    /// Recounts the edges from the bitsets; equals [`Graph::m`] for every valid graph.
    pub fn recount_edges(&self) -> usize {
        let total: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    /// Checks symmetry, loop-freeness, padding bits and the edge-count cache.
    pub fn is_consistent(&self) -> bool {
        let tail = self.n % 64;
        for u in 0..self.n {
            let row = self.row(u);
            if tail != 0 && row[self.words - 1] >> tail != 0 {
                return false;
            }
            if self.has_edge(u, u) {
                return false;
            }
            if ones(row).any(|v| !self.has_edge(v, u)) {
                return false;
            }
        }
        let total: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        total.is_multiple_of(2) && total / 2 == self.m
    }

    /// True if every edge joins a vertex with `side == false` to one with `side == true`.
    pub fn is_bipartite_with(&self, side: &[bool]) -> bool {
        side.len() == self.n && self.edges().all(|e| side[e.u] != side[e.v])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field(
                "edges",
                &self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}
