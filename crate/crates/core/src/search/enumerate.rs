//! Exhaustive enumeration of labeled graphs with a fixed number of edges.
//!
//! Vertex pairs are indexed in lexicographic order `(0,1), (0,2), …, (n-2,n-1)`;
//! a graph with `e` edges is an `e`-subset of those indices, and subsets are
//! visited in lexicographic order. Rank `r` is the `r`-th subset in that order,
//! so contiguous rank ranges split the space into independent chunks.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` scanned without the explicit override.
pub const EXHAUSTIVE_LIMIT: usize = 8;
/// Hard ceiling for the small-graph kernel, override or not.
pub const KERNEL_LIMIT: usize = 16;

/// `C(n, k)`, or `None` on `u64` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Vertex pairs in lexicographic order.
pub fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The `rank`-th `k`-subset of `0..universe` in lexicographic order.
pub fn unrank_combination(mut rank: u64, universe: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for slot in 0..k {
        loop {
            let rest = binomial((universe - next - 1) as u64, (k - slot - 1) as u64)
                .expect("rank space fits in u64");
            if rank < rest {
                break;
            }
            rank -= rest;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Steps `comb` to its lexicographic successor; false when it was the last one.
#[inline]
pub fn next_combination(comb: &mut [usize], universe: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < universe - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The space of labeled graphs on `n` vertices with exactly `e` edges.
#[derive(Clone, Debug)]
pub struct FixedEdgeSpace {
    n: usize,
    e: usize,
    pairs: Vec<(usize, usize)>,
    total: u64,
}

impl FixedEdgeSpace {
    /// Refuses `n > EXHAUSTIVE_LIMIT` unless `allow_large` is set; `allow_large`
    /// still stops at [`KERNEL_LIMIT`] and at rank spaces that overflow `u64`.
    pub fn new(n: usize, e: usize, allow_large: bool) -> Result<FixedEdgeSpace> {
        if n == 0 {
            return Err(Error::Size(0));
        }
        let limit = if allow_large {
            KERNEL_LIMIT
        } else {
            EXHAUSTIVE_LIMIT
        };
        if n > limit {
            return Err(Error::ExplosionGuard { n, limit });
        }
        let pairs = pair_table(n);
        if e > pairs.len() {
            return Err(Error::param(format!(
                "{e} edges do not fit on {n} vertices (max {})",
                pairs.len()
            )));
        }
        let total =
            binomial(pairs.len() as u64, e as u64).ok_or(Error::ExplosionGuard { n, limit })?;
        Ok(FixedEdgeSpace { n, e, pairs, total })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn graph_at(&self, rank: u64) -> Graph {
        self.graph_of(&unrank_combination(rank, self.pairs.len(), self.e))
    }

    pub(crate) fn graph_of(&self, comb: &[usize]) -> Graph {
        let mut g = Graph::new(self.n).expect("n validated");
        for &i in comb {
            let (u, v) = self.pairs[i];
            g.set(u, v);
        }
        g
    }

    /// Calls `visit(rank, combination)` for every rank in `start..end`, in order.
    pub fn for_each_in(&self, start: u64, end: u64, mut visit: impl FnMut(u64, &[usize])) {
        let end = end.min(self.total);
        if start >= end {
            return;
        }
        let mut comb = unrank_combination(start, self.pairs.len(), self.e);
        let mut rank = start;
        loop {
            visit(rank, &comb);
            rank += 1;
            if rank == end || !next_combination(&mut comb, self.pairs.len()) {
                break;
            }
        }
    }

    /// Every graph in the space, in rank order.
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.range(0, self.total)
    }

    /// Graphs with rank in `start..end`.
    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = Graph> + '_ {
        let end = end.min(self.total);
        let mut comb = (start < end).then(|| unrank_combination(start, self.pairs.len(), self.e));
        let mut rank = start;
        std::iter::from_fn(move || {
            let c = comb.as_mut()?;
            let g = self.graph_of(c);
            rank += 1;
            if rank >= end || !next_combination(c, self.pairs.len()) {
                comb = None;
            }
            Some(g)
        })
    }
}

/// Every labeled graph with `n <= 8` vertices and exactly `e` edges, in rank order.
pub fn enumerate_fixed_edges(n: usize, e: usize) -> Result<FixedEdgeSpace> {
    FixedEdgeSpace::new(n, e, false)
}
