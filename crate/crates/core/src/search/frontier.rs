//! Pareto bookkeeping over `(b, t)` pairs, both minimized.

use serde::{Deserialize, Serialize};

/// One non-dominated point together with the key that decides ties (lower
/// wins) and an arbitrary witness payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontPoint<K, W> {
    pub b: u32,
    pub t: u64,
    pub key: K,
    pub witness: W,
}

/// An antichain under the componentwise order on `(b, t)`, kept sorted by `b`
/// ascending (hence `t` strictly descending).
///
/// Merging is associative and commutative as long as keys are distinct, so
/// partial fronts built by independent workers can be combined in any order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParetoFront<K, W> {
    points: Vec<FrontPoint<K, W>>,
}

impl<K, W> Default for ParetoFront<K, W> {
    fn default() -> Self {
        ParetoFront { points: Vec::new() }
    }
}

impl<K: Ord + Clone, W: Clone> ParetoFront<K, W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn points(&self) -> &[FrontPoint<K, W>] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// True if `(b, t)` would be rejected outright: some point is `<=` in both
    /// coordinates and not an exact tie.
    #[inline]
    pub fn dominates(&self, b: u32, t: u64) -> bool {
        self.points
            .iter()
            .any(|p| p.b <= b && p.t <= t && (p.b, p.t) != (b, t))
    }

    /// Cheap pre-check before building a witness: false means `insert` would be a no-op
    /// for any key that is not lower than an existing tie.
    #[inline]
    pub fn admits(&self, b: u32, t: u64) -> bool {
        !self.points.iter().any(|p| p.b <= b && p.t <= t)
    }

    /// Inserts the point unless it is dominated. An exact `(b, t)` tie keeps the
    /// lower key. Returns whether the front changed.
    pub fn insert(&mut self, b: u32, t: u64, key: K, witness: impl FnOnce() -> W) -> bool {
        if let Some(p) = self.points.iter_mut().find(|p| p.b == b && p.t == t) {
            if key < p.key {
                p.key = key;
                p.witness = witness();
                return true;
            }
            return false;
        }
        if self.dominates(b, t) {
            return false;
        }
        self.points.retain(|p| !(b <= p.b && t <= p.t));
        let at = self.points.partition_point(|p| p.b < b);
        self.points.insert(
            at,
            FrontPoint {
                b,
                t,
                key,
                witness: witness(),
            },
        );
        true
    }

    pub fn merge(mut self, other: Self) -> Self {
        for p in other.points {
            let FrontPoint { b, t, key, witness } = p;
            self.insert(b, t, key, move || witness);
        }
        self
    }

    pub fn min_t(&self) -> Option<u64> {
        self.points.iter().map(|p| p.t).min()
    }

    pub fn min_b(&self) -> Option<u32> {
        self.points.iter().map(|p| p.b).min()
    }

    /// Smallest `t` among points with `b < cap`.
    pub fn min_t_below(&self, cap: u32) -> Option<u64> {
        self.points.iter().filter(|p| p.b < cap).map(|p| p.t).min()
    }

    pub fn map_witness<W2>(self, mut f: impl FnMut(&K, W) -> W2) -> ParetoFront<K, W2> {
        ParetoFront {
            points: self
                .points
                .into_iter()
                .map(|p| FrontPoint {
                    witness: f(&p.key, p.witness),
                    b: p.b,
                    t: p.t,
                    key: p.key,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Heuristic,
}

/// Result of a scan or a heuristic search over graphs with `n` vertices and `e` edges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrontierRecord {
    pub n: usize,
    pub e: usize,
    pub mode: SearchMode,
    pub min_t: Option<u64>,
    pub min_b: Option<u32>,
    /// `(b, t)` pairs sorted by `b`.
    pub pareto: Vec<(u32, u64)>,
    /// graph6 witness for each pareto point.
    pub witnesses: Vec<String>,
    pub scanned: u64,
    /// Strict book cap of a heuristic run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub book_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seeds: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
}

impl FrontierRecord {
    pub(crate) fn from_front<K: Ord + Clone>(
        n: usize,
        e: usize,
        mode: SearchMode,
        front: &ParetoFront<K, String>,
        scanned: u64,
    ) -> FrontierRecord {
        FrontierRecord {
            n,
            e,
            mode,
            min_t: front.min_t(),
            min_b: front.min_b(),
            pareto: front.points().iter().map(|p| (p.b, p.t)).collect(),
            witnesses: front.points().iter().map(|p| p.witness.clone()).collect(),
            scanned,
            book_cap: None,
            seeds: None,
            rng: None,
        }
    }

    /// Smallest `t` over recorded points with `b < cap`.
    pub fn min_t_below(&self, cap: u32) -> Option<u64> {
        self.pareto.iter().filter(|p| p.0 < cap).map(|p| p.1).min()
    }

    /// The one-line summary `n=… e=… min_t=… min_b=…`.
    pub fn summary(&self) -> String {
        let show = |v: Option<String>| v.unwrap_or_else(|| "none".into());
        format!(
            "n={} e={} min_t={} min_b={}",
            self.n,
            self.e,
            show(self.min_t.map(|t| t.to_string())),
            show(self.min_b.map(|b| b.to_string())),
        )
    }

    /// `b,t,witness` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("b,t,witness\n");
        for ((b, t), w) in self.pareto.iter().zip(&self.witnesses) {
            out.push_str(&format!("{b},{t},{w}\n"));
        }
        out
    }
}
