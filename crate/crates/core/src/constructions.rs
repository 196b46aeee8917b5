//! Deterministic generators for the extremal graphs of the books-versus-triangles
//! problem, with closed-form predictions of `t(G)` and `b(G)`.
//!
//! `alpha` is always an exact rational so that every part size is an exact
//! integer floor or ceiling.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::analytics::{max_book, triangle_count};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;

/// A rational in lowest terms with positive denominator, written `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(Ratio<i64>);

impl Alpha {
    pub fn new(numer: i64, denom: i64) -> Result<Alpha> {
        if denom == 0 {
            return Err(Error::param("alpha has zero denominator"));
        }
        Ok(Alpha(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    fn half_n(&self, n: usize) -> Ratio<i64> {
        self.0 * Ratio::from_integer(n as i64) / 2
    }

    /// `⌊αn/2⌋`
    pub fn floor_half(&self, n: usize) -> i64 {
        self.half_n(n).floor().to_integer()
    }

    /// `⌈αn/2⌉`
    pub fn ceil_half(&self, n: usize) -> i64 {
        self.half_n(n).ceil().to_integer()
    }

    /// The largest integer strictly below `αn/2`, i.e. the largest admissible `b(G)`.
    pub fn max_book_below_cap(&self, n: usize) -> i64 {
        self.ceil_half(n) - 1
    }

    /// Exact test of `b < αn/2`.
    pub fn book_below_cap(&self, b: u32, n: usize) -> bool {
        Ratio::from_integer(b as i64) < self.half_n(n)
    }

    /// `⌈αn/2⌉`: the strict book cap handed to the annealer.
    pub fn book_cap(&self, n: usize) -> u32 {
        self.ceil_half(n).max(0) as u32
    }

    /// `α(1-α)`
    pub fn quadratic_coefficient(&self) -> Ratio<i64> {
        self.0 * (Ratio::from_integer(1) - self.0)
    }

    /// `α(1-α)²/16`
    pub fn cubic_coefficient(&self) -> Ratio<i64> {
        let one_minus = Ratio::from_integer(1) - self.0;
        self.0 * one_minus * one_minus / 16
    }

    fn strictly_between(&self, lo: (i64, i64), hi: (i64, i64)) -> bool {
        Ratio::new(lo.0, lo.1) < self.0 && self.0 < Ratio::new(hi.0, hi.1)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts `p/q` or an integer `p`; decimals are rejected.
    fn from_str(s: &str) -> Result<Alpha> {
        let bad = || Error::param(format!("alpha must be a fraction p/q, got {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        Alpha::new(p, q)
    }
}

impl Serialize for Alpha {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Alpha, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How the attachment counts of [`theorem1_sharp`] are rounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    /// `a = ⌊αn/2⌋ - 1`, `b = n/2 - ⌊αn/2⌋ + 2`.
    #[default]
    Floor,
    /// `a = ⌈αn/2⌉ - 1` (the largest integer below `αn/2`), `b = n/2 + 1 - a`.
    BelowCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub alpha: Alpha,
    #[serde(default)]
    pub rounding: Rounding,
}

impl ConstructionParams {
    /// Panics on a zero denominator; use [`Alpha::new`] for fallible input.
    pub fn new(n: usize, numer: i64, denom: i64) -> ConstructionParams {
        ConstructionParams {
            n,
            alpha: Alpha::new(numer, denom).expect("nonzero denominator"),
            rounding: Rounding::Floor,
        }
    }

    pub fn with_rounding(mut self, rounding: Rounding) -> Self {
        self.rounding = rounding;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    RademacherExtremal,
    Theorem1Sharp,
    EdwardsGeneralized,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::RademacherExtremal => "rademacher_extremal",
            ConstructionKind::Theorem1Sharp => "theorem1_sharp",
            ConstructionKind::EdwardsGeneralized => "edwards_generalized",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub kind: ConstructionKind,
    pub alpha: Option<Alpha>,
    pub graph: Graph,
    /// Rademacher: `[⌈n/2⌉, ⌊n/2⌋]`. `theorem1_sharp`: `[n/2 - 1, n/2, 1]` (the two
    /// remaining sides and the re-attached vertex). Edwards: `[x1, x2, x3, y1, y2, y3]`.
    pub part_sizes: Vec<usize>,
    /// `theorem1_sharp` only: how many neighbours the re-attached vertex has in its own
    /// side and in the opposite side.
    pub attachment: Option<[usize; 2]>,
    pub predicted_t: u64,
    pub predicted_b: u32,
}

impl ConstructionReport {
    /// Whether the predicted statistics agree exactly with measurement.
    pub fn predicted_vs_actual(&self) -> bool {
        triangle_count(&self.graph).count == self.predicted_t
            && max_book(&self.graph) == self.predicted_b
    }

    /// Exact test of `b(G) < αn/2` for the predicted book size.
    pub fn respects_book_cap(&self) -> Option<bool> {
        self.alpha
            .map(|a| a.book_below_cap(self.predicted_b, self.graph.n()))
    }

    pub fn record(&self) -> ConstructionRecord {
        let t = triangle_count(&self.graph);
        let b = max_book(&self.graph);
        ConstructionRecord {
            kind: self.kind.name().to_string(),
            n: self.graph.n(),
            m: self.graph.m(),
            alpha: self.alpha,
            part_sizes: self.part_sizes.clone(),
            attachment: self.attachment,
            predicted_t: self.predicted_t,
            predicted_b: self.predicted_b,
            measured_t: t.count,
            measured_b: b,
            density: t.density_string(),
            book_below_cap: self.respects_book_cap(),
            matches: t.count == self.predicted_t && b == self.predicted_b,
            graph6: to_graph6(&self.graph),
        }
    }
}

/// Serialized form of a [`ConstructionReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<Alpha>,
    pub part_sizes: Vec<usize>,
    pub attachment: Option<[usize; 2]>,
    pub predicted_t: u64,
    pub predicted_b: u32,
    pub measured_t: u64,
    pub measured_b: u32,
    pub density: String,
    pub book_below_cap: Option<bool>,
    pub matches: bool,
    pub graph6: String,
}

/// Complete bipartite graph with sides `⌈n/2⌉`, `⌊n/2⌋` plus the edge `{0, 1}`
/// inside the larger side.
pub fn rademacher_extremal(n: usize) -> Result<ConstructionReport> {
    if n < 4 {
        return Err(Error::Size(n));
    }
    let big = n.div_ceil(2);
    let mut graph = Graph::complete_bipartite(big, n / 2)?;
    graph.set(0, 1);
    Ok(ConstructionReport {
        kind: ConstructionKind::RademacherExtremal,
        alpha: None,
        graph,
        part_sizes: vec![big, n / 2],
        attachment: None,
        predicted_t: (n / 2) as u64,
        predicted_b: (n / 2) as u32,
    })
}

/// `K_{n/2,n/2}` with vertex 0 detached and re-attached to `a` vertices of its own
/// side and `b` vertices of the other (lowest indices first), where `a + b = n/2 + 1`.
/// Gives `t = ab` and `b(G) = max(a, b)`.
pub fn theorem1_sharp(params: &ConstructionParams) -> Result<ConstructionReport> {
    let ConstructionParams { n, alpha, rounding } = *params;
    if n % 2 != 0 || n < 8 {
        return Err(Error::param(format!(
            "theorem1_sharp needs even n >= 8, got {n}"
        )));
    }
    if !alpha.strictly_between((1, 2), (1, 1)) {
        return Err(Error::param(format!(
            "theorem1_sharp needs 1/2 < alpha < 1, got {alpha}"
        )));
    }
    let h = n / 2;
    let (own, other) = match rounding {
        Rounding::Floor => {
            let f = alpha.floor_half(n);
            (f - 1, h as i64 - f + 2)
        }
        Rounding::BelowCap => {
            let a = alpha.max_book_below_cap(n);
            (a, h as i64 + 1 - a)
        }
    };
    if own < 1 || other < 1 || own > h as i64 - 1 || other > h as i64 {
        return Err(Error::param(format!(
            "degenerate attachment ({own}, {other}) for n = {n}, alpha = {alpha}"
        )));
    }
    let (own, other) = (own as usize, other as usize);

    let mut graph = Graph::new(n)?;
    for u in 1..h {
        for v in h..n {
            graph.set(u, v);
        }
    }
    for u in 1..=own {
        graph.set(0, u);
    }
    for v in h..h + other {
        graph.set(0, v);
    }
    Ok(ConstructionReport {
        kind: ConstructionKind::Theorem1Sharp,
        alpha: Some(alpha),
        graph,
        part_sizes: vec![h - 1, h, 1],
        attachment: Some([own, other]),
        predicted_t: (own * other) as u64,
        predicted_b: own.max(other) as u32,
    })
}

/// Splits one side of `size` vertices into three parts, the first being the largest
/// integer strictly below `αn/2` and the rest as even as possible.
fn edwards_parts(size: usize, alpha: Alpha, n: usize) -> Option<[usize; 3]> {
    let first = alpha.max_book_below_cap(n);
    if first < 1 || first as usize >= size {
        return None;
    }
    let rest = size - first as usize;
    let parts = [first as usize, rest.div_ceil(2), rest / 2];
    parts.iter().all(|&p| p > 0).then_some(parts)
}

/// Two sides `X`, `Y` of sizes `⌈n/2⌉`, `⌊n/2⌋`, each split into three parts;
/// complete tripartite inside each side and complete bipartite between `X_i`
/// and `Y_i`.
pub fn edwards_generalized(params: &ConstructionParams) -> Result<ConstructionReport> {
    let ConstructionParams { n, alpha, .. } = *params;
    if !alpha.strictly_between((1, 3), (1, 2)) {
        return Err(Error::param(format!(
            "edwards_generalized needs 1/3 < alpha < 1/2, got {alpha}"
        )));
    }
    if n < 24 {
        return Err(Error::param(format!(
            "edwards_generalized needs n >= 24, got {n}"
        )));
    }
    let empty = || Error::param(format!("empty part for n = {n}, alpha = {alpha}"));
    let xs = edwards_parts(n.div_ceil(2), alpha, n).ok_or_else(empty)?;
    let ys = edwards_parts(n / 2, alpha, n).ok_or_else(empty)?;

    // Part i of side X starts at x_start[i]; side Y follows side X.
    let mut starts = [0usize; 6];
    let sizes = [xs[0], xs[1], xs[2], ys[0], ys[1], ys[2]];
    for i in 1..6 {
        starts[i] = starts[i - 1] + sizes[i - 1];
    }
    let range = |i: usize| starts[i]..starts[i] + sizes[i];

    let mut graph = Graph::new(n)?;
    for side in [0, 3] {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for u in range(side + i) {
                for v in range(side + j) {
                    graph.set(u, v);
                }
            }
        }
    }
    for i in 0..3 {
        for u in range(i) {
            for v in range(3 + i) {
                graph.set(u, v);
            }
        }
    }
    let product = |p: [usize; 3]| (p[0] * p[1] * p[2]) as u64;
    Ok(ConstructionReport {
        kind: ConstructionKind::EdwardsGeneralized,
        alpha: Some(alpha),
        graph,
        part_sizes: sizes.to_vec(),
        attachment: None,
        predicted_t: product(xs) + product(ys),
        predicted_b: *sizes.iter().max().expect("six parts") as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::oracle::{codegree_by_scan, triangles_by_triples};
    use crate::analytics::{book_profile, book_size};
    use crate::graph::Edge;

    fn brute(g: &Graph) -> (u64, u32) {
        let b = g
            .edges()
            .map(|e| codegree_by_scan(g, e.u, e.v))
            .max()
            .unwrap_or(0);
        (triangles_by_triples(g), b)
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!("7/10".parse::<Alpha>().unwrap(), Alpha::new(7, 10).unwrap());
        assert_eq!("14/20".parse::<Alpha>().unwrap().to_string(), "7/10");
        assert!("0.7".parse::<Alpha>().is_err());
        assert!("1/0".parse::<Alpha>().is_err());
        let a = Alpha::new(7, 10).unwrap();
        assert_eq!(
            (a.floor_half(20), a.ceil_half(20), a.max_book_below_cap(20)),
            (7, 7, 6)
        );
        assert_eq!(
            (a.floor_half(21), a.ceil_half(21), a.max_book_below_cap(21)),
            (7, 8, 7)
        );
        assert!(a.book_below_cap(6, 20) && !a.book_below_cap(7, 20));
    }

    #[test]
    fn rademacher_examples() {
        for (n, e, t) in [(10, 26, 5), (6, 10, 3), (7, 13, 3), (4, 5, 2)] {
            let r = rademacher_extremal(n).unwrap();
            assert_eq!(r.graph.m(), e, "n = {n}");
            assert_eq!(brute(&r.graph), (t, t as u32), "n = {n}");
            assert!(r.predicted_vs_actual());
        }
        assert_eq!(rademacher_extremal(3).unwrap_err(), Error::Size(3));
    }

    #[test]
    fn theorem1_examples() {
        let r = theorem1_sharp(&ConstructionParams::new(20, 7, 10)).unwrap();
        assert_eq!(r.attachment, Some([6, 5]));
        assert_eq!(r.graph.m(), 101);
        assert_eq!(brute(&r.graph), (30, 6));
        assert_eq!(r.respects_book_cap(), Some(true));
        assert!(r.predicted_vs_actual());

        let r = theorem1_sharp(&ConstructionParams::new(200, 7, 10)).unwrap();
        assert_eq!(r.attachment, Some([69, 32]));
        assert_eq!(r.graph.m(), 10001);
        assert_eq!(brute(&r.graph), (2208, 69));
        assert!(r.predicted_vs_actual());

        assert!(matches!(
            theorem1_sharp(&ConstructionParams::new(20, 2, 5)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            theorem1_sharp(&ConstructionParams::new(21, 7, 10)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            theorem1_sharp(&ConstructionParams::new(20, 1, 1)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn theorem1_rounding_policies() {
        // αn/2 = 11.55: floor rounding gives (10, 12) which breaks the cap, the
        // below-cap rounding gives (11, 11).
        let p = ConstructionParams::new(42, 11, 20);
        let floor = theorem1_sharp(&p).unwrap();
        assert_eq!(floor.attachment, Some([10, 12]));
        assert_eq!(floor.respects_book_cap(), Some(false));
        let below = theorem1_sharp(&p.with_rounding(Rounding::BelowCap)).unwrap();
        assert_eq!(below.attachment, Some([11, 11]));
        assert_eq!(below.respects_book_cap(), Some(true));
        assert_eq!(below.graph.m(), 42 * 42 / 4 + 1);
        assert!(below.predicted_vs_actual());
        // When αn/2 is an integer both policies coincide.
        let q = ConstructionParams::new(20, 7, 10);
        assert_eq!(
            theorem1_sharp(&q).unwrap().graph,
            theorem1_sharp(&q.with_rounding(Rounding::BelowCap))
                .unwrap()
                .graph
        );
    }

    #[test]
    fn edwards_examples() {
        let r = edwards_generalized(&ConstructionParams::new(120, 2, 5)).unwrap();
        assert_eq!(r.part_sizes, vec![23, 19, 18, 23, 19, 18]);
        assert_eq!(r.predicted_t, 15732);
        assert_eq!(brute(&r.graph), (15732, 23));
        assert_eq!(r.respects_book_cap(), Some(true));
        let density = r.predicted_t as f64 / 120f64.powi(3);
        assert!((density - 0.009104).abs() < 1e-6);

        let alpha = Alpha::new(1, 3).unwrap().ratio() + Ratio::new(1, 100);
        let p = ConstructionParams {
            n: 24,
            alpha: Alpha::new(*alpha.numer(), *alpha.denom()).unwrap(),
            rounding: Rounding::Floor,
        };
        let r = edwards_generalized(&p).unwrap();
        assert!(r.predicted_vs_actual());
        let s = &r.part_sizes;
        let x_end = s[0] + s[1] + s[2];
        let mut cross = 0;
        for e in r.graph.edges().filter(|e| e.u < x_end && e.v >= x_end) {
            assert_eq!(codegree_by_scan(&r.graph, e.u, e.v), 0, "{e}");
            cross += 1;
        }
        assert_eq!(cross, s[0] * s[3] + s[1] * s[4] + s[2] * s[5]);

        assert!(matches!(
            edwards_generalized(&ConstructionParams::new(120, 1, 4)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            edwards_generalized(&ConstructionParams::new(10, 2, 5)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn edwards_odd_n() {
        let r = edwards_generalized(&ConstructionParams::new(49, 2, 5)).unwrap();
        assert_eq!(r.part_sizes.iter().sum::<usize>(), 49);
        assert_eq!(r.part_sizes[..3].iter().sum::<usize>(), 25);
        assert!(r.predicted_vs_actual());
    }

    #[test]
    fn corrupted_report_is_detected() {
        let mut r = rademacher_extremal(10).unwrap();
        assert!(r.predicted_vs_actual());
        r.predicted_t += 1;
        assert!(!r.predicted_vs_actual());
    }

    #[test]
    fn rademacher_odd_extra_edge_has_the_big_book() {
        let r = rademacher_extremal(9).unwrap();
        assert_eq!(book_size(&r.graph, Edge::new(0, 1).unwrap()), Ok(4));
        assert_eq!(
            book_profile(&r.graph).unwrap().max_edge,
            Edge::new(0, 1).unwrap()
        );
    }

    #[test]
    fn record_serializes() {
        let rec = theorem1_sharp(&ConstructionParams::new(20, 7, 10))
            .unwrap()
            .record();
        assert!(rec.matches);
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["alpha"], "7/10");
        assert_eq!(json["measured_t"], 30);
        assert_eq!(json["measured_b"], 6);
        let back: ConstructionRecord = serde_json::from_value(json).unwrap();
        assert_eq!(back, rec);
    }
}
