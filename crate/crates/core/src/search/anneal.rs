//! Simulated annealing for few triangles under a strict book cap, over graphs with
//! a fixed number of edges.
//!
//! A move swaps one present edge for one absent edge, so the edge count never
//! changes. Moves that would create a book of size `>= book_cap` are rejected
//! outright; the objective is `t(G)` with Metropolis acceptance and a geometric
//! temperature schedule.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytics::{max_book, triangle_count};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{and_count, ones, Graph};
use crate::par::Exec;

use super::enumerate::pair_table;
use super::frontier::{FrontierRecord, ParetoFront, SearchMode};

/// Identifier of the generator recorded in every heuristic [`FrontierRecord`].
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/seed_from_u64";

pub const DEFAULT_INITIAL_TEMPERATURE: f64 = 2.0;
pub const DEFAULT_DECAY: f64 = 0.9995;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnealParams {
    /// Every visited graph has `b(G) < book_cap`.
    pub book_cap: u32,
    /// Number of proposed moves.
    pub budget: u64,
    pub seed: u64,
    #[serde(skip)]
    pub init: Option<Graph>,
    pub initial_temperature: f64,
    /// Per-proposal multiplicative temperature decay, in `(0, 1)`.
    pub decay: f64,
}

impl AnnealParams {
    pub fn new(book_cap: u32, budget: u64, seed: u64) -> AnnealParams {
        AnnealParams {
            book_cap,
            budget,
            seed,
            init: None,
            initial_temperature: DEFAULT_INITIAL_TEMPERATURE,
            decay: DEFAULT_DECAY,
        }
    }

    pub fn with_init(mut self, init: Graph) -> Self {
        self.init = Some(init);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.budget < 1 {
            return Err(Error::param("annealing budget must be at least 1"));
        }
        if !(self.decay > 0.0 && self.decay < 1.0) {
            return Err(Error::param(format!(
                "decay {} is not in (0, 1)",
                self.decay
            )));
        }
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return Err(Error::param(
                "initial temperature must be positive and finite",
            ));
        }
        Ok(())
    }
}

/// Best graph of a run plus the visited `(b, t)` frontier.
#[derive(Clone, Debug)]
pub struct AnnealOutcome {
    pub record: FrontierRecord,
    pub best: Graph,
    pub best_t: u64,
    pub best_b: u32,
    pub accepted: u64,
    pub rejected_by_cap: u64,
}

/// Would inserting the absent pair `{x, y}` keep every book below `cap`?
/// Assumes the current graph already satisfies the cap: only the new edge and the
/// edges from `x`, `y` to their common neighbours change.
fn insertion_respects_cap(g: &Graph, x: usize, y: usize, cap: u32) -> bool {
    let (rx, ry) = (g.row(x), g.row(y));
    if and_count(rx, ry) >= cap {
        return false;
    }
    let common: Vec<u64> = rx.iter().zip(ry).map(|(a, b)| a & b).collect();
    let ok = ones(&common).all(|w| {
        let rw = g.row(w);
        and_count(rx, rw) + 1 < cap && and_count(ry, rw) + 1 < cap
    });
    ok
}

/// Random insertion order over all pairs, keeping only insertions that respect the cap.
fn greedy_start(n: usize, e: usize, cap: u32, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut pairs = pair_table(n);
    pairs.shuffle(rng);
    let mut g = Graph::new(n)?;
    for (u, v) in pairs {
        if g.m() == e {
            break;
        }
        if insertion_respects_cap(&g, u, v, cap) {
            g.set(u, v);
        }
    }
    if g.m() < e {
        return Err(Error::param(format!(
            "no feasible start: greedy insertion stalled at {} of {e} edges with b < {cap}",
            g.m()
        )));
    }
    Ok(g)
}

struct EdgeSets {
    pairs: Vec<(usize, usize)>,
    present: Vec<u32>,
    absent: Vec<u32>,
    /// Position of each pair id inside whichever list holds it.
    slot: Vec<u32>,
}

impl EdgeSets {
    fn new(g: &Graph) -> EdgeSets {
        let pairs = pair_table(g.n());
        let mut present = Vec::new();
        let mut absent = Vec::new();
        let mut slot = vec![0u32; pairs.len()];
        for (id, &(u, v)) in pairs.iter().enumerate() {
            let list = if g.has_edge(u, v) {
                &mut present
            } else {
                &mut absent
            };
            slot[id] = list.len() as u32;
            list.push(id as u32);
        }
        EdgeSets {
            pairs,
            present,
            absent,
            slot,
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        let (out_id, in_id) = (self.present[i], self.absent[j]);
        self.present[i] = in_id;
        self.absent[j] = out_id;
        self.slot[in_id as usize] = i as u32;
        self.slot[out_id as usize] = j as u32;
    }
}

/// One annealing run from `params.init` (or a random greedy start).
pub fn anneal_min_triangles(n: usize, e: usize, params: &AnnealParams) -> Result<FrontierRecord> {
    anneal_run(n, e, params).map(|o| o.record)
}

pub fn anneal_run(n: usize, e: usize, params: &AnnealParams) -> Result<AnnealOutcome> {
    params.validate()?;
    let max_edges = n * n.saturating_sub(1) / 2;
    if e > max_edges {
        return Err(Error::param(format!(
            "{e} edges do not fit on {n} vertices"
        )));
    }
    let cap = params.book_cap;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut g = match &params.init {
        Some(init) => {
            if init.n() != n || init.m() != e {
                return Err(Error::param(format!(
                    "init has n = {}, e = {}; expected n = {n}, e = {e}",
                    init.n(),
                    init.m()
                )));
            }
            let b = max_book(init);
            if b >= cap {
                return Err(Error::param(format!(
                    "init has b = {b}, not below the cap {cap}"
                )));
            }
            init.clone()
        }
        None => greedy_start(n, e, cap, &mut rng)?,
    };

    let mut sets = EdgeSets::new(&g);
    let mut t = triangle_count(&g).count as i64;
    let mut b = max_book(&g);
    let mut best = g.clone();
    let (mut best_t, mut best_b) = (t as u64, b);
    let mut front: ParetoFront<u64, String> = ParetoFront::new();
    front.insert(b, t as u64, 0, || to_graph6(&g));

    let mut temperature = params.initial_temperature;
    let (mut accepted, mut rejected_by_cap) = (0u64, 0u64);
    let can_move = !sets.present.is_empty() && !sets.absent.is_empty();

    for step in 1..=params.budget {
        if can_move {
            let i = rng.random_range(0..sets.present.len());
            let j = rng.random_range(0..sets.absent.len());
            let (u, v) = sets.pairs[sets.present[i] as usize];
            let (x, y) = sets.pairs[sets.absent[j] as usize];

            let lost = and_count(g.row(u), g.row(v)) as i64;
            g.clear(u, v);
            if !insertion_respects_cap(&g, x, y, cap) {
                g.set(u, v);
                rejected_by_cap += 1;
            } else {
                let gained = and_count(g.row(x), g.row(y)) as i64;
                let delta = gained - lost;
                let accept =
                    delta <= 0 || rng.random::<f64>() < (-(delta as f64) / temperature).exp();
                if accept {
                    g.set(x, y);
                    sets.swap(i, j);
                    t += delta;
                    accepted += 1;
                    // Removing an edge only shrinks books, so recompute on accept.
                    b = max_book(&g);
                    if front.admits(b, t as u64) {
                        front.insert(b, t as u64, step, || to_graph6(&g));
                    }
                    if (t as u64) < best_t {
                        best_t = t as u64;
                        best_b = b;
                        best = g.clone();
                    }
                } else {
                    g.set(u, v);
                }
            }
        }
        temperature *= params.decay;
    }
    debug_assert_eq!(triangle_count(&g).count as i64, t);

    let mut record = FrontierRecord::from_front(n, e, SearchMode::Heuristic, &front, params.budget);
    record.book_cap = Some(cap);
    record.seeds = Some(vec![params.seed]);
    record.rng = Some(RNG_ALGORITHM.to_string());
    Ok(AnnealOutcome {
        record,
        best,
        best_t,
        best_b,
        accepted,
        rejected_by_cap,
    })
}

/// Independent runs, one per seed, merged into a single frontier. Runs execute in
/// parallel under [`Exec::Parallel`]; the merged record does not depend on it.
pub fn anneal_seeds(
    n: usize,
    e: usize,
    params: &AnnealParams,
    seeds: &[u64],
    exec: Exec,
) -> Result<FrontierRecord> {
    if seeds.is_empty() {
        return Err(Error::param("at least one seed is required"));
    }
    let runs = exec.map_collect(seeds, |&seed| {
        let p = AnnealParams {
            seed,
            ..params.clone()
        };
        anneal_run(n, e, &p)
    });
    let mut front: ParetoFront<(usize, u64), String> = ParetoFront::new();
    let mut scanned = 0;
    for (k, run) in runs.into_iter().enumerate() {
        let rec = run?.record;
        scanned += rec.scanned;
        for (i, (&(b, t), w)) in rec.pareto.iter().zip(rec.witnesses).enumerate() {
            front.insert(b, t, (k, i as u64), move || w);
        }
    }
    let mut record = FrontierRecord::from_front(n, e, SearchMode::Heuristic, &front, scanned);
    record.book_cap = Some(params.book_cap);
    record.seeds = Some(seeds.to_vec());
    record.rng = Some(RNG_ALGORITHM.to_string());
    Ok(record)
}
