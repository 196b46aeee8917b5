//! Exact `(b, t)` frontier over all labeled graphs with `n` vertices and `e` edges.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Result;
use crate::format::to_graph6;
use crate::par::Exec;

use super::enumerate::{FixedEdgeSpace, KERNEL_LIMIT};
use super::frontier::{FrontierRecord, ParetoFront, SearchMode};

#[derive(Clone, Copy, Default)]
pub struct ScanOptions<'a> {
    pub exec: Exec,
    /// Lifts the `n <= 8` guard (up to the kernel ceiling of 16 vertices).
    pub allow_large: bool,
    /// Receives the running count of scanned graphs after each finished chunk.
    pub progress: Option<&'a (dyn Fn(u64) + Sync)>,
}

/// Frontier of one rank range; keys are ranks, witnesses are filled in at the end.
fn scan_range(space: &FixedEdgeSpace, start: u64, end: u64) -> ParetoFront<u64, ()> {
    let mut front = ParetoFront::new();
    let pairs: Vec<(u8, u8)> = space
        .pairs()
        .iter()
        .map(|&(u, v)| (u as u8, v as u8))
        .collect();
    space.for_each_in(start, end, |rank, comb| {
        let mut rows = [0u16; KERNEL_LIMIT];
        for &i in comb {
            let (u, v) = pairs[i];
            rows[u as usize] |= 1 << v;
            rows[v as usize] |= 1 << u;
        }
        let mut sum = 0u32;
        let mut max = 0u32;
        for &i in comb {
            let (u, v) = pairs[i];
            let c = (rows[u as usize] & rows[v as usize]).count_ones();
            sum += c;
            max = max.max(c);
        }
        let t = (sum / 3) as u64;
        if front.admits(max, t) {
            front.insert(max, t, rank, || ());
        }
    });
    front
}

/// Exhaustive scan of every labeled graph with `n <= 8` vertices and exactly `e` edges.
pub fn extremal_scan(n: usize, e: usize) -> Result<FrontierRecord> {
    extremal_scan_with(n, e, &ScanOptions::default())
}

pub fn extremal_scan_with(n: usize, e: usize, opts: &ScanOptions<'_>) -> Result<FrontierRecord> {
    let space = FixedEdgeSpace::new(n, e, opts.allow_large)?;
    let total = space.total();
    let jobs = if opts.exec.is_parallel() {
        (total / 16_384).clamp(1, opts.exec.split_hint() as u64 * 4)
    } else {
        (total / 1_000_000).clamp(1, 64)
    } as usize;
    let chunk = total.div_ceil(jobs as u64);
    let done = AtomicU64::new(0);

    let front = opts.exec.map_reduce(
        jobs,
        |j| {
            let start = j as u64 * chunk;
            let end = (start + chunk).min(total);
            let f = scan_range(&space, start, end);
            let so_far = done.fetch_add(end.saturating_sub(start), Ordering::Relaxed)
                + end.saturating_sub(start);
            if let Some(report) = opts.progress {
                report(so_far);
            }
            f
        },
        ParetoFront::new,
        ParetoFront::merge,
    );
    let front = front.map_witness(|&rank, ()| to_graph6(&space.graph_at(rank)));
    Ok(FrontierRecord::from_front(
        n,
        e,
        SearchMode::Exhaustive,
        &front,
        total,
    ))
}
