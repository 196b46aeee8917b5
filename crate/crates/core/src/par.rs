//! Execution strategy for the data-parallel loops (exhaustive scans, batch
//! statistics, multi-seed annealing, sweeps).
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! pool of the calling thread; without it every strategy runs sequentially.
//! Results never depend on the strategy: jobs are reduced in index order with
//! an associative merge.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this strategy will actually fan out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Runs `map` on every job index in `0..jobs` and folds the results with `merge`,
    /// left to right.
    pub fn map_reduce<R, M, I, F>(self, jobs: usize, map: M, identity: I, merge: F) -> R
    where
        R: Send,
        M: Fn(usize) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        F: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..jobs).into_par_iter().map(map).reduce(identity, merge);
        }
        (0..jobs).map(map).fold(identity(), merge)
    }

    /// Maps every item, preserving order.
    pub fn map_collect<T, R, M>(self, items: &[T], map: M) -> Vec<R>
    where
        T: Sync,
        R: Send,
        M: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(map).collect();
        }
        items.iter().map(map).collect()
    }

    /// Suggested number of jobs to split a workload into.
    pub fn split_hint(self) -> usize {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return rayon::current_num_threads() * 8;
        }
        1
    }
}
