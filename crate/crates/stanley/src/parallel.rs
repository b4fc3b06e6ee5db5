//! Multi-threaded partition search.
//!
//! The root alternatives of the exact-cover search are handed out in order
//! to a pool of scoped threads. The partition returned is the one from the
//! lowest-numbered successful branch, which is what the sequential search
//! finds, so results do not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use stanley_core::poset::{
    sdepth_in_box_by, CellBox, CharacteristicPoset, IntervalPartition, PartitionSearch, Witness,
};
use stanley_core::QuotientModule;

/// `find_partition` spread over `threads` workers.
pub fn find_partition_par(
    poset: &CharacteristicPoset,
    k: usize,
    threads: usize,
) -> Option<IntervalPartition> {
    let search = PartitionSearch::new(poset, k);
    let branches = search.root_branches();
    if threads <= 1 || branches <= 1 {
        return search.solve();
    }
    let next = AtomicUsize::new(0);
    let cutoff = AtomicUsize::new(usize::MAX);
    let found: Mutex<Vec<(usize, IntervalPartition)>> = Mutex::new(Vec::new());
    thread::scope(|s| {
        for _ in 0..threads.min(branches) {
            s.spawn(|| loop {
                let b = next.fetch_add(1, Ordering::Relaxed);
                // branches are claimed in increasing order, so every branch
                // below the cutoff is searched by someone
                if b >= branches || b > cutoff.load(Ordering::Acquire) {
                    return;
                }
                if let Some(p) = search.solve_branch(b) {
                    cutoff.fetch_min(b, Ordering::AcqRel);
                    found.lock().expect("no worker panics").push((b, p));
                    return;
                }
            });
        }
    });
    found
        .into_inner()
        .expect("no worker panics")
        .into_iter()
        .min_by_key(|&(b, _)| b)
        .map(|(_, p)| p)
}

/// Exact Stanley depth in the given box using `threads` workers per search.
pub fn sdepth_par(module: &QuotientModule, cbox: &CellBox, threads: usize) -> stanley_core::Result<Witness> {
    sdepth_in_box_by(module, cbox, |p, k| find_partition_par(p, k, threads))
}

/// Worker count: the explicit value, else `STANLEY_THREADS`, else the
/// available parallelism.
pub fn resolve_threads(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| std::env::var("STANLEY_THREADS").ok()?.parse().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, usize::from))
}
