//! Contiguous range partitioning over scoped threads.

use std::ops::Range;
use std::thread;

/// Splits `range` into at most `parts` contiguous, ordered, non-empty pieces.
pub fn split_range(range: Range<u64>, parts: usize) -> Vec<Range<u64>> {
    let len = range.end.saturating_sub(range.start);
    let parts = (parts.max(1) as u64).min(len.max(1));
    let base = len / parts;
    let extra = len % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut lo = range.start;
    for k in 0..parts {
        let hi = lo + base + u64::from(k < extra);
        if hi > lo {
            out.push(lo..hi);
        }
        lo = hi;
    }
    out
}

/// Runs `f` on each piece, one thread per piece, returning results in
/// piece order. A single piece runs on the calling thread.
pub fn map_ranges<T, F>(pieces: Vec<Range<u64>>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    if pieces.len() <= 1 {
        return pieces.into_iter().map(&f).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = pieces
            .into_iter()
            .map(|r| {
                let f = &f;
                s.spawn(move || f(r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Applies `f` to every item using up to `workers` threads, keeping input
/// order in the output.
pub fn map_items<I, T, F>(items: &[I], workers: usize, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    let pieces = split_range(0..items.len() as u64, workers);
    map_ranges(pieces, |r| {
        items[r.start as usize..r.end as usize]
            .iter()
            .map(&f)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Worker count from `DELSUB_WORKERS`, defaulting to 1.
pub fn workers_from_env() -> usize {
    std::env::var("DELSUB_WORKERS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or(1)
}
