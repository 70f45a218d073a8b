//! Range-partitioned sweeps with a sequential fallback.

use std::ops::Range;

use crate::config::Execution;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const CHUNKS: u64 = 256;

fn chunk_bounds(total: u64) -> Vec<Range<u64>> {
    let chunks = total.clamp(1, CHUNKS);
    let step = total.div_ceil(chunks).max(1);
    (0..chunks)
        .map(|c| (c * step).min(total)..((c + 1) * step).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Folds `fold` over `0..total`, splitting the index space into contiguous
/// chunks when running in parallel. `merge` must be associative with
/// `identity()` as its unit; the result is then independent of the split.
pub(crate) fn fold_range<T, I, F, M>(
    exec: Execution,
    total: u64,
    identity: I,
    fold: F,
    merge: M,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => fold(identity(), 0..total),
        Execution::Parallel => parallel_fold(total, identity, fold, merge),
    }
}

#[cfg(feature = "parallel")]
fn parallel_fold<T, I, F, M>(total: u64, identity: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    chunk_bounds(total)
        .into_par_iter()
        .map(|r| fold(identity(), r))
        .reduce(&identity, &merge)
}

#[cfg(not(feature = "parallel"))]
fn parallel_fold<T, I, F, M>(total: u64, identity: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    chunk_bounds(total)
        .into_iter()
        .map(|r| fold(identity(), r))
        .fold(identity(), merge)
}

/// Maps `f` over `items`, preserving order.
pub(crate) fn map_ordered<A, B, F>(exec: Execution, items: &[A], f: F) -> Vec<B>
where
    A: Sync,
    B: Send,
    F: Fn(&A) -> B + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range_exactly() {
        for total in [0u64, 1, 5, 255, 256, 257, 1000, 5040] {
            let bounds = chunk_bounds(total);
            let mut next = 0;
            for r in &bounds {
                assert_eq!(r.start, next);
                next = r.end;
            }
            assert_eq!(next, total);
        }
    }

    #[test]
    fn split_does_not_change_sum() {
        let f = |acc: u64, r: Range<u64>| acc + r.map(|i| i * i).sum::<u64>();
        let seq = fold_range(Execution::Sequential, 10_000, || 0, f, |a, b| a + b);
        let par = fold_range(Execution::Parallel, 10_000, || 0, f, |a, b| a + b);
        assert_eq!(seq, par);
    }
}
