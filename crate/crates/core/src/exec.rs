//! Data-parallel helpers with a sequential fallback.
//!
//! The `parallel` feature (default) routes bulk scans through rayon; without
//! it the same entry points run sequentially. Results are collected in input
//! order, so verdicts never depend on the schedule. The `*_seq` variants stay
//! available under the feature for benchmarking both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_collect_par<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Order-preserving map over a slice; parallel when the feature is on.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_collect_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(items, f)
    }
}

/// Runs `f` over index chunks of `0..len`; parallel when the feature is on.
pub fn map_ranges<U, F>(len: usize, chunk: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(std::ops::Range<usize>) -> U + Sync + Send,
{
    let ranges: Vec<std::ops::Range<usize>> = (0..len)
        .step_by(chunk.max(1))
        .map(|lo| lo..(lo + chunk).min(len))
        .collect();
    #[cfg(feature = "parallel")]
    {
        ranges.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.into_iter().map(f).collect()
    }
}
