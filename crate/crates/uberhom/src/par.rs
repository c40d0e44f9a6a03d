//! Thin wrappers that switch between rayon data-parallelism and a sequential
//! fallback at compile time.
//!
//! Every wrapper preserves input order in its output, so results are identical
//! (bitwise) with and without the `parallel` feature and for any thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Sums `f` over the integer range `lo..hi` (a commutative reduction, so the
/// parallel split order cannot affect the result).
#[cfg(feature = "parallel")]
pub(crate) fn sum_over_range<F>(lo: u64, hi: u64, f: F) -> i64
where
    F: Fn(u64) -> i64 + Sync + Send,
{
    (lo..hi).into_par_iter().map(f).sum()
}

/// Sums `f` over the integer range `lo..hi`.
#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_over_range<F>(lo: u64, hi: u64, f: F) -> i64
where
    F: Fn(u64) -> i64,
{
    (lo..hi).map(f).sum()
}
