//! Execution strategy for embarrassingly parallel maps.
//!
//! Every bulk operation in this crate (grid sweeps, Gram batteries,
//! Monte-Carlo batches, tabulation) is a pure map over an ordered task
//! list followed by an order-preserving sequential reduction. With the
//! `parallel` feature (on by default) the map runs on the rayon thread
//! pool; without it, sequentially. Either way the output vector is in
//! task order, so downstream folds — and therefore all published numbers
//! — are bit-identical across thread counts and feature choices.

/// Map `f` over `items`, preserving order; parallel when the `parallel`
/// feature is enabled.
#[cfg(feature = "parallel")]
pub(crate) fn ordered_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Map `f` over `items`, preserving order; parallel when the `parallel`
/// feature is enabled.
#[cfg(not(feature = "parallel"))]
pub(crate) fn ordered_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Always-sequential twin of [`ordered_map`], kept available regardless of
/// features so benchmarks and reproducibility tests can compare the two
/// execution strategies within one build.
pub(crate) fn ordered_map_serial<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
