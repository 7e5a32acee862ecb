//! Trial-level data parallelism.
//!
//! Each trial is a pure function of its index, so results are identical
//! whether trials run on the rayon pool or one after another.

/// Runs `f(0), …, f(trials − 1)` and returns the results in index order.
#[cfg(feature = "parallel")]
pub fn map_trials<T, F>(trials: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..trials).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_trials<T, F>(trials: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    map_trials_sequential(trials, f)
}

pub fn map_trials_sequential<T, F>(trials: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..trials).map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
