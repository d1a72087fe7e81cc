//! Data-parallel helpers over index ranges.
//!
//! With the `parallel` feature the `Exec::Parallel` mode runs on rayon; without
//! it every call runs sequentially. Results never depend on the mode.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Ordered map over `range`.
pub fn map<T, F>(exec: Exec, range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// First (lowest index) `Some` produced by `f`.
pub fn find_first<T, F>(exec: Exec, range: Range<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().filter_map(f).find_first(|_| true);
    }
    let _ = exec;
    range.into_iter().find_map(f)
}

pub fn all<F>(exec: Exec, range: Range<usize>, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().all(f);
    }
    let _ = exec;
    range.into_iter().all(f)
}

/// Map then fold with an associative, commutative combiner.
pub fn map_reduce<T, F, R>(exec: Exec, range: Range<usize>, identity: T, f: F, reduce: R) -> T
where
    T: Send + Sync + Clone,
    F: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).reduce(|| identity.clone(), &reduce);
    }
    let _ = exec;
    range.into_iter().map(f).fold(identity, reduce)
}
