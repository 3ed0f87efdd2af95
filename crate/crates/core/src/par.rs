//! Data-parallel sweeps over instance indices.
//!
//! With the `rayon` feature the parallel mode runs on the rayon pool; without
//! it every sweep is a plain loop. Results always come back in index order.

#[cfg(feature = "rayon")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn available() -> bool {
        cfg!(feature = "rayon")
    }
}

/// `f(i)` for every `i` in `0..n`, in index order.
pub fn map_range<T, F>(n: u64, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "rayon")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// `f` over a slice, in order.
pub fn map_slice<S, T, F>(items: &[S], exec: Execution, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "rayon")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Smallest `i < n` with `pred(i)`.
pub fn find_first<F>(n: u64, exec: Execution, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "rayon")]
        Execution::Parallel => (0..n).into_par_iter().find_first(|&i| pred(i)),
        _ => (0..n).find(|&i| pred(i)),
    }
}

/// Number of `i < n` with `pred(i)`.
pub fn count<F>(n: u64, exec: Execution, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "rayon")]
        Execution::Parallel => (0..n).into_par_iter().filter(|&i| pred(i)).count() as u64,
        _ => (0..n).filter(|&i| pred(i)).count() as u64,
    }
}

/// Runs `f` on a pool of `jobs` threads (0 = rayon's default).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "rayon")]
    if jobs > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}
