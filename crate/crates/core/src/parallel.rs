//! Thin switch between rayon-backed and sequential evaluation. The
//! `parallel` feature (on by default) routes [`map_collect`] through rayon;
//! without it both entry points are sequential. Results preserve input
//! order either way, so callers stay deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, in parallel when the `parallel` feature is enabled.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Always-sequential twin of [`map_collect`]; the benchmark suite compares
/// the two.
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Size the global worker pool. A no-op without the `parallel` feature or
/// when a pool already exists.
pub fn configure_jobs(jobs: Option<usize>) {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = jobs {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}
