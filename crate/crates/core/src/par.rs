//! Data-parallel helpers. With the default `parallel` feature these fan
//! out over rayon's current pool; without it they are plain sequential
//! loops. Results keep input order either way, so outputs never depend on
//! the thread count.

#[cfg(feature = "parallel")]
pub fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Cap the global worker pool from the SYMFLEX_THREADS environment
/// variable. A no-op when unset, unparsable, or when a pool already
/// exists; a no-op build without the `parallel` feature.
pub fn apply_thread_cap_from_env() {
    #[cfg(feature = "parallel")]
    {
        if let Ok(value) = std::env::var("SYMFLEX_THREADS") {
            if let Ok(threads) = value.trim().parse::<usize>() {
                if threads >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build_global();
                }
            }
        }
    }
}
