//! Ordered map over independent tasks.
//!
//! With the `parallel` feature the work runs on a dedicated rayon pool;
//! without it (or with one worker) it runs on the calling thread. Results
//! always come back in input order.

/// Number of workers to use when the caller asks for "all".
pub fn available_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Maps `f` over `items`, preserving order. `workers == 0` means all cores.
pub fn map_ordered<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    let workers = if workers == 0 {
        available_workers()
    } else {
        workers
    };
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    run_parallel(items, workers, f)
}

#[cfg(feature = "parallel")]
fn run_parallel<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;

    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(e) => {
            log::warn!("could not build a {workers}-thread pool ({e}); running sequentially");
            items.iter().map(f).collect()
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<T, R, F>(items: &[T], _workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
