//! Data-parallel helpers. With the `parallel` feature the work is spread over a rayon
//! pool; without it everything runs on the calling thread.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `f` applied to each value of the range, results in range order.
pub fn map_range<T, F>(range: Range<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}

/// `f` applied to each item, results in input order.
pub fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
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

/// Runs `f` with at most `jobs` worker threads (`None` uses the default pool).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kept() {
        let v = with_jobs(Some(3), || map_range(0..100, |x| x * x));
        assert_eq!(v, (0..100).map(|x| x * x).collect::<Vec<_>>());
        let w = map_slice(&["a", "bb"], |s| s.len());
        assert_eq!(w, vec![1, 2]);
    }
}
