//! Data-parallel helpers. With the `parallel` feature the work runs on the
//! rayon pool when asked to; otherwise everything is a plain sequential loop.
//! Output order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_vec<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        return items.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}

pub fn map_range<R, F>(n: usize, parallel: bool, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel && n > 1 {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

pub fn enabled() -> bool {
    cfg!(feature = "parallel")
}
