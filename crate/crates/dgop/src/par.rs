//! Thin switch between rayon and sequential iteration.
//!
//! With the `parallel` feature (default) the work distributes over rayon's
//! global pool; without it the same helpers run sequentially, so the crate
//! builds and behaves identically minus the speedup.

#[cfg(feature = "parallel")]
pub fn flat_map_vec<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().flat_map_iter(|t| f(t)).collect()
    } else {
        items.iter().flat_map(|t| f(t)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map_vec<T, U, F>(items: &[T], _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> Vec<U>,
{
    items.iter().flat_map(|t| f(t)).collect()
}

#[cfg(feature = "parallel")]
pub fn map_vec<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(|t| f(t)).collect()
    } else {
        items.iter().map(|t| f(t)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F>(items: &[T], _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(|t| f(t)).collect()
}
