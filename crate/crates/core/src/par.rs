//! Data-parallel helpers; plain loops when the `parallel` feature is off.

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn try_map_slice<T, U, F>(items: &[T], f: F) -> crate::error::Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> crate::error::Result<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map_slice<T, U, F>(items: &[T], f: F) -> crate::error::Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> crate::error::Result<U> + Sync + Send,
{
    items.iter().map(f).collect()
}
