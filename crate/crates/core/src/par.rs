//! Data-parallel map helper: rayon when the `parallel` feature is enabled,
//! plain iteration otherwise. Both code paths are kept compilable so the
//! bench suite can compare them directly.

/// Map over items, collecting results in input order.
#[cfg(feature = "parallel")]
pub fn maybe_par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn maybe_par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Sequential map with the same signature, for benchmarking against the
/// parallel path.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
