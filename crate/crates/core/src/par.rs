//! Ordered map over a slice that runs on the rayon pool when the `parallel`
//! feature is enabled and the caller asks for it, and sequentially otherwise.
//! Output order always follows input order.

use crate::error::Result;

pub(crate) fn try_map<T, U, F>(items: &[T], parallel: bool, f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    items.iter().map(f).collect()
}

pub(crate) fn map<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    try_map(items, parallel, |t| Ok(f(t))).expect("infallible")
}

/// Whether this build can run anything in parallel at all.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
