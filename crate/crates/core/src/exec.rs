#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How an exhaustive sweep is scheduled.
///
/// `Parallel` splits the index range across the rayon pool. Without the
/// `parallel` feature it runs the sequential loop. Results never depend on
/// the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub(crate) fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Lowest index for which `f` yields `Some`, with its value.
    pub(crate) fn find_first<T, F>(self, len: usize, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().find_map_first(f),
            _ => (0..len).find_map(f),
        }
    }

    pub(crate) fn fold<A, I, F, R>(self, len: usize, init: I, fold: F, reduce: R) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, usize) -> A + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len)
                .into_par_iter()
                .fold(&init, &fold)
                .reduce(&init, &reduce),
            _ => {
                let _ = &reduce;
                (0..len).fold(init(), fold)
            }
        }
    }
}
