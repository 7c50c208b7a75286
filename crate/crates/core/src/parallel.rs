//! Order-preserving data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (on by default) work is spread over a rayon
//! pool; without it every [`Parallelism`] setting runs sequentially. Output
//! order always matches input order, so results never depend on the degree.

/// Degree of parallelism for batch operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    /// A dedicated pool with this many threads (`0` and `1` mean sequential).
    Threads(usize),
    /// The global pool, sized to the available cores.
    #[default]
    Available,
}

impl Parallelism {
    pub fn from_threads(threads: Option<usize>) -> Self {
        match threads {
            None => Parallelism::Available,
            Some(0 | 1) => Parallelism::Sequential,
            Some(n) => Parallelism::Threads(n),
        }
    }

    pub fn is_sequential(self) -> bool {
        matches!(self, Parallelism::Sequential | Parallelism::Threads(0 | 1))
            || !cfg!(feature = "parallel")
    }
}

/// Map `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], parallelism: Parallelism, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    if parallelism.is_sequential() {
        return items.iter().map(f).collect();
    }
    imp::map(items, parallelism, f)
}

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;

    use super::Parallelism;

    pub(super) fn map<T, U, F>(items: &[T], parallelism: Parallelism, f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match parallelism {
            Parallelism::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                // pool creation can fail under resource limits; fall back
                Err(_) => items.iter().map(f).collect(),
            },
            _ => items.par_iter().map(f).collect(),
        }
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    use super::Parallelism;

    pub(super) fn map<T, U, F>(items: &[T], _parallelism: Parallelism, f: F) -> Vec<U>
    where
        F: Fn(&T) -> U,
    {
        items.iter().map(f).collect()
    }
}
