//! Execution strategy for the exhaustive and sampled checks.
//!
//! With the `parallel` feature (on by default) checks fan out over rayon's
//! global pool; without it everything runs on the calling thread. Both
//! strategies return identical results, including which counterexample is
//! reported first.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    /// Every strategy compiled into this build.
    pub fn all() -> Vec<Exec> {
        vec![
            Exec::Sequential,
            #[cfg(feature = "parallel")]
            Exec::Parallel,
        ]
    }

    /// First `Some` in slice order.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().find_map(f),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().find_map_first(f),
        }
    }

    /// First `Some` over `0..n` in index order.
    pub fn find_map_first_index<R, F>(self, n: usize, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).find_map(f),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().find_map_first(f),
        }
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Order-preserving map over `0..n`.
    pub fn map_index<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    pub fn sum<T, F>(self, items: &[T], f: F) -> u64
    where
        T: Sync,
        F: Fn(&T) -> u64 + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).sum(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).sum(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_first_hit() {
        let items: Vec<u32> = (0..10_000).collect();
        for exec in Exec::all() {
            let hit = exec.find_map_first(&items, |&x| (x % 977 == 500).then_some(x));
            assert_eq!(hit, Some(500));
            let hit = exec.find_map_first_index(items.len(), |i| (i > 9000).then_some(i));
            assert_eq!(hit, Some(9001));
            assert_eq!(exec.map(&items[..4], |x| x * 2), vec![0, 2, 4, 6]);
            assert_eq!(exec.map_index(3, |i| i + 1), vec![1, 2, 3]);
            assert_eq!(exec.sum(&items[..5], |&x| x as u64), 10);
        }
    }
}
