//! Data-parallel helpers with a sequential fallback.
//!
//! Certification work is embarrassingly parallel over blocks, ball centers
//! and trials. Every hot loop funnels through [`map_collect`], so disabling
//! the `parallel` feature swaps in the sequential path everywhere at once.
//! Reductions happen on the collected results in index order, which keeps
//! reports byte-identical regardless of scheduling.

/// Execution strategy for data-parallel loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[cfg_attr(feature = "parallel", default)]
    Parallel,
}

/// Applies `f` to `0..n` and collects results in index order.
pub fn map_collect<T, F>(n: usize, mode: ExecMode, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
    }
}

/// Applies `f` to each item of a slice, collecting in order.
pub fn map_slice<T, U, F>(items: &[T], mode: ExecMode, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = map_collect(100, ExecMode::Sequential, |i| i * i);
        #[cfg(feature = "parallel")]
        {
            let par = map_collect(100, ExecMode::Parallel, |i| i * i);
            assert_eq!(seq, par);
        }
        assert_eq!(seq[7], 49);
    }
}
