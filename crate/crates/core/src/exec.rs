//! Execution mode for the data-parallel parts of the crate.
//!
//! Every parallel entry point takes an [`Exec`] value. With the `parallel`
//! feature disabled, [`Exec::Parallel`] silently runs sequentially, so callers
//! never need their own `cfg` gates. Results never depend on the mode: all
//! merges are associative (sum, max, min) and applied in input order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Map `f` over `items`, preserving input order in the output.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order_in_both_modes() {
        let items: Vec<u64> = (0..200).collect();
        let seq = Exec::Sequential.map(items.clone(), |x| x * x);
        let par = Exec::Parallel.map(items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[199], 199 * 199);
    }
}
