//! Execution strategy for the verification drivers.
//!
//! Every driver is a data-parallel map over independent jobs.  With the
//! `parallel` feature (on by default) jobs run on the rayon thread pool;
//! without it, or with [`Mode::Sequential`], they run in order on the calling
//! thread.  Results are identical either way because each job derives its own
//! random stream.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run a batch of independent jobs.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Mode {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled; otherwise
    /// falls back to sequential execution.
    Parallel,
}

impl Default for Mode {
    fn default() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Maps `f` over `items` under the given mode, preserving order.
pub fn map<T, U, F>(mode: Mode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Mode::Sequential => items.into_iter().map(f).collect(),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order_and_results() {
        let items: Vec<u64> = (0..100).collect();
        let f = |x: u64| x * x + 1;
        let seq = map(Mode::Sequential, items.clone(), f);
        let par = map(Mode::Parallel, items, f);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 101);
    }
}
