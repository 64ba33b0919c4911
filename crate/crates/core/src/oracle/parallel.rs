use rayon::prelude::*;

/// How sampling loops are scheduled. Results are collected in index order,
/// so every choice produces identical output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Parallelism {
    #[default]
    Serial,
    /// Rayon's global pool.
    Global,
    /// A dedicated pool with this many threads.
    Threads(usize),
}

impl Parallelism {
    pub fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match *self {
            Parallelism::Serial => (0..n).map(f).collect(),
            Parallelism::Global => (0..n).into_par_iter().map(f).collect(),
            Parallelism::Threads(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
                Ok(pool) => pool.install(|| (0..n).into_par_iter().map(&f).collect()),
                Err(_) => (0..n).map(f).collect(),
            },
        }
    }
}
