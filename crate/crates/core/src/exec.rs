//! Shard execution: rayon when the `parallel` feature is on and more than
//! one worker is requested, a plain loop otherwise. Results always come back
//! in shard order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// The global rayon pool.
    #[default]
    Parallel,
    /// A dedicated pool with this many threads.
    Workers(usize),
}

impl Exec {
    pub fn workers(k: usize) -> Self {
        if k <= 1 {
            Exec::Sequential
        } else {
            Exec::Workers(k)
        }
    }

    pub fn map<T, F>(self, shards: Vec<u32>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u32) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            match self {
                Exec::Sequential => {}
                Exec::Parallel => return shards.into_par_iter().map(f).collect(),
                Exec::Workers(k) => {
                    if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                        return pool.install(|| shards.into_par_iter().map(&f).collect());
                    }
                }
            }
        }
        shards.into_iter().map(f).collect()
    }
}
