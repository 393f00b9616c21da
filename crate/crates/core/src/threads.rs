//! Worker-thread configuration.

/// Environment variable capping worker parallelism. `0` or unset means
/// auto-detect; anything else must be a positive thread count.
pub const THREADS_ENV: &str = "RANDIC_LAB_THREADS";

/// Apply `RANDIC_LAB_THREADS` to the global rayon pool. Returns the cap that
/// was applied, if any. Safe to call more than once; only the first
/// configuration wins, and results never depend on the pool size anyway.
pub fn init_thread_pool_from_env() -> Option<usize> {
    let cap = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)?;
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cap).build_global();
    Some(cap)
}
