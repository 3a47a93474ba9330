//! One module per core module. Each exposes `checks()` plus the sampling
//! routines behind them, so the acceptance tests can drive the same code at
//! pinned sizes.

pub mod bbf;
pub mod chow;
pub mod epw;
pub mod exterior;
pub mod incidence;
pub mod quadrics;
pub mod schubert;

/// `k/n` rendering used in expected/got strings.
pub(crate) fn frac(k: usize, n: usize) -> String {
    format!("{k}/{n}")
}
