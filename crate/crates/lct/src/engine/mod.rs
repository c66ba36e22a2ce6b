//! Sampled transforms, unitarity diagnostics and independent oracles.
//!
//! Work is spread over a rayon pool whose size is read once from
//! `LCT_THREADS` (default: all cores). Every reduction runs in a fixed order
//! with compensated sums, so results do not depend on the thread count.

mod apply;
mod defect;
mod grid;
mod oracles;
mod probes;
mod report;
pub mod suite;

pub use apply::{
    apply_classic, apply_cont_radial, apply_discrete, apply_jplus, apply_radial, apply_two_component, classic_matrix,
    cont_radial_matrix, grid_too_coarse, jplus_matrix, radial_matrix, resolving_nodes, DiscreteImage, KernelMatrix,
};
pub use defect::{probe_subspace_defect, unitarity_defect};
pub use grid::{Grid, GridKind, GRADED_PANELS, PANEL_NODES};
pub use oracles::{
    b_limit_study, b_limit_study_continuous, composition_sign, mellin_oracle, mellin_oracle_continuous, CompositionOutcome,
    CompositionSign, LimitFamily, LimitStudy, MellinEstimate, MellinOptions,
};
pub use probes::{continuous_probes, hermite_function, hermite_probes, laguerre_probes};
pub use report::{TransformReport, SCHEMA_VERSION};
pub use signal::{SampledFunction, TwoComponentSampled};

mod signal;

use std::sync::OnceLock;

/// The shared worker pool, sized by `LCT_THREADS` when set to a positive
/// integer.
pub fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("LCT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0).unwrap_or(0);
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
    })
}
