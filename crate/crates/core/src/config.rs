//! Run-wide numeric configuration.
//!
//! Every verdict and profile the library emits is meaningless without the
//! truncation order and the tolerances that produced it, so a [`RunConfig`]
//! is carried along and serialized into all output artifacts.

use serde::{Deserialize, Serialize};

/// Hard ceiling on the truncation order accepted from the CLI.
pub const MAX_ORDER: usize = 8192;

/// Numeric knobs shared by the whole pipeline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    /// Truncation order N: number of Taylor coefficients carried.
    pub order: usize,
    /// Default node count for interior-circle quadrature and winding numbers.
    pub quad_k: usize,
    /// Node count for boundary (r = 1) geometric-mean quadrature.
    pub boundary_k: usize,
    /// Half-width of the Borderline band around radius 1 in Hadamard tests.
    pub delta_band: f64,
    /// Moduli at or below this are treated as exactly zero.
    pub zero_floor: f64,
    /// Coefficients below this are discarded by the radius slope fit.
    pub slope_floor: f64,
    /// Minimal distance from λ to a recurrence pole m(0)βⁿ.
    pub pole_tol: f64,
    /// Snap distance when testing λ against the forced orbit m(0)βⁿ.
    pub snap_tol: f64,
    /// Exhaustive denominator bound for diophantine verification.
    pub gamma_check_depth: u64,
    /// Worker threads for grid classification (0 = rayon default).
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 256,
            quad_k: 4096,
            boundary_k: 1 << 16,
            delta_band: 0.05,
            zero_floor: 1e-300,
            slope_floor: 1e-280,
            pole_tol: 1e-9,
            snap_tol: 1e-9,
            gamma_check_depth: 1_000_000,
            threads: 0,
        }
    }
}

impl RunConfig {
    /// Undetermined band half-width around a Jensen-radius threshold.
    pub fn band(&self, radius: f64) -> f64 {
        (0.02 * radius).max(1e-3)
    }
}
