//! Reference values computed offline and frozen here.
//!
//! Both were obtained with mpmath at 30 significant digits, by brute-force
//! search independent of this crate's optimizers.

/// `sup` of `|e^{-z} − e^{-2z}|` over the sector `|arg z| < π/6`.
///
/// Attained on the boundary ray at `|z| = 0.790021572394520`.
pub const SECTOR_SUP_PI_6: f64 = 0.286_821_828_256_003_8;

/// Smallest `n` for which `‖uAT(u)‖ > 1/e` at `u = 0.1` on the Jordan
/// surrogate `A = cN`, `c = n`.
///
/// Values: `n = 3: 0.3484`, `n = 4: 0.5303`.
pub const JORDAN_CROSSING_DIM: usize = 4;

/// `|ρ − 1/4|` allowed on the 4096-point diagonal grid.
pub const GRID_RHO_TOL: f64 = 1e-4;

/// Agreement required between sampled spectral radii and ray maxima.
pub const SHARPNESS_TOL: f64 = 5e-4;

pub const IDENTITY_TOL: f64 = 1e-7;

pub const REGION_FORMULA_TOL: f64 = 1e-10;

/// Location tolerance for maxima on the positive axis.
pub const ARGMAX_TOL: f64 = 1e-8;
