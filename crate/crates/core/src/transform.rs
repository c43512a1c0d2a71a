//! Fourier–Borel transforms `F(z) = ∫ e^{−zζ} dμ(ζ)`, their derivatives, and
//! maxima of `|F|` along rays and over sectors.

use crate::measure::{ray_admissible, CompactMeasure};
use crate::optimize::{golden_section_max, lin_space, log_space};
use crate::prelude::*;

/// Highest derivative order [`TransformEvaluator::eval_deriv`] accepts.
pub const MAX_DERIVATIVE_ORDER: u32 = 12;
/// `|∫ dμ|` below this counts as mass zero.
pub const MASS_ZERO_TOL: f64 = 1e-12;
/// Default number of rays in a sector sweep.
pub const DEFAULT_THETA_GRID: usize = 33;

/// Evaluates `F = FB(μ)` from a fixed discretization of `μ`.
#[derive(Debug, Clone)]
pub struct TransformEvaluator {
    measure: CompactMeasure,
    points: Vec<(C64, C64)>,
}

impl TransformEvaluator {
    pub fn new(measure: &CompactMeasure) -> Self {
        Self::with_node_multiplier(measure, 1)
    }

    /// Uses `node_multiplier` times each contour's node count.
    pub fn with_node_multiplier(measure: &CompactMeasure, node_multiplier: usize) -> Self {
        Self { measure: measure.clone(), points: measure.discretize(node_multiplier) }
    }

    pub fn measure(&self) -> &CompactMeasure {
        &self.measure
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.points.iter().map(|(zeta, w)| w * (-z * zeta).exp()).sum()
    }

    /// `F^{(m)}(z) = ∫ (−ζ)^m e^{−zζ} dμ(ζ)` for `1 ≤ m ≤ 12`.
    pub fn eval_deriv(&self, z: C64, m: u32) -> Result<C64> {
        if m == 0 || m > MAX_DERIVATIVE_ORDER {
            return Err(Error::invalid(format!("derivative order {m} not in 1..={MAX_DERIVATIVE_ORDER}")));
        }
        Ok(self.points.iter().map(|(zeta, w)| w * (-zeta).powu(m) * (-z * zeta).exp()).sum())
    }

    /// `∫ e^{−Re(zζ)} d|μ|(ζ)`, an upper bound for `|F(z)|`.
    pub fn decay_bound(&self, z: C64) -> f64 {
        self.points.iter().map(|(zeta, w)| w.norm() * (-(z * zeta).re).exp()).sum()
    }
}

/// `FB(μ)(z)`.
pub fn eval_fb(mu: &CompactMeasure, z: C64) -> C64 {
    TransformEvaluator::new(mu).eval(z)
}

/// `FB(μ)^{(m)}(z)`.
pub fn eval_fb_deriv(mu: &CompactMeasure, z: C64, m: u32) -> Result<C64> {
    TransformEvaluator::new(mu).eval_deriv(z, m)
}

/// Maximum of `|F|` along one ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayMaxResult {
    pub r_star: f64,
    pub value: f64,
    pub location: C64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayMaxOptions {
    pub grid_points: usize,
    pub r_min: f64,
    /// Golden-section bracket width at which refinement stops.
    pub tol: f64,
    pub max_doublings: usize,
}

impl Default for RayMaxOptions {
    fn default() -> Self {
        Self { grid_points: 256, r_min: 1e-4, tol: 1e-10, max_doublings: 40 }
    }
}

fn check_mass_zero(mu: &CompactMeasure) -> Result<()> {
    let m = mu.mass().norm();
    if m > MASS_ZERO_TOL {
        return Err(Error::precondition(format!("measure has mass {m:e}; a maximum along rays need not exist")));
    }
    Ok(())
}

impl TransformEvaluator {
    /// Global maximum of `r ↦ |F(r e^{iθ})|` over `r > 0`.
    ///
    /// A log-spaced grid on `[r_min, r_max]` is searched first; `r_max`
    /// doubles until `∫ e^{−Re(zζ)} d|μ|` at `r_max` drops below the incumbent,
    /// which bounds `|F|` on the rest of the ray. The best bracket is then
    /// refined by golden-section search and polished by Newton steps on
    /// `d|F|²/dr`.
    pub fn ray_max(&self, theta: f64, opts: &RayMaxOptions) -> Result<RayMaxResult> {
        check_mass_zero(&self.measure)?;
        let beta = self.measure.declared_support_half_angle();
        if !ray_admissible(theta, beta) {
            return Err(Error::invalid(format!("ray angle {theta} plus support angle {beta} reaches pi/2")));
        }
        if self.measure.is_empty() {
            return Ok(RayMaxResult { r_star: opts.r_min, value: 0.0, location: C64::from_polar(opts.r_min, theta) });
        }
        let dir = C64::from_polar(1.0, theta);
        let modulus = |r: f64| self.eval(dir * r).norm();

        let mut r_max = 64.0 / (theta.abs() + beta).cos();
        let mut doublings = 0;
        let (grid, values) = loop {
            let grid = log_space(opts.r_min, r_max, opts.grid_points);
            let values: Vec<f64> = grid.iter().map(|&r| modulus(r)).collect();
            let best = values.iter().copied().fold(0.0, f64::max);
            if self.decay_bound(dir * r_max) < best || best == 0.0 && self.decay_bound(dir * r_max) == 0.0 {
                break (grid, values);
            }
            doublings += 1;
            if doublings > opts.max_doublings {
                return Err(Error::numeric("ray search radius did not reach the decay region", Some(best)));
            }
            r_max *= 2.0;
        };
        let k = values.iter().enumerate().fold(0, |b, (i, v)| if *v > values[b] { i } else { b });
        let lo = grid[k.saturating_sub(1)];
        let hi = grid[(k + 1).min(grid.len() - 1)];
        let (mut r, mut v) = golden_section_max(modulus, lo, hi, opts.tol);
        if values[k] > v {
            r = grid[k];
            v = values[k];
        }
        for _ in 0..8 {
            let z = dir * r;
            let f = self.eval(z);
            let d1 = self.eval_deriv(z, 1)? * dir;
            let d2 = self.eval_deriv(z, 2)? * dir * dir;
            let g = (f.conj() * d1).re;
            let dg = d1.norm_sqr() + (f.conj() * d2).re;
            if dg >= 0.0 {
                break;
            }
            let next = r - g / dg;
            if !(next > lo && next < hi) {
                break;
            }
            let vn = modulus(next);
            // near the peak |F| is flat to roundoff, so only reject clear losses
            if vn < v * (1.0 - 4.0 * f64::EPSILON) {
                break;
            }
            let step = (next - r).abs();
            r = next;
            v = vn;
            if step <= 1e-15 * r {
                break;
            }
        }
        Ok(RayMaxResult { r_star: r, value: v, location: dir * r })
    }
}

/// See [`TransformEvaluator::ray_max`].
pub fn ray_max(mu: &CompactMeasure, theta: f64, opts: &RayMaxOptions) -> Result<RayMaxResult> {
    TransformEvaluator::new(mu).ray_max(theta, opts)
}

/// `(b, F(b))` with `b > 0` maximizing `|F|` on the positive reals. `F(b)`
/// keeps its sign; callers negate the measure when it is negative.
pub fn positive_real_max(mu: &CompactMeasure) -> Result<(f64, f64)> {
    if !mu.is_symmetric() {
        return Err(Error::precondition("positive-real maximum needs a symmetric measure"));
    }
    let ev = TransformEvaluator::new(mu);
    let r = ev.ray_max(0.0, &RayMaxOptions::default())?;
    Ok((r.r_star, ev.eval(C64::new(r.r_star, 0.0)).re))
}

/// Supremum of `|F|` over an open sector, with the per-ray maxima behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorSup {
    pub value: f64,
    /// Maximum on the boundary ray `θ = α′` (the larger of `±α′` when the
    /// measure is not symmetric).
    pub boundary_value: f64,
    pub rays: Vec<(f64, RayMaxResult)>,
}

/// `sup_{z ∈ S_{α′}} |F(z)|` as the largest ray maximum over a θ-grid on
/// `[0, α′]` (symmetric measures) or `[−α′, α′]`.
pub fn sector_sup(mu: &CompactMeasure, alpha_prime: f64, theta_points: usize, opts: &RayMaxOptions) -> Result<SectorSup> {
    let beta = mu.declared_support_half_angle();
    if !(alpha_prime > 0.0) || !ray_admissible(alpha_prime, beta) {
        return Err(Error::invalid(format!("sector angle {alpha_prime} plus support angle {beta} reaches pi/2")));
    }
    let n = theta_points.max(2);
    let thetas = if mu.is_symmetric() { lin_space(0.0, alpha_prime, n) } else { lin_space(-alpha_prime, alpha_prime, 2 * n - 1) };
    let ev = TransformEvaluator::new(mu);
    let mut rays = Vec::with_capacity(thetas.len());
    for th in thetas {
        rays.push((th, ev.ray_max(th, opts)?));
    }
    let value = rays.iter().map(|(_, r)| r.value).fold(0.0, f64::max);
    let boundary_value = rays
        .iter()
        .filter(|(th, _)| th.abs() == alpha_prime)
        .map(|(_, r)| r.value)
        .fold(0.0, f64::max);
    Ok(SectorSup { value, boundary_value, rays })
}

/// `max_θ Re(z_θ)` over the ray maximizers `z_θ` for the given angles.
pub fn maximizer_real_part_bound(mu: &CompactMeasure, thetas: &[f64], opts: &RayMaxOptions) -> Result<f64> {
    let ev = TransformEvaluator::new(mu);
    let mut d = 0.0f64;
    for &th in thetas {
        d = d.max(ev.ray_max(th, opts)?.location.re);
    }
    Ok(d)
}
