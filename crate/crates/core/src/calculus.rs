//! The functional calculus `F(−uA) = ∫ T(uζ) dμ(ζ)` and the identity,
//! bound and probe checks built on it.

use core::f64::consts::{FRAC_PI_2, PI};

use crate::linalg::{op_norm, spec_radius, Operator};
use crate::measure::CompactMeasure;
use crate::operator::SemigroupModel;
use crate::optimize::{lin_space, log_space};
use crate::prelude::*;
use crate::quadrature::GaussLegendre;
use crate::transform::{sector_sup, RayMaxOptions, TransformEvaluator, DEFAULT_THETA_GRID, MASS_ZERO_TOL};

/// Contour node-doubling error above `QUAD_TOL·max(1, ‖F(−uA)‖)` after
/// two doublings is a numeric failure.
pub const QUAD_TOL: f64 = 1e-6;
/// Default Gauss–Legendre order for integrals over `s ∈ [0, 1]`.
pub const DEFAULT_S_ORDER: usize = 32;
/// Order used to estimate the error of the default s-rule.
pub const CHECK_S_ORDER: usize = 48;
/// Slack in the hypothesis verdict of [`hypothesis_check`].
pub const HYPOTHESIS_TOL: f64 = 5e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct CalculusResult {
    pub matrix: Operator,
    /// Change under contour node doubling; zero for atomic measures.
    pub quad_error: f64,
    pub u: C64,
}

/// `‖M‖₂`, falling back to the Frobenius norm if power iteration stalls.
fn norm_of(m: &Operator) -> f64 {
    match op_norm(m) {
        Ok(v) => v,
        Err(_) => m.to_dense().norm_frobenius(),
    }
}

/// Checks that `uζ` is admissible for every `ζ` in the support of `μ`.
fn check_domain(model: &SemigroupModel, mu: &CompactMeasure, u: C64) -> Result<()> {
    if !(u.re.is_finite() && u.im.is_finite()) {
        return Err(Error::invalid("u must be finite"));
    }
    for a in mu.atoms() {
        if !model.admits(u * a.location) {
            return Err(Error::DomainViolation(format!("u·ζ = {} is outside the model's sector", u * a.location)));
        }
    }
    for c in mu.contours() {
        if !model.admits_circle(u * c.center, u.norm() * c.radius) {
            return Err(Error::DomainViolation("u times a contour circle leaves the model's sector".into()));
        }
    }
    Ok(())
}

fn weighted_sum(model: &SemigroupModel, pts: &[(C64, C64)], u: C64) -> Result<Operator> {
    let mut acc = Operator::zeros(model.dim(), model.is_diagonal());
    for (zeta, w) in pts {
        acc.axpy(*w, &model.semigroup_unchecked(u * zeta)?);
    }
    Ok(acc)
}

/// `F(−uA) = Σ c_k T(uζ_k) + Σ_j w_j T(uζ_j)` over atoms and contour nodes.
pub fn functional_calculus(model: &SemigroupModel, mu: &CompactMeasure, u: C64) -> Result<CalculusResult> {
    check_domain(model, mu, u)?;
    let atoms: Vec<(C64, C64)> = mu.atoms().iter().map(|a| (a.location, a.weight)).collect();
    let atomic = weighted_sum(model, &atoms, u)?;
    if mu.is_atomic() {
        return Ok(CalculusResult { matrix: atomic, quad_error: 0.0, u });
    }
    let contour_part = |mult: usize| -> Result<Operator> {
        let pts: Vec<(C64, C64)> = mu.contours().iter().flat_map(|c| c.quadrature(c.nodes * mult)).collect();
        weighted_sum(model, &pts, u)
    };
    let mut prev = contour_part(1)?;
    let mut err = f64::INFINITY;
    for mult in [2, 4] {
        let cur = contour_part(mult)?;
        err = norm_of(&cur.sub(&prev));
        let mut total = atomic.clone();
        total.axpy(C64::new(1.0, 0.0), &prev);
        if err <= QUAD_TOL * norm_of(&total).max(1.0) {
            return Ok(CalculusResult { matrix: total, quad_error: err, u });
        }
        prev = cur;
    }
    Err(Error::numeric("contour quadrature did not converge after two doublings", Some(err)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResidual {
    /// `‖(F(−uA) − F(λ)I) − (uA + λI)∫₀¹∫ T(sζu)e^{(s−1)ζλ}ζ dμ ds‖`.
    pub residual: f64,
    /// `‖F(−uA) − F(λ)I‖`, for scale.
    pub lhs_norm: f64,
    /// Change in the right-hand side between the requested s-order and
    /// [`CHECK_S_ORDER`] (or `1.5×` the requested order if larger).
    pub order_change: f64,
}

/// Checks `F(−uA) − F(λ)I = (uA + λI)∫₀¹∫ T(sζu) e^{(s−1)ζλ} ζ dμ(ζ) ds`
/// in its product form, so a singular `uA + λI` is allowed.
pub fn identity_residual(
    model: &SemigroupModel,
    mu: &CompactMeasure,
    u: C64,
    lambda: C64,
    quad_order: usize,
) -> Result<IdentityResidual> {
    if quad_order < 8 {
        return Err(Error::invalid(format!("s-quadrature order {quad_order} is below 8")));
    }
    if !(lambda.re.is_finite() && lambda.im.is_finite()) {
        return Err(Error::invalid("lambda must be finite"));
    }
    check_domain(model, mu, u)?;
    let pts = mu.discretize(1);
    let f_lambda = TransformEvaluator::new(mu).eval(lambda);

    let mut lhs = weighted_sum(model, &pts, u)?;
    lhs.add_identity(-f_lambda);

    let mut shifted = model.generator().scale(u);
    shifted.add_identity(lambda);
    let rhs_at = |order: usize| -> Result<Operator> {
        let gl = GaussLegendre::new(order)?;
        let mut inner = Operator::zeros(model.dim(), model.is_diagonal());
        for (s, g) in gl.iter() {
            for (zeta, w) in &pts {
                let scalar = w * zeta * ((s - 1.0) * zeta * lambda).exp() * g;
                inner.axpy(scalar, &model.semigroup_unchecked(u * zeta * s)?);
            }
        }
        Ok(shifted.matmul(&inner))
    };
    let rhs = rhs_at(quad_order)?;
    let check = rhs_at(CHECK_S_ORDER.max(quad_order + quad_order / 2))?;
    Ok(IdentityResidual {
        residual: norm_of(&lhs.sub(&rhs)),
        lhs_norm: norm_of(&lhs),
        order_change: norm_of(&rhs.sub(&check)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventBound {
    /// `‖(F(−uA) − F(λ)I)(uA + λI)^{-1}‖`.
    pub lhs: f64,
    /// `C·∫|ζ| d|μ|`.
    pub rhs: f64,
    /// `C = B · exp_sup`.
    pub c: f64,
    /// Largest sampled `‖T(suζ)‖`.
    pub b: f64,
    /// `sup |e^{(s−1)ζλ}|` over `s ∈ [0, 1]` and the support samples.
    pub exp_sup: f64,
    pub abs_moment: f64,
    pub pass: bool,
}

/// Samples of `B`: 16 values of `s` times up to 16 support points.
const B_S_SAMPLES: usize = 16;
const B_SUPPORT_SAMPLES: usize = 16;

/// The bound `‖(F(−uA) − F(λ)I)(uA+λI)^{-1}‖ ≤ C ∫|ζ| d|μ|` with `C`
/// computed from samples of the semigroup and of the support.
pub fn resolvent_bound_check(model: &SemigroupModel, mu: &CompactMeasure, u: C64, lambda: C64) -> Result<ResolventBound> {
    if !(lambda.norm() <= 1.0) {
        return Err(Error::invalid(format!("|lambda| = {} exceeds 1", lambda.norm())));
    }
    if u.norm() == 0.0 {
        return Err(Error::invalid("u must be nonzero"));
    }
    let f = functional_calculus(model, mu, u)?;
    let f_lambda = TransformEvaluator::new(mu).eval(lambda);
    let mut diff = f.matrix.clone();
    diff.add_identity(-f_lambda);
    // (uA + λI)^{-1} = u^{-1}(A + (λ/u)I)^{-1}
    let inv = model.resolvent(lambda / u)?.scale(u.inv());
    let lhs = norm_of(&diff.matmul(&inv));

    let support = mu.support_points();
    let stride = support.len().div_ceil(B_SUPPORT_SAMPLES).max(1);
    let mut b = 0.0f64;
    for s in lin_space(0.0, 1.0, B_S_SAMPLES) {
        for zeta in support.iter().step_by(stride) {
            b = b.max(norm_of(&model.semigroup_unchecked(u * zeta * s)?));
        }
    }
    // |e^{(s−1)ζλ}| is monotone in s, so the endpoints suffice
    let exp_sup = support.iter().map(|z| (-(z * lambda).re).exp().max(1.0)).fold(0.0, f64::max);
    let abs_moment = mu.abs_moment();
    let c = b * exp_sup;
    let rhs = c * abs_moment;
    Ok(ResolventBound { lhs, rhs, c, b, exp_sup, abs_moment, pass: lhs <= rhs * (1.0 + 1e-8) })
}

/// Log-polar sample of the region `π/2 − gap ≤ |arg z| ≤ π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub radii: usize,
    pub angles: usize,
}

impl Default for RegionGrid {
    fn default() -> Self {
        Self { r_min: 1e-3, r_max: 1e3, radii: 64, angles: 64 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionSup {
    /// Largest sampled `‖(A + zI)^{-1}‖` over non-singular samples.
    pub sup: f64,
    /// `sup 1/dist(−z, spec A)` over the same samples, for diagonal models.
    pub exact_sup: Option<f64>,
    /// Between the two innermost rings the resolvent norm grows at least
    /// like `|z|^{-1/2}` (it grows like `1/|z|` when `0` is in the
    /// spectrum), or some sample was singular.
    pub unbounded: bool,
    /// Samples skipped because `A + zI` was singular.
    pub skipped: usize,
    pub samples: usize,
}

/// Sampled `sup ‖(A + zI)^{-1}‖` over the region `π/2 − gap ≤ |arg z| ≤ π`.
pub fn region_resolvent_sup(model: &SemigroupModel, gap: f64, grid: &RegionGrid) -> Result<RegionSup> {
    if !(gap > 0.0 && gap <= FRAC_PI_2) {
        return Err(Error::invalid(format!("angle gap {gap} not in (0, pi/2]")));
    }
    if !(grid.r_min > 0.0 && grid.r_max > grid.r_min) || grid.radii < 2 || grid.angles < 2 {
        return Err(Error::invalid("bad region grid"));
    }
    let mut angles = lin_space(FRAC_PI_2 - gap, PI, grid.angles);
    let mirrored: Vec<f64> = angles.iter().filter(|a| **a < PI).map(|a| -a).collect();
    angles.extend(mirrored);
    let radii = log_space(grid.r_min, grid.r_max, grid.radii);
    let spectrum = if model.is_diagonal() { model.exact_spectrum() } else { None };

    let mut sup = 0.0f64;
    let mut exact = 0.0f64;
    let mut skipped = 0usize;
    let mut samples = 0usize;
    let mut rings = [0.0f64; 2];
    for (k, &r) in radii.iter().enumerate() {
        for &th in &angles {
            let z = C64::from_polar(r, th);
            samples += 1;
            let v = match model.resolvent(z) {
                Ok(res) => norm_of(&res),
                Err(Error::SingularResolvent { .. }) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            sup = sup.max(v);
            if k < 2 {
                rings[k] = rings[k].max(v);
            }
            if let Some(spec) = &spectrum {
                let d = spec.iter().map(|a| (a + z).norm()).fold(f64::INFINITY, f64::min);
                exact = exact.max(1.0 / d);
            }
        }
    }
    let slope = (rings[0] / rings[1]).ln() / (radii[1] / radii[0]).ln();
    let unbounded = skipped > 0 || slope > 0.5;
    Ok(RegionSup { sup, exact_sup: spectrum.map(|_| exact), unbounded, skipped, samples })
}

/// One row of [`lower_bound_probe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub u: C64,
    /// `‖F(−uA)‖`.
    pub norm_f: f64,
    /// `ρ(F(−uA))`.
    pub rho_f: f64,
    /// `‖F(−uA)F̃(−uA)‖`.
    pub norm_product: f64,
    /// `sup_{t>0} |F(t)|`.
    pub benchmark: f64,
    /// `norm_f − benchmark`.
    pub margin: f64,
    /// `norm_product − benchmark²`.
    pub margin_product: f64,
    pub quad_error: f64,
}

/// `‖F(−uA)‖`, `ρ(F(−uA))` and `‖F(−uA)F̃(−uA)‖` against `sup_{t>0}|F(t)|`
/// for each `u`, in input order. No verdict is attached: a finite model has
/// a bounded generator and may fall below the benchmark.
pub fn lower_bound_probe(model: &SemigroupModel, mu: &CompactMeasure, u_list: &[C64]) -> Result<Vec<ProbeRow>> {
    let ev = TransformEvaluator::new(mu);
    let benchmark = ev.ray_max(0.0, &RayMaxOptions::default())?.value;
    let conj = mu.conjugate();
    u_list
        .iter()
        .map(|&u| {
            let f = functional_calculus(model, mu, u)?;
            let ft = functional_calculus(model, &conj, u)?;
            let norm_f = norm_of(&f.matrix);
            let rho_f = spec_radius(&f.matrix)?;
            let norm_product = norm_of(&f.matrix.matmul(&ft.matrix));
            Ok(ProbeRow {
                u,
                norm_f,
                rho_f,
                norm_product,
                benchmark,
                margin: norm_f - benchmark,
                margin_product: norm_product - benchmark * benchmark,
                quad_error: f.quad_error.max(ft.quad_error),
            })
        })
        .collect()
}

/// The t-grid of [`hypothesis_check`]: `angles` directions spanning the
/// open sector and `radii` log-spaced radii in `(1e−4·t₀, t₀]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypothesisGrid {
    pub angles: usize,
    pub radii: usize,
}

impl Default for HypothesisGrid {
    fn default() -> Self {
        Self { angles: 16, radii: 32 }
    }
}

/// The special form `ρ(T(t) − T((γ+1)t)) < 2` for `μ = δ₁ − δ_{γ+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoAtomForm {
    pub gamma: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisCheck {
    /// `max ρ(F(−tA))` over the t-grid.
    pub lhs: f64,
    /// Where the maximum was attained.
    pub lhs_at: C64,
    /// `sup_{S_{α−β}} |F|`.
    pub rhs: f64,
    /// `rhs − lhs`.
    pub margin: f64,
    /// `lhs < rhs − HYPOTHESIS_TOL`.
    pub satisfied: bool,
    pub two_atom: Option<TwoAtomForm>,
}

/// `γ` when `μ = δ₁ − δ_{γ+1}` with `γ > 0`.
fn two_atom_gamma(mu: &CompactMeasure) -> Option<f64> {
    if !mu.is_atomic() || mu.atoms().len() != 2 {
        return None;
    }
    let one = C64::new(1.0, 0.0);
    let a = mu.atoms().iter().find(|a| a.location == one && a.weight == one)?;
    let b = mu.atoms().iter().find(|b| b.weight == -one && b.location.im == 0.0)?;
    let gamma = b.location.re - a.location.re;
    (gamma > 0.0).then_some(gamma)
}

/// Evaluates both sides of `sup_{t ∈ S_{α−β}, |t| ≤ t₀} ρ(F(−tA)) < sup_{S_{α−β}} |F|`.
pub fn hypothesis_check(
    model: &SemigroupModel,
    mu: &CompactMeasure,
    alpha: f64,
    beta: f64,
    t0: f64,
    grid: &HypothesisGrid,
) -> Result<HypothesisCheck> {
    let support = mu.declared_support_half_angle();
    if !(beta >= support - 1e-12 && beta < alpha && alpha < FRAC_PI_2) {
        return Err(Error::invalid(format!(
            "need support angle {support} ≤ beta {beta} < alpha {alpha} < pi/2"
        )));
    }
    if !(t0 > 0.0 && t0.is_finite()) || grid.angles < 1 || grid.radii < 2 {
        return Err(Error::invalid("bad t-grid"));
    }
    if mu.mass().norm() > MASS_ZERO_TOL {
        return Err(Error::precondition("hypothesis check needs a mass-zero measure"));
    }
    let open = (alpha - beta) * (1.0 - 1e-12);
    let thetas = if grid.angles == 1 { vec![0.0] } else { lin_space(-open, open, grid.angles) };
    let radii = log_space(1e-4 * t0, t0, grid.radii);
    let mut lhs = 0.0f64;
    let mut lhs_at = C64::new(t0, 0.0);
    for &th in &thetas {
        for &r in &radii {
            let t = C64::from_polar(r, th);
            let f = functional_calculus(model, mu, t)?;
            let rho = spec_radius(&f.matrix)?;
            if rho > lhs {
                lhs = rho;
                lhs_at = t;
            }
        }
    }
    let rhs = sector_sup(mu, alpha - beta, DEFAULT_THETA_GRID, &RayMaxOptions::default())?.value;
    let two_atom = two_atom_gamma(mu).map(|gamma| TwoAtomForm { gamma, lhs, rhs: 2.0, satisfied: lhs < 2.0 });
    Ok(HypothesisCheck { lhs, lhs_at, rhs, margin: rhs - lhs, satisfied: lhs < rhs - HYPOTHESIS_TOL, two_atom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CMatrix;
    use core::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn d12() -> CompactMeasure {
        CompactMeasure::dirac_difference(1.0, 2.0).unwrap()
    }

    fn derivative() -> CompactMeasure {
        CompactMeasure::derivative_functional(c(1.0, 0.0), 0.25, 128).unwrap()
    }

    #[test]
    fn calculus_on_diagonal_model() {
        let grid = vec![0.05, 0.2, 0.5, 0.8, 1.0];
        let m = SemigroupModel::diagonal(grid.clone()).unwrap();
        let t = 0.7;
        let r = functional_calculus(&m, &d12(), c(t, 0.0)).unwrap();
        assert_eq!(r.quad_error, 0.0);
        for (i, x) in grid.iter().enumerate() {
            let want = x.powf(t) - x.powf(2.0 * t);
            assert!((r.matrix.get(i, i) - c(want, 0.0)).norm() < 1e-15);
        }
        let single = CompactMeasure::dirac(c(1.5, 0.2)).unwrap();
        let u = c(0.4, 0.1);
        let r = functional_calculus(&m, &single, u).unwrap();
        assert_eq!(r.matrix, m.semigroup_at(u * c(1.5, 0.2)).unwrap());
    }

    #[test]
    fn derivative_functional_gives_uat() {
        let m = SemigroupModel::jordan(6, 6.0, 0.5).unwrap();
        let u = c(0.1, 0.0);
        let r = functional_calculus(&m, &derivative(), u).unwrap();
        let want = m.generator().scale(u).matmul(&m.semigroup_at(u).unwrap());
        let err = r.matrix.sub(&want).max_abs();
        assert!(err < 1e-8 * want.max_abs().max(1.0), "{err}");
        assert!(r.quad_error < 1e-8);
    }

    #[test]
    fn domain_violation() {
        let m = SemigroupModel::diagonal(vec![0.5, 1.0]).unwrap();
        assert!(matches!(functional_calculus(&m, &d12(), c(-1.0, 0.0)), Err(Error::DomainViolation(_))));
        let narrow = SemigroupModel::jordan(3, 1.0, 0.0).unwrap().with_sector(0.1).unwrap();
        assert!(matches!(functional_calculus(&narrow, &derivative(), c(1.0, 0.0)), Err(Error::DomainViolation(_))));
    }

    #[test]
    fn identity_examples() {
        let m = SemigroupModel::log_spaced(1e-6, 1.0, 512).unwrap();
        let r = identity_residual(&m, &d12(), c(0.3, 0.0), c(1.0, 0.0), 32).unwrap();
        assert!(r.residual <= 1e-9, "{r:?}");
        // uA + λI singular at the grid point with u·log x = −λ
        let x = (-2.0f64).exp();
        let m = SemigroupModel::diagonal(vec![x, 0.5, 1.0]).unwrap();
        let r = identity_residual(&m, &d12(), c(0.5, 0.0), c(1.0, 0.0), 32).unwrap();
        assert!(r.residual <= 1e-9, "{r:?}");
        let zero = SemigroupModel::matrix(CMatrix::zeros(3)).unwrap();
        let r = identity_residual(&zero, &d12(), c(0.2, 0.0), c(0.0, 0.0), 16).unwrap();
        assert_eq!(r.lhs_norm, 0.0);
        assert!(r.residual < 1e-15);
        assert!(identity_residual(&zero, &d12(), c(0.2, 0.0), c(0.0, 0.0), 4).is_err());
    }

    #[test]
    fn resolvent_bound_examples() {
        let m = SemigroupModel::log_spaced(1e-6, 1.0, 256).unwrap();
        let r = resolvent_bound_check(&m, &d12(), c(0.2, 0.0), c(0.5, 0.0)).unwrap();
        assert!(r.pass && r.lhs <= r.rhs, "{r:?}");
        assert!((r.b - 1.0).abs() < 1e-15);
        // as u, λ → 0 the operator tends to −(∫ζ dμ)·I on the non-fixed grid points
        let tiny = resolvent_bound_check(&m, &d12(), c(1e-6, 0.0), c(0.0, 1e-9)).unwrap();
        assert!((tiny.lhs - 1.0).abs() < 1e-2 && tiny.pass, "{tiny:?}");
        let edge = resolvent_bound_check(&m, &d12(), c(0.3, 0.1), C64::from_polar(1.0, 2.0)).unwrap();
        assert!(edge.pass);
        assert!(resolvent_bound_check(&m, &d12(), c(0.3, 0.0), c(1.5, 0.0)).is_err());
    }

    #[test]
    fn region_sup_examples() {
        let grid = lin_space(0.1, 0.9, 17);
        let m = SemigroupModel::diagonal(grid).unwrap();
        let r = region_resolvent_sup(&m, FRAC_PI_4, &RegionGrid::default()).unwrap();
        assert!(!r.unbounded && r.sup.is_finite());
        assert!((r.sup - r.exact_sup.unwrap()).abs() < 1e-10);
        let with_one = SemigroupModel::diagonal(vec![0.2, 0.6, 1.0]).unwrap();
        assert!(region_resolvent_sup(&with_one, FRAC_PI_4, &RegionGrid::default()).unwrap().unbounded);
        let j = SemigroupModel::jordan(4, 1.0, 1.0).unwrap();
        let r = region_resolvent_sup(&j, FRAC_PI_4, &RegionGrid::default()).unwrap();
        assert!(!r.unbounded && r.sup.is_finite() && r.exact_sup.is_none());
    }

    #[test]
    fn probe_rows_are_ordered() {
        let m = SemigroupModel::log_spaced(1e-6, 1.0, 4096).unwrap();
        let rows = lower_bound_probe(&m, &d12(), &[c(0.5, 0.0), c(0.1, 0.0)]).unwrap();
        assert_eq!(rows[0].u, c(0.5, 0.0));
        for r in &rows {
            assert!(r.rho_f <= r.norm_f * (1.0 + 1e-12));
            assert!((r.norm_f - 0.25).abs() < 1e-4, "{r:?}");
            assert!((r.margin - (r.norm_f - r.benchmark)).abs() == 0.0);
        }
    }

    #[test]
    fn hypothesis_examples() {
        let bounded = SemigroupModel::log_spaced(0.5, 1.0, 256).unwrap();
        let h = hypothesis_check(&bounded, &d12(), FRAC_PI_3, 0.0, 0.1, &HypothesisGrid::default()).unwrap();
        assert!(h.satisfied, "{h:?}");
        let two = h.two_atom.unwrap();
        assert_eq!(two.gamma, 1.0);
        assert!(two.satisfied && two.lhs <= 0.5);
        assert!(hypothesis_check(&bounded, &d12(), 0.2, 0.3, 0.1, &HypothesisGrid::default()).is_err());
    }
}
