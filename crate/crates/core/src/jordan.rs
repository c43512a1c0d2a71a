//! Concrete Jordan-curve certificates for transforms that are real on the
//! positive axis.
//!
//! A certificate fixes `b` (the maximizer of `|F|` on `(0, ∞)`), the even
//! order `m`, a segment `[b, a₁]` along which
//! `|F(z)| ≥ F(b) + δ|z − b|^m`, a point `a₀ ∈ (b, a₁)`, and a polyline
//! `Γ₁` from `a₁` to `a₂` followed by the horizontal segment `[a₂, a₃]`
//! to the imaginary axis, on which `|F| > |F(a₀)|`. Reflecting the upper
//! half in the real axis closes the curve.
//!
//! Construction is a search (direction sweep, height scan, widest path on a
//! grid); verification re-samples the conditions and does not depend on how
//! the certificate was found.

use alloc::collections::{BinaryHeap, VecDeque};
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::geometry::Polyline;
use crate::measure::CompactMeasure;
use crate::prelude::*;
use crate::transform::{positive_real_max, TransformEvaluator, MASS_ZERO_TOL, MAX_DERIVATIVE_ORDER};

/// Derivatives below this modulus count as vanishing when choosing `m`.
pub const DERIVATIVE_ZERO_TOL: f64 = 1e-8;
/// Smallest density accepted by [`verify_certificate`].
pub const MIN_DENSITY: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct JordanOptions {
    /// Largest candidate height `y₀` for `a₃ = i·y₀`.
    pub max_height: f64,
    /// Rows and columns of the widest-path grid.
    pub grid: usize,
    /// Candidate directions of `[b, a₁]`, in degrees.
    pub psi_degrees: Vec<f64>,
    /// Candidate lengths of `[b, a₁]` as fractions of `b`, longest first.
    pub length_fractions: Vec<f64>,
    /// Candidate positions of `a₀` as fractions of `[b, a₁]`, largest first.
    pub epsilons: Vec<f64>,
    /// Samples of `[b, a₁]` in the direction sweep.
    pub direction_samples: usize,
    pub max_vertices: usize,
    /// Density at which a constructed certificate is verified.
    pub density: usize,
}

impl Default for JordanOptions {
    fn default() -> Self {
        Self {
            max_height: 4.0 * PI,
            grid: 200,
            psi_degrees: (1..=17).map(|k| 5.0 * k as f64).collect(),
            length_fractions: vec![0.5, 0.25, 0.1],
            epsilons: vec![0.1, 0.05, 0.01],
            direction_samples: 200,
            max_vertices: 32,
            density: 1000,
        }
    }
}

/// Worst sampled residuals of the two conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margins {
    /// `min |F(z)| − F(b) − δ|z − b|^m` over `[b, a₁]`.
    pub margin_i: f64,
    /// `min |F(z)| − |F(a₀)|` over `Γ₁ ∪ [a₂, a₃]`.
    pub margin_ii: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JordanCertificate {
    pub b: f64,
    /// `|F(b)|`; the sign-normalized value `f(b) > 0`.
    pub fb: f64,
    /// `F(b) < 0` and the certificate is for `−μ`.
    pub negated: bool,
    pub m: u32,
    pub delta: f64,
    pub a0: C64,
    pub a1: C64,
    pub a2: C64,
    pub a3: C64,
    pub gamma1: Polyline,
    pub sample_density: usize,
    pub margins: Margins,
}

/// Result of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub ok: bool,
    pub margin_i: f64,
    pub margin_ii: f64,
    /// The reflected closed curve is simple.
    pub simple: bool,
    /// Violated structural invariants.
    pub issues: Vec<String>,
}

impl JordanCertificate {
    /// `[b, a₁] ∪ Γ₁ ∪ [a₂, a₃] ∪ [a₃, ā₃] ∪` the reflection, as a closed
    /// polyline starting and ending at `b`.
    pub fn closed_curve(&self) -> Result<Polyline> {
        let upper: Vec<C64> = self.gamma1.vertices().to_vec();
        let mut v = Vec::with_capacity(2 * upper.len() + 4);
        v.push(C64::new(self.b, 0.0));
        v.extend(upper.iter().copied());
        v.push(self.a3);
        v.push(self.a3.conj());
        v.extend(upper.iter().rev().map(|z| z.conj()));
        v.push(C64::new(self.b, 0.0));
        Polyline::new(v)
    }
}

fn invariant_issues(cert: &JordanCertificate) -> Vec<String> {
    let mut issues = Vec::new();
    let b = C64::new(cert.b, 0.0);
    if !(cert.b > 0.0) {
        issues.push(format!("b = {} is not positive", cert.b));
    }
    if cert.m < 2 || !cert.m.is_multiple_of(2) {
        issues.push(format!("m = {} is not an even integer ≥ 2", cert.m));
    }
    if !(cert.delta > 0.0) {
        issues.push(format!("delta = {} is not positive", cert.delta));
    }
    for (name, a) in [("a1", cert.a1), ("a2", cert.a2), ("a3", cert.a3)] {
        if !(a.im > 0.0) {
            issues.push(format!("Im {name} = {} is not positive", a.im));
        }
    }
    if cert.a3.re != 0.0 {
        issues.push("a3 is not purely imaginary".into());
    }
    if cert.a2.im != cert.a3.im {
        issues.push("Im a2 differs from Im a3".into());
    }
    let d = cert.a1 - b;
    if d.norm() == 0.0 {
        issues.push("a1 coincides with b".into());
    } else {
        let t = ((cert.a0 - b) * d.conj()).re / d.norm_sqr();
        let off = (cert.a0 - b - d * t).norm();
        if !(t > 0.0 && t < 1.0) || cert.a0 == cert.a1 || cert.a0 == b {
            issues.push("a0 does not lie strictly between b and a1".into());
        } else if off > 1e-12 * d.norm() {
            issues.push("a0 is off the segment [b, a1]".into());
        }
    }
    if cert.gamma1.start() != cert.a1 || cert.gamma1.end() != cert.a2 {
        issues.push("gamma1 does not join a1 to a2".into());
    }
    if cert.gamma1.vertices().iter().any(|z| !(z.re > 0.0 && z.im > 0.0)) {
        issues.push("gamma1 leaves the open upper-right quadrant".into());
    }
    issues
}

/// Sample count per piece: `density` rounded up to `100·2^k`, so that the
/// sample sets for increasing densities are nested.
fn nested_count(density: usize) -> usize {
    let mut n = MIN_DENSITY;
    while n < density {
        n *= 2;
    }
    n
}

fn segment_min(ev: &TransformEvaluator, a: C64, b: C64, n: usize, mut g: impl FnMut(C64, f64) -> f64) -> f64 {
    (0..=n)
        .map(|k| {
            let t = k as f64 / n as f64;
            let z = a + (b - a) * t;
            g(z, ev.eval(z).norm())
        })
        .fold(f64::INFINITY, f64::min)
}

fn margins(ev: &TransformEvaluator, cert: &JordanCertificate, density: usize) -> Margins {
    let n = nested_count(density);
    let b = C64::new(cert.b, 0.0);
    let fb = ev.eval(b).norm();
    let m = cert.m as i32;
    let margin_i = segment_min(ev, b, cert.a1, n, |z, fz| fz - fb - cert.delta * (z - b).norm().powi(m));
    let fa0 = ev.eval(cert.a0).norm();
    let mut margin_ii = f64::INFINITY;
    for (p, q) in cert.gamma1.segments().chain(core::iter::once((cert.a2, cert.a3))) {
        margin_ii = margin_ii.min(segment_min(ev, p, q, n, |_, fz| fz - fa0));
    }
    Margins { margin_i, margin_ii }
}

/// Re-samples both conditions at `density` points per piece and checks the
/// structural invariants and simplicity of the reflected curve.
pub fn verify_certificate(mu: &CompactMeasure, cert: &JordanCertificate, density: usize) -> Result<Verification> {
    if density < MIN_DENSITY {
        return Err(Error::invalid(format!("density {density} is below {MIN_DENSITY}")));
    }
    let ev = TransformEvaluator::new(mu);
    let issues = invariant_issues(cert);
    let simple = cert.closed_curve().map(|c| c.is_simple()).unwrap_or(false);
    let mg = margins(&ev, cert, density);
    let ok = issues.is_empty() && simple && mg.margin_i >= 0.0 && mg.margin_ii >= 0.0;
    Ok(Verification { ok, margin_i: mg.margin_i, margin_ii: mg.margin_ii, simple, issues })
}

/// The segment `[b, b + L e^{iψ}]` and the smallest sampled ratio
/// `(|F(z)| − F(b))/|z − b|^m` along it.
#[derive(Debug, Clone, Copy)]
struct Direction {
    a1: C64,
    min_ratio: f64,
}

fn direction_search(ev: &TransformEvaluator, b: f64, fb: f64, m: u32, opts: &JordanOptions) -> Option<Direction> {
    let bz = C64::new(b, 0.0);
    let k = opts.direction_samples.max(2);
    for &frac in &opts.length_fractions {
        let len = frac * b;
        let mut best: Option<Direction> = None;
        for &deg in &opts.psi_degrees {
            let dir = C64::from_polar(1.0, deg.to_radians());
            // midpoints only: the endpoints are left for verification
            let min_ratio = (0..k)
                .map(|j| {
                    let rho = len * (j as f64 + 0.5) / k as f64;
                    (ev.eval(bz + dir * rho).norm() - fb) / rho.powi(m as i32)
                })
                .fold(f64::INFINITY, f64::min);
            if min_ratio > 0.0 && best.is_none_or(|d| min_ratio > d.min_ratio) {
                best = Some(Direction { a1: bz + dir * len, min_ratio });
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq)]
struct Widest(f64, usize);

impl Eq for Widest {}

impl PartialOrd for Widest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Widest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

const DIRS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

/// Grid over `(0, Re a₁ + 1] × [Im a₁, y₀]` with `a₁` on a node.
struct PathGrid {
    cols: usize,
    rows: usize,
    hx: f64,
    y: Vec<f64>,
    start_col: usize,
    /// `|F|` at each node; on the top row, also the minimum over the
    /// horizontal segment to the imaginary axis.
    value: Vec<f64>,
}

impl PathGrid {
    fn new(ev: &TransformEvaluator, a1: C64, y0: f64, n: usize) -> Self {
        let width = a1.re + 1.0;
        let start_col = ((a1.re / width) * (n - 1) as f64).round().max(1.0) as usize;
        let hx = a1.re / start_col as f64;
        let cols = ((width / hx).floor() as usize).max(start_col) + 1;
        let rows = n;
        let mut y: Vec<f64> = (0..rows).map(|j| a1.im + (y0 - a1.im) * j as f64 / (rows - 1) as f64).collect();
        y[rows - 1] = y0;
        let mut value = vec![0.0; rows * cols];
        for j in 0..rows {
            for i in 1..cols {
                let z = C64::new(if i == start_col { a1.re } else { hx * i as f64 }, y[j]);
                value[j * cols + i] = ev.eval(z).norm();
            }
        }
        // top row: include the horizontal run to a₃ = i·y₀
        let top = (rows - 1) * cols;
        let edge = ev.eval(C64::new(0.0, y0)).norm();
        let mut run = edge;
        for i in 1..cols {
            // run covers [0, x_i] through node values and midpoints
            let mid = ev.eval(C64::new(hx * (i as f64 - 0.5), y0)).norm();
            run = run.min(mid).min(value[top + i]);
            value[top + i] = run;
        }
        Self { cols, rows, hx, y, start_col, value }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        j * self.cols + i
    }

    fn point(&self, idx: usize, a1: C64) -> C64 {
        let (i, j) = (idx % self.cols, idx / self.cols);
        if i == self.start_col && j == 0 {
            return a1;
        }
        C64::new(self.hx * i as f64, self.y[j])
    }

    fn neighbor(&self, idx: usize, d: usize) -> Option<usize> {
        let (i, j) = ((idx % self.cols) as i64, (idx / self.cols) as i64);
        let (ni, nj) = (i + DIRS[d].0, j + DIRS[d].1);
        (ni >= 1 && (ni as usize) < self.cols && nj >= 0 && (nj as usize) < self.rows)
            .then(|| self.idx(ni as usize, nj as usize))
    }

    fn is_top(&self, idx: usize) -> bool {
        idx / self.cols == self.rows - 1
    }

    /// Largest achievable minimum of `value` over paths from the start
    /// node to the top row.
    fn widest_bottleneck(&self) -> f64 {
        let start = self.idx(self.start_col, 0);
        let mut best = vec![f64::NEG_INFINITY; self.value.len()];
        best[start] = self.value[start];
        let mut heap = BinaryHeap::new();
        heap.push(Widest(best[start], start));
        while let Some(Widest(w, v)) = heap.pop() {
            if w < best[v] {
                continue;
            }
            if self.is_top(v) {
                return w;
            }
            for d in 0..8 {
                if let Some(nb) = self.neighbor(v, d) {
                    let cand = w.min(self.value[nb]);
                    if cand > best[nb] {
                        best[nb] = cand;
                        heap.push(Widest(cand, nb));
                    }
                }
            }
        }
        f64::NEG_INFINITY
    }

    /// A path through nodes with `value ≥ threshold` to the top row using
    /// as few direction changes as possible; returns its corner nodes.
    fn fewest_turns(&self, threshold: f64) -> Option<Vec<usize>> {
        let start = self.idx(self.start_col, 0);
        let states = self.value.len() * 8;
        let mut cost = vec![usize::MAX; states];
        let mut parent = vec![usize::MAX; states];
        let mut queue = VecDeque::new();
        for d in 0..8 {
            if let Some(nb) = self.neighbor(start, d) {
                if self.value[nb] >= threshold {
                    let s = nb * 8 + d;
                    cost[s] = 0;
                    queue.push_back(s);
                }
            }
        }
        let mut goal = None;
        while let Some(s) = queue.pop_front() {
            let (v, d) = (s / 8, s % 8);
            if self.is_top(v) {
                goal = Some(s);
                break;
            }
            for nd in 0..8 {
                if nd == (d + 4) % 8 {
                    continue;
                }
                let Some(nb) = self.neighbor(v, nd) else { continue };
                if self.value[nb] < threshold || nb == start {
                    continue;
                }
                let turn = usize::from(nd != d);
                let ns = nb * 8 + nd;
                let c = cost[s] + turn;
                if c < cost[ns] {
                    cost[ns] = c;
                    parent[ns] = s;
                    if turn == 0 {
                        queue.push_front(ns);
                    } else {
                        queue.push_back(ns);
                    }
                }
            }
        }
        let mut s = goal?;
        let mut corners = vec![s / 8];
        while parent[s] != usize::MAX {
            let p = parent[s];
            if p % 8 != s % 8 {
                corners.push(p / 8);
            }
            s = p;
        }
        corners.push(start);
        corners.reverse();
        Some(corners)
    }
}

/// Smallest `k ≤ 12` with `|F^{(k)}(b)| > tol`.
fn vanishing_order(ev: &TransformEvaluator, b: f64) -> Result<Option<u32>> {
    for k in 1..=MAX_DERIVATIVE_ORDER {
        if ev.eval_deriv(C64::new(b, 0.0), k)?.norm() > DERIVATIVE_ZERO_TOL {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Builds a certificate for `F = FB(μ)` (or `−F` when `F(b) < 0`).
pub fn construct_certificate(mu: &CompactMeasure, opts: &JordanOptions) -> Result<JordanCertificate> {
    if !mu.is_symmetric() {
        return Err(Error::precondition("Jordan certificates need a symmetric measure"));
    }
    if mu.mass().norm() > MASS_ZERO_TOL {
        return Err(Error::precondition("Jordan certificates need a mass-zero measure"));
    }
    if opts.grid < 3 || opts.density < MIN_DENSITY || opts.max_vertices < 2 {
        return Err(Error::invalid("bad Jordan options"));
    }
    let (b, f_at_b) = positive_real_max(mu)?;
    if !(f_at_b.abs() > 0.0) {
        return Err(Error::precondition("the transform is constant on the positive axis"));
    }
    let negated = f_at_b < 0.0;
    let ev = TransformEvaluator::new(mu);
    let fb = f_at_b.abs();

    let m = match vanishing_order(&ev, b)? {
        Some(k) if k % 2 == 0 => k,
        Some(k) => {
            return Err(Error::ConstructionFailure(format!(
                "first nonvanishing derivative at b = {b} has odd order {k}; b is not a maximum"
            )))
        }
        None => {
            return Err(Error::ConstructionFailure(format!(
                "all derivatives up to order {MAX_DERIVATIVE_ORDER} vanish at b = {b}"
            )))
        }
    };

    let dir = direction_search(&ev, b, fb, m, opts).ok_or_else(|| {
        Error::ConstructionFailure(format!(
            "condition (i) fails in every tried direction (b = {b}, m = {m}, lengths {:?})",
            opts.length_fractions
        ))
    })?;
    let a1 = dir.a1;
    let delta = 0.5 * dir.min_ratio;
    let bz = C64::new(b, 0.0);

    let mut diagnostics: Vec<String> = Vec::new();
    for &eps in &opts.epsilons {
        let a0 = bz + (a1 - bz) * eps;
        let fa0 = ev.eval(a0).norm();
        let mut k = 1;
        loop {
            let y0 = k as f64 * PI / 4.0;
            k += 1;
            if y0 > opts.max_height {
                break;
            }
            if y0 <= a1.im {
                continue;
            }
            let line_min = (0..=400)
                .map(|j| ev.eval(C64::new(a1.re * j as f64 / 400.0, y0)).norm())
                .fold(f64::INFINITY, f64::min);
            if !(line_min > fa0) {
                continue;
            }
            let grid = PathGrid::new(&ev, a1, y0, opts.grid);
            let widest = grid.widest_bottleneck();
            if !(widest > fa0) {
                diagnostics.push(format!("eps {eps}, height {y0:.4}: widest path {widest:.6} ≤ |F(a0)| {fa0:.6}"));
                continue;
            }
            let threshold = fa0 + 0.5 * (widest - fa0);
            let Some(corners) = grid.fewest_turns(threshold) else { continue };
            if corners.len() > opts.max_vertices {
                diagnostics.push(format!("eps {eps}, height {y0:.4}: path needs {} vertices", corners.len()));
                continue;
            }
            let pts: Vec<C64> = corners.iter().map(|&c| grid.point(c, a1)).collect();
            let a2 = pts[pts.len() - 1];
            let Ok(gamma1) = Polyline::new(pts) else { continue };
            let mut cert = JordanCertificate {
                b,
                fb,
                negated,
                m,
                delta,
                a0,
                a1,
                a2,
                a3: C64::new(0.0, y0),
                gamma1,
                sample_density: opts.density,
                margins: Margins { margin_i: 0.0, margin_ii: 0.0 },
            };
            let v = verify_certificate(mu, &cert, opts.density)?;
            if v.ok {
                cert.margins = Margins { margin_i: v.margin_i, margin_ii: v.margin_ii };
                return Ok(cert);
            }
            diagnostics.push(format!(
                "eps {eps}, height {y0:.4}: verification failed (margins {:.3e}, {:.3e}, simple {}, {:?})",
                v.margin_i, v.margin_ii, v.simple, v.issues
            ));
        }
    }
    let detail = if diagnostics.is_empty() { "no admissible height".into() } else { diagnostics.join("; ") };
    Err(Error::ConstructionFailure(format!(
        "no admissible height up to {} for a1 = {a1}: {detail}",
        opts.max_height
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::LN_2;

    fn d12() -> CompactMeasure {
        CompactMeasure::dirac_difference(1.0, 2.0).unwrap()
    }

    #[test]
    fn certificate_for_two_atoms() {
        let cert = construct_certificate(&d12(), &JordanOptions::default()).unwrap();
        assert!((cert.b - LN_2).abs() < 1e-8);
        assert!((cert.fb - 0.25).abs() < 1e-14);
        assert_eq!(cert.m, 2);
        assert!(cert.delta > 0.0 && !cert.negated);
        assert!(cert.gamma1.vertices().len() <= 32);
        let v = verify_certificate(&d12(), &cert, 1000).unwrap();
        assert!(v.ok, "{v:?}");
        assert!(v.margin_i >= 0.0 && v.margin_ii >= 0.0);

        let mut doubled = cert.clone();
        doubled.delta *= 2.0;
        let v = verify_certificate(&d12(), &doubled, 1000).unwrap();
        assert!(v.margin_i < 0.0 && !v.ok);
    }

    #[test]
    fn height_pi_is_admissible_for_two_atoms() {
        let ev = TransformEvaluator::new(&d12());
        for j in 0..=100 {
            let x = j as f64 / 100.0;
            let v = ev.eval(C64::new(x, PI)).norm();
            assert!((v - ((-x).exp() + (-2.0 * x).exp())).abs() < 1e-14);
            assert!(v > 0.5);
        }
    }

    #[test]
    fn negated_measure_gives_same_curve() {
        let a = construct_certificate(&d12(), &JordanOptions::default()).unwrap();
        let b = construct_certificate(&d12().negate(), &JordanOptions::default()).unwrap();
        assert!(b.negated);
        assert_eq!(a.gamma1, b.gamma1);
        assert_eq!((a.b, a.fb, a.m, a.delta, a.a0, a.a1), (b.b, b.fb, b.m, b.delta, b.a0, b.a1));
    }

    #[test]
    fn interior_point_invariant() {
        let mut cert = construct_certificate(&d12(), &JordanOptions::default()).unwrap();
        cert.a0 = cert.a1;
        let v = verify_certificate(&d12(), &cert, 200).unwrap();
        assert!(!v.ok && !v.issues.is_empty());
        assert!(verify_certificate(&d12(), &cert, 50).is_err());
    }

    #[test]
    fn constant_transform_is_rejected() {
        let zero = CompactMeasure::zero();
        assert!(matches!(
            construct_certificate(&zero, &JordanOptions::default()),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn closed_curve_is_mirrored() {
        let cert = construct_certificate(&d12(), &JordanOptions::default()).unwrap();
        let curve = cert.closed_curve().unwrap();
        let v = curve.vertices();
        let n = v.len();
        for k in 0..n {
            assert_eq!(v[k], v[n - 1 - k].conj());
        }
        assert!(curve.is_closed() && curve.is_simple());
    }
}
