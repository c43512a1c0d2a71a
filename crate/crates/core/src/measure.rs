//! Compactly supported complex measures on sectors.
//!
//! A measure is a finite list of weighted point masses plus contour
//! components. A contour component is the Cauchy-kernel density
//! `a / (2πi (ζ − p)^k)` integrated along a positively oriented circle, which
//! covers functionals such as `f ↦ f'(1)`. Contours are discretized by the
//! trapezoid rule, which converges geometrically for the analytic integrands
//! that arise here.

use core::f64::consts::{FRAC_PI_2, PI};

use crate::prelude::*;
use crate::quadrature::circle_rule;

/// Default trapezoid node count for contour components.
pub const DEFAULT_CONTOUR_NODES: usize = 128;
pub const MIN_CONTOUR_NODES: usize = 16;
/// Boundary samples per circle when measuring the support angle.
pub const SUPPORT_SAMPLES: usize = 4096;

/// A point mass `c·δ_ζ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: C64,
    pub weight: C64,
}

impl Atom {
    pub fn new(location: C64, weight: C64) -> Self {
        Self { location, weight }
    }
}

/// `f ↦ ∮_{|ζ−center|=radius} f(ζ) · coefficient / (2πi (ζ − pole)^order) dζ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourComponent {
    pub center: C64,
    pub radius: f64,
    pub pole: C64,
    pub order: u32,
    pub coefficient: C64,
    pub nodes: usize,
}

impl ContourComponent {
    pub fn new(center: C64, radius: f64, pole: C64, order: u32, coefficient: C64, nodes: usize) -> Result<Self> {
        if !finite(center) || !finite(pole) || !finite(coefficient) || !radius.is_finite() {
            return Err(Error::invalid("contour parameters must be finite"));
        }
        if !(radius > 0.0) {
            return Err(Error::invalid(format!("contour radius {radius} must be positive")));
        }
        if order == 0 {
            return Err(Error::invalid("kernel order must be at least 1"));
        }
        if nodes < MIN_CONTOUR_NODES {
            return Err(Error::invalid(format!("contour needs at least {MIN_CONTOUR_NODES} nodes, got {nodes}")));
        }
        let gap = ((pole - center).norm() - radius).abs();
        if gap <= 1e-12 * radius {
            return Err(Error::invalid("kernel pole lies on the contour"));
        }
        Ok(Self { center, radius, pole, order, coefficient, nodes })
    }

    /// The functional `f ↦ f'(point)` as a circle of the given radius about
    /// `point` with a double pole there.
    pub fn derivative_at(point: C64, radius: f64, nodes: usize) -> Result<Self> {
        Self::new(point, radius, point, 2, C64::new(1.0, 0.0), nodes)
    }

    pub fn encloses_pole(&self) -> bool {
        (self.pole - self.center).norm() < self.radius
    }

    pub fn density(&self, zeta: C64) -> C64 {
        self.coefficient / ((zeta - self.pole).powu(self.order) * C64::new(0.0, 2.0 * PI))
    }

    /// Trapezoid discretization with `nodes` points: `(ζ_j, density(ζ_j)·dζ_j)`.
    pub fn quadrature(&self, nodes: usize) -> Vec<(C64, C64)> {
        circle_rule(self.center, self.radius, nodes)
            .into_iter()
            .map(|(z, dz)| (z, self.density(z) * dz))
            .collect()
    }

    /// Total mass by the residue theorem.
    pub fn exact_mass(&self) -> C64 {
        if self.encloses_pole() && self.order == 1 {
            self.coefficient
        } else {
            C64::new(0.0, 0.0)
        }
    }

    /// Closed-form Fourier–Borel transform by the residue theorem:
    /// `a·(−z)^{k−1} e^{−zp} / (k−1)!` when the pole is enclosed, zero
    /// otherwise.
    pub fn exact_transform(&self, z: C64) -> C64 {
        if !self.encloses_pole() {
            return C64::new(0.0, 0.0);
        }
        let k = self.order - 1;
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.coefficient * (-z).powu(k) * (-z * self.pole).exp() / fact
    }

    fn conjugate(&self) -> Self {
        Self { center: self.center.conj(), pole: self.pole.conj(), coefficient: self.coefficient.conj(), ..*self }
    }

    fn translate(&self, shift: C64, weight: C64) -> Self {
        Self {
            center: self.center + shift,
            pole: self.pole + shift,
            coefficient: self.coefficient * weight,
            ..*self
        }
    }

    /// Pushforward under `ζ ↦ uζ`: the density picks up a factor `u^{k−1}`.
    fn scale(&self, u: C64) -> Self {
        Self {
            center: self.center * u,
            radius: self.radius * u.norm(),
            pole: self.pole * u,
            coefficient: self.coefficient * u.powu(self.order - 1),
            ..*self
        }
    }

    fn support_angle_exact(&self) -> f64 {
        self.center.arg().abs() + (self.radius / self.center.norm()).asin()
    }

    fn in_right_half_plane(&self) -> bool {
        self.center.re - self.radius > 0.0
    }
}

fn finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A compactly supported complex measure in a closed sector `V_β`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactMeasure {
    atoms: Vec<Atom>,
    contours: Vec<ContourComponent>,
    symmetric: bool,
    support_half_angle: f64,
}

impl CompactMeasure {
    /// Validates the parts and, when `symmetric` is claimed, checks
    /// `F(z) = conj F(conj z)` at sample points.
    pub fn new(atoms: Vec<Atom>, contours: Vec<ContourComponent>, symmetric: bool) -> Result<Self> {
        let m = Self::assemble(atoms, contours)?;
        if symmetric && !m.symmetric {
            return Err(Error::invalid("measure declared symmetric but its transform is not conjugation-invariant"));
        }
        Ok(m)
    }

    /// Like [`CompactMeasure::new`] but infers the symmetry flag.
    pub fn from_parts(atoms: Vec<Atom>, contours: Vec<ContourComponent>) -> Result<Self> {
        Self::assemble(atoms, contours)
    }

    fn assemble(atoms: Vec<Atom>, contours: Vec<ContourComponent>) -> Result<Self> {
        for a in &atoms {
            if !finite(a.location) || !finite(a.weight) {
                return Err(Error::invalid("atom location and weight must be finite"));
            }
            if !(a.location.re > 0.0) {
                return Err(Error::invalid(format!("atom at {} lies outside the open right half-plane", a.location)));
            }
        }
        for c in &contours {
            // re-validate fields that may have been built directly
            ContourComponent::new(c.center, c.radius, c.pole, c.order, c.coefficient, c.nodes)?;
            if !c.in_right_half_plane() {
                return Err(Error::invalid("contour circle leaves the open right half-plane"));
            }
        }
        let angle = atoms
            .iter()
            .map(|a| a.location.arg().abs())
            .chain(contours.iter().map(|c| c.support_angle_exact()))
            .fold(0.0, f64::max);
        let mut m = Self { atoms, contours, symmetric: false, support_half_angle: angle };
        m.symmetric = m.check_symmetry();
        Ok(m)
    }

    pub fn zero() -> Self {
        Self { atoms: Vec::new(), contours: Vec::new(), symmetric: true, support_half_angle: 0.0 }
    }

    pub fn dirac(location: C64) -> Result<Self> {
        Self::from_parts(vec![Atom::new(location, C64::new(1.0, 0.0))], Vec::new())
    }

    pub fn atomic(atoms: Vec<Atom>) -> Result<Self> {
        Self::from_parts(atoms, Vec::new())
    }

    /// `δ_a − δ_b` for real `0 < a, b`.
    pub fn dirac_difference(a: f64, b: f64) -> Result<Self> {
        Self::atomic(vec![Atom::new(C64::new(a, 0.0), C64::new(1.0, 0.0)), Atom::new(C64::new(b, 0.0), C64::new(-1.0, 0.0))])
    }

    /// The functional `f ↦ f'(point)`, whose transform is `−z e^{−z·point}`.
    pub fn derivative_functional(point: C64, radius: f64, nodes: usize) -> Result<Self> {
        Self::from_parts(Vec::new(), vec![ContourComponent::derivative_at(point, radius, nodes)?])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn contours(&self) -> &[ContourComponent] {
        &self.contours
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.contours.is_empty()
    }

    pub fn is_atomic(&self) -> bool {
        self.contours.is_empty()
    }

    /// Smallest `β` with support in `V_β`, from exact circle geometry. Always
    /// dominates [`CompactMeasure::sampled_support_half_angle`].
    pub fn declared_support_half_angle(&self) -> f64 {
        self.support_half_angle
    }

    /// `max |arg ζ|` over atoms and dense boundary samples of every circle.
    pub fn sampled_support_half_angle(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::invalid("support angle of the zero measure"));
        }
        let atoms = self.atoms.iter().map(|a| a.location.arg().abs());
        let circles = self.contours.iter().flat_map(|c| {
            circle_rule(c.center, c.radius, SUPPORT_SAMPLES).into_iter().map(|(z, _)| z.arg().abs())
        });
        Ok(atoms.chain(circles).fold(0.0, f64::max))
    }

    /// Points and weights `(ζ_j, w_j)` such that `∫ f dμ ≈ Σ w_j f(ζ_j)`,
    /// using each contour's own node count times `node_multiplier`.
    pub fn discretize(&self, node_multiplier: usize) -> Vec<(C64, C64)> {
        let mut out: Vec<(C64, C64)> = self.atoms.iter().map(|a| (a.location, a.weight)).collect();
        for c in &self.contours {
            out.extend(c.quadrature(c.nodes * node_multiplier.max(1)));
        }
        out
    }

    /// Representative support points: atoms and every contour node.
    pub fn support_points(&self) -> Vec<C64> {
        self.discretize(1).into_iter().map(|(z, _)| z).collect()
    }

    /// `∫ dμ` by quadrature.
    pub fn mass(&self) -> C64 {
        self.discretize(1).iter().map(|(_, w)| *w).sum()
    }

    /// `∫ dμ` by the residue theorem.
    pub fn exact_mass(&self) -> C64 {
        let atoms: C64 = self.atoms.iter().map(|a| a.weight).sum();
        atoms + self.contours.iter().map(|c| c.exact_mass()).sum::<C64>()
    }

    /// `∫ |ζ| d|μ|(ζ)`.
    pub fn abs_moment(&self) -> f64 {
        self.abs_moment_with_estimate().0
    }

    /// `∫ |ζ| d|μ|` together with the change observed when every contour's
    /// node count is doubled.
    pub fn abs_moment_with_estimate(&self) -> (f64, f64) {
        let at = |mult: usize| -> f64 { self.discretize(mult).iter().map(|(z, w)| z.norm() * w.norm()).sum() };
        let base = at(1);
        if self.contours.is_empty() {
            return (base, 0.0);
        }
        (base, (at(2) - base).abs())
    }

    /// Total variation `∫ d|μ|`.
    pub fn total_variation(&self) -> f64 {
        self.discretize(1).iter().map(|(_, w)| w.norm()).sum()
    }

    /// The measure `μ̄(S) = conj μ(conj S)`, whose transform is
    /// `z ↦ conj F(conj z)`.
    pub fn conjugate(&self) -> Self {
        Self {
            atoms: self.atoms.iter().map(|a| Atom::new(a.location.conj(), a.weight.conj())).collect(),
            contours: self.contours.iter().map(|c| c.conjugate()).collect(),
            symmetric: self.symmetric,
            support_half_angle: self.support_half_angle,
        }
    }

    pub fn negate(&self) -> Self {
        self.scale_weights(C64::new(-1.0, 0.0))
    }

    pub fn scale_weights(&self, s: C64) -> Self {
        let mut out = self.clone();
        out.atoms.iter_mut().for_each(|a| a.weight *= s);
        out.contours.iter_mut().for_each(|c| c.coefficient *= s);
        out.symmetric = out.check_symmetry();
        out
    }

    /// `μ ∗ ν`, defined when at least one side is purely atomic.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if !self.is_atomic() && !other.is_atomic() {
            return Err(Error::UnsupportedCombination("convolution of two contour components".into()));
        }
        let mut atoms: Vec<Atom> = Vec::new();
        for a in &self.atoms {
            for b in &other.atoms {
                let loc = a.location + b.location;
                let w = a.weight * b.weight;
                match atoms.iter_mut().find(|x| x.location == loc) {
                    Some(x) => x.weight += w,
                    None => atoms.push(Atom::new(loc, w)),
                }
            }
        }
        atoms.retain(|a| a.weight != C64::new(0.0, 0.0));
        let mut contours = Vec::new();
        for a in &self.atoms {
            contours.extend(other.contours.iter().map(|c| c.translate(a.location, a.weight)));
        }
        for b in &other.atoms {
            contours.extend(self.contours.iter().map(|c| c.translate(b.location, b.weight)));
        }
        Self::from_parts(atoms, contours)
    }

    /// Pushforward under `ζ ↦ uζ`; the transform becomes `z ↦ F(uz)`.
    pub fn scale_support(&self, u: C64) -> Result<Self> {
        if !finite(u) || u == C64::new(0.0, 0.0) {
            return Err(Error::invalid("support scale factor must be finite and nonzero"));
        }
        let atoms = self.atoms.iter().map(|a| Atom::new(a.location * u, a.weight)).collect();
        let contours = self.contours.iter().map(|c| c.scale(u)).collect();
        Self::from_parts(atoms, contours)
    }

    /// `F(z)` directly from the discretization, for the symmetry check.
    fn transform_at(&self, z: C64) -> C64 {
        self.discretize(1).iter().map(|(zeta, w)| w * (-z * zeta).exp()).sum()
    }

    fn check_symmetry(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let pts = self.discretize(1);
        let probes = [
            C64::new(0.3, 0.0),
            C64::new(0.7, 0.4),
            C64::new(1.3, -0.9),
            C64::new(2.1, 1.7),
            C64::new(0.2, 2.6),
            C64::new(-0.5, 1.1),
            C64::new(2.9, -0.3),
            C64::new(1.0, 2.0),
        ];
        probes.iter().all(|&z| {
            let scale: f64 = pts.iter().map(|(zeta, w)| w.norm() * (z.norm() * zeta.norm()).exp()).sum();
            let lhs = self.transform_at(z);
            let rhs = self.transform_at(z.conj()).conj();
            (lhs - rhs).norm() <= 1e-10 * scale.max(f64::MIN_POSITIVE)
        })
    }
}

/// Whether `|θ| + β < π/2`, the condition under which `F` decays along
/// the ray of angle `θ`.
pub(crate) fn ray_admissible(theta: f64, support_half_angle: f64) -> bool {
    theta.abs() + support_half_angle < FRAC_PI_2
}
