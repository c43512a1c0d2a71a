//! Finite-dimensional semigroup models `T(t) = e^{tA}`.

use core::f64::consts::FRAC_PI_2;

use crate::linalg::{expm, CMatrix, Lu, Operator, MAX_DENSE_DIM, SINGULAR_CONDITION};
use crate::optimize::log_space;
use crate::prelude::*;

/// The three model families.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    /// Multiplication by `x ↦ x^{ωt}` on a grid `0 < x_1 < … < x_n ≤ 1`;
    /// `ω = 1` unless rotated.
    DiagonalMultiplication { grid: Vec<f64>, rotation: C64 },
    /// `A = −λ₀I + cN` with `N` the subdiagonal shift.
    JordanSurrogate { n: usize, c: f64, lambda0: f64 },
    /// An explicit generator.
    GeneralMatrix { generator: CMatrix },
}

/// A semigroup together with the closed sector on which it is evaluated.
///
/// `t` is admissible when `t = 0` or `|arg(ωt)| ≤ sector_half_angle`, with
/// `ω` the rotation of a diagonal model and `1` otherwise. The default
/// half-angle `π/2` is the closed right half-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SemigroupModel {
    kind: ModelKind,
    sector_half_angle: f64,
}

/// Characters of a diagonal model: `χ_i(T(t)) = e^{−t a_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterData {
    pub a: Vec<C64>,
}

impl CharacterData {
    /// `(e^{−t a_i})_i`.
    pub fn characters_at(&self, t: C64) -> Vec<C64> {
        self.a.iter().map(|a| (-t * a).exp()).collect()
    }
}

impl SemigroupModel {
    pub fn diagonal(grid: Vec<f64>) -> Result<Self> {
        Self::diagonal_rotated(grid, C64::new(1.0, 0.0))
    }

    /// Diagonal model with generator `diag(ω log x_i)`, `|ω| = 1`.
    pub fn diagonal_rotated(grid: Vec<f64>, rotation: C64) -> Result<Self> {
        if grid.is_empty() {
            return Err(Error::invalid("diagonal grid is empty"));
        }
        if !grid.iter().all(|x| x.is_finite() && *x > 0.0 && *x <= 1.0) {
            return Err(Error::invalid("diagonal grid points must lie in (0, 1]"));
        }
        if !grid.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::invalid("diagonal grid must be strictly increasing"));
        }
        if !(rotation.re.is_finite() && rotation.im.is_finite()) || (rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::invalid("rotation must be a finite unit complex number"));
        }
        Ok(Self { kind: ModelKind::DiagonalMultiplication { grid, rotation }, sector_half_angle: FRAC_PI_2 })
    }

    /// `n` log-spaced grid points in `[lo, hi]`.
    pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !(lo > 0.0 && hi > lo && hi <= 1.0) || n < 2 {
            return Err(Error::invalid(format!("bad log-spaced grid [{lo}, {hi}] with {n} points")));
        }
        Self::diagonal(log_space(lo, hi, n))
    }

    pub fn jordan(n: usize, c: f64, lambda0: f64) -> Result<Self> {
        if n == 0 || n > MAX_DENSE_DIM {
            return Err(Error::invalid(format!("Jordan dimension {n} not in 1..={MAX_DENSE_DIM}")));
        }
        if !(c.is_finite() && c >= 0.0) || !(lambda0.is_finite() && lambda0 >= 0.0) {
            return Err(Error::invalid("Jordan parameters need finite c ≥ 0 and λ₀ ≥ 0"));
        }
        Ok(Self { kind: ModelKind::JordanSurrogate { n, c, lambda0 }, sector_half_angle: FRAC_PI_2 })
    }

    pub fn matrix(generator: CMatrix) -> Result<Self> {
        if generator.dim() == 0 || generator.dim() > MAX_DENSE_DIM {
            return Err(Error::invalid(format!("generator dimension {} not in 1..={MAX_DENSE_DIM}", generator.dim())));
        }
        if !generator.is_finite() {
            return Err(Error::invalid("generator has non-finite entries"));
        }
        Ok(Self { kind: ModelKind::GeneralMatrix { generator }, sector_half_angle: FRAC_PI_2 })
    }

    /// Narrows the declared sector to `|arg(ωt)| ≤ half_angle`.
    pub fn with_sector(mut self, half_angle: f64) -> Result<Self> {
        if !(half_angle > 0.0 && half_angle <= FRAC_PI_2) {
            return Err(Error::invalid(format!("sector half-angle {half_angle} not in (0, pi/2]")));
        }
        self.sector_half_angle = half_angle;
        Ok(self)
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn sector_half_angle(&self) -> f64 {
        self.sector_half_angle
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            ModelKind::DiagonalMultiplication { grid, .. } => grid.len(),
            ModelKind::JordanSurrogate { n, .. } => *n,
            ModelKind::GeneralMatrix { generator } => generator.dim(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.kind, ModelKind::DiagonalMultiplication { .. })
    }

    fn rotation(&self) -> C64 {
        match &self.kind {
            ModelKind::DiagonalMultiplication { rotation, .. } => *rotation,
            _ => C64::new(1.0, 0.0),
        }
    }

    /// Whether `t` lies in the declared closed sector (or is zero).
    pub fn admits(&self, t: C64) -> bool {
        if !(t.re.is_finite() && t.im.is_finite()) {
            return false;
        }
        if t.re == 0.0 && t.im == 0.0 {
            return true;
        }
        let w = self.rotation() * t;
        w.arg().abs() <= self.sector_half_angle * (1.0 + 4.0 * f64::EPSILON)
    }

    /// Whether every point of the circle `|t − center| = radius` is admissible.
    pub fn admits_circle(&self, center: C64, radius: f64) -> bool {
        let w = self.rotation() * center;
        if !(radius < w.norm()) {
            return false;
        }
        w.arg().abs() + (radius / w.norm()).asin() <= self.sector_half_angle * (1.0 + 4.0 * f64::EPSILON)
    }

    /// Eigenvalues of `A` when they are known in closed form.
    pub fn exact_spectrum(&self) -> Option<Vec<C64>> {
        match &self.kind {
            ModelKind::DiagonalMultiplication { grid, rotation } => {
                Some(grid.iter().map(|x| rotation * x.ln()).collect())
            }
            ModelKind::JordanSurrogate { n, lambda0, .. } => Some(vec![C64::new(-lambda0, 0.0); *n]),
            ModelKind::GeneralMatrix { .. } => None,
        }
    }

    pub fn generator(&self) -> Operator {
        match &self.kind {
            ModelKind::DiagonalMultiplication { grid, rotation } => {
                Operator::Diagonal(grid.iter().map(|x| rotation * x.ln()).collect())
            }
            ModelKind::JordanSurrogate { n, c, lambda0 } => Operator::Dense(CMatrix::from_fn(*n, |i, j| {
                if i == j {
                    C64::new(-lambda0, 0.0)
                } else if i == j + 1 {
                    C64::new(*c, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            })),
            ModelKind::GeneralMatrix { generator } => Operator::Dense(generator.clone()),
        }
    }

    /// `T(t) = e^{tA}` for admissible `t`.
    pub fn semigroup_at(&self, t: C64) -> Result<Operator> {
        if !self.admits(t) {
            return Err(Error::DomainViolation(format!("t = {t} lies outside the model's sector")));
        }
        self.semigroup_unchecked(t)
    }

    /// `e^{tA}` without the sector check.
    pub(crate) fn semigroup_unchecked(&self, t: C64) -> Result<Operator> {
        match &self.kind {
            ModelKind::DiagonalMultiplication { grid, rotation } => {
                let wt = rotation * t;
                Ok(Operator::Diagonal(grid.iter().map(|x| (wt * x.ln()).exp()).collect()))
            }
            ModelKind::JordanSurrogate { n, c, lambda0 } => {
                // lower-triangular Toeplitz: entry (i, j) is e^{−λ₀t}(ct)^k/k!, k = i − j
                let mut coef = Vec::with_capacity(*n);
                let mut term = (-t * lambda0).exp();
                let ct = t * c;
                for k in 0..*n {
                    if k > 0 {
                        term = term * ct / k as f64;
                    }
                    coef.push(term);
                }
                Ok(Operator::Dense(CMatrix::from_fn(*n, |i, j| {
                    if i >= j {
                        coef[i - j]
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })))
            }
            ModelKind::GeneralMatrix { generator } => Ok(Operator::Dense(expm(&generator.scale(t))?)),
        }
    }

    /// `(A + zI)^{-1}`.
    pub fn resolvent(&self, z: C64) -> Result<Operator> {
        let mut shifted = self.generator();
        shifted.add_identity(z);
        match shifted {
            Operator::Diagonal(d) => {
                let mods: Vec<f64> = d.iter().map(|v| v.norm()).collect();
                let lo = mods.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = mods.iter().copied().fold(0.0, f64::max);
                let cond = if lo == 0.0 { f64::INFINITY } else { hi / lo };
                if !(cond <= SINGULAR_CONDITION) {
                    return Err(Error::SingularResolvent { condition_estimate: cond });
                }
                Ok(Operator::Diagonal(d.iter().map(|v| v.inv()).collect()))
            }
            Operator::Dense(m) => {
                let (inv, cond) = Lu::factor(&m)?.inverse();
                if !(cond <= SINGULAR_CONDITION) {
                    return Err(Error::SingularResolvent { condition_estimate: cond });
                }
                Ok(Operator::Dense(inv))
            }
        }
    }

    /// `a_χ = −ω log x_i` for each grid point of a diagonal model.
    pub fn character_data(&self) -> Result<CharacterData> {
        match &self.kind {
            ModelKind::DiagonalMultiplication { grid, rotation } => {
                Ok(CharacterData { a: grid.iter().map(|x| -rotation * x.ln()).collect() })
            }
            _ => Err(Error::UnsupportedModel("character data needs a diagonal model".into())),
        }
    }
}
