//! JSON forms of measures, models and certificates.

use fbcalc_core::geometry::Polyline;
use fbcalc_core::jordan::{JordanCertificate, Margins};
use fbcalc_core::linalg::CMatrix;
use fbcalc_core::measure::{Atom, CompactMeasure, ContourComponent, DEFAULT_CONTOUR_NODES};
use fbcalc_core::operator::SemigroupModel;
use fbcalc_core::C64;
use serde::{Deserialize, Serialize};

use crate::error::AppError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub re: f64,
    pub im: f64,
    pub w_re: f64,
    pub w_im: f64,
}

fn default_nodes() -> usize {
    DEFAULT_CONTOUR_NODES
}

fn default_order() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContourSpec {
    pub center_re: f64,
    pub center_im: f64,
    pub radius: f64,
    pub pole_re: f64,
    pub pole_im: f64,
    #[serde(default = "default_order")]
    pub order: u32,
    pub coef_re: f64,
    pub coef_im: f64,
    #[serde(default = "default_nodes")]
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureSpec {
    #[serde(default)]
    pub atoms: Vec<AtomSpec>,
    #[serde(default)]
    pub contours: Vec<ContourSpec>,
    /// Omitted: inferred from the parts.
    #[serde(default)]
    pub symmetric: Option<bool>,
}

fn finite(name: &str, values: &[f64]) -> Result<(), AppError> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(AppError::Input(format!("{name}: non-finite number")))
    }
}

impl MeasureSpec {
    pub fn to_measure(&self) -> Result<CompactMeasure, AppError> {
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, a) in self.atoms.iter().enumerate() {
            finite(&format!("atom {i}"), &[a.re, a.im, a.w_re, a.w_im])?;
            atoms.push(Atom::new(C64::new(a.re, a.im), C64::new(a.w_re, a.w_im)));
        }
        let mut contours = Vec::with_capacity(self.contours.len());
        for (i, c) in self.contours.iter().enumerate() {
            finite(&format!("contour {i}"), &[c.center_re, c.center_im, c.radius, c.pole_re, c.pole_im, c.coef_re, c.coef_im])?;
            if c.radius <= 0.0 {
                return Err(AppError::Input(format!("contour {i}: radius must be positive")));
            }
            contours.push(ContourComponent::new(
                C64::new(c.center_re, c.center_im),
                c.radius,
                C64::new(c.pole_re, c.pole_im),
                c.order,
                C64::new(c.coef_re, c.coef_im),
                c.nodes,
            )?);
        }
        Ok(match self.symmetric {
            Some(s) => CompactMeasure::new(atoms, contours, s)?,
            None => CompactMeasure::from_parts(atoms, contours)?,
        })
    }

    pub fn from_measure(mu: &CompactMeasure) -> Self {
        Self {
            atoms: mu
                .atoms()
                .iter()
                .map(|a| AtomSpec { re: a.location.re, im: a.location.im, w_re: a.weight.re, w_im: a.weight.im })
                .collect(),
            contours: mu
                .contours()
                .iter()
                .map(|c| ContourSpec {
                    center_re: c.center.re,
                    center_im: c.center.im,
                    radius: c.radius,
                    pole_re: c.pole.re,
                    pole_im: c.pole.im,
                    order: c.order,
                    coef_re: c.coefficient.re,
                    coef_im: c.coefficient.im,
                    nodes: c.nodes,
                })
                .collect(),
            symmetric: Some(mu.is_symmetric()),
        }
    }
}

/// Model JSON, tagged by `"variant"`.
///
/// Dense matrices are given as `rows`, a list of rows of `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    Diagonal {
        grid: Vec<f64>,
        /// Rotation angle `φ` of `ω = e^{iφ}`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rotation: Option<f64>,
    },
    LogSpaced {
        lo: f64,
        hi: f64,
        n: usize,
    },
    Jordan {
        n: usize,
        c: f64,
        lambda0: f64,
    },
    Matrix {
        rows: Vec<Vec<[f64; 2]>>,
    },
}

impl ModelSpec {
    pub fn to_model(&self) -> Result<SemigroupModel, AppError> {
        Ok(match self {
            ModelSpec::Diagonal { grid, rotation } => {
                finite("grid", grid)?;
                match rotation {
                    Some(phi) => {
                        finite("rotation", &[*phi])?;
                        SemigroupModel::diagonal_rotated(grid.clone(), C64::from_polar(1.0, *phi))?
                    }
                    None => SemigroupModel::diagonal(grid.clone())?,
                }
            }
            ModelSpec::LogSpaced { lo, hi, n } => {
                finite("log_spaced", &[*lo, *hi])?;
                SemigroupModel::log_spaced(*lo, *hi, *n)?
            }
            ModelSpec::Jordan { n, c, lambda0 } => {
                finite("jordan", &[*c, *lambda0])?;
                SemigroupModel::jordan(*n, *c, *lambda0)?
            }
            ModelSpec::Matrix { rows } => {
                let rows: Vec<Vec<C64>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|[re, im]| {
                                finite("rows", &[*re, *im])?;
                                Ok(C64::new(*re, *im))
                            })
                            .collect::<Result<_, AppError>>()
                    })
                    .collect::<Result<_, _>>()?;
                SemigroupModel::matrix(CMatrix::from_rows(&rows)?)?
            }
        })
    }
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateSpec {
    pub b: f64,
    pub fb: f64,
    pub negated: bool,
    pub m: u32,
    pub delta: f64,
    pub a0: [f64; 2],
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub a3: [f64; 2],
    pub gamma1: Vec<[f64; 2]>,
    pub sample_density: usize,
    pub margin_i: f64,
    pub margin_ii: f64,
}

impl From<&JordanCertificate> for CertificateSpec {
    fn from(c: &JordanCertificate) -> Self {
        Self {
            b: c.b,
            fb: c.fb,
            negated: c.negated,
            m: c.m,
            delta: c.delta,
            a0: pair(c.a0),
            a1: pair(c.a1),
            a2: pair(c.a2),
            a3: pair(c.a3),
            gamma1: c.gamma1.vertices().iter().copied().map(pair).collect(),
            sample_density: c.sample_density,
            margin_i: c.margins.margin_i,
            margin_ii: c.margins.margin_ii,
        }
    }
}

impl CertificateSpec {
    pub fn to_certificate(&self) -> Result<JordanCertificate, AppError> {
        let mut all = vec![self.b, self.fb, self.delta, self.margin_i, self.margin_ii];
        all.extend(self.a0.iter().chain(&self.a1).chain(&self.a2).chain(&self.a3));
        all.extend(self.gamma1.iter().flatten());
        finite("certificate", &all)?;
        Ok(JordanCertificate {
            b: self.b,
            fb: self.fb,
            negated: self.negated,
            m: self.m,
            delta: self.delta,
            a0: unpair(self.a0),
            a1: unpair(self.a1),
            a2: unpair(self.a2),
            a3: unpair(self.a3),
            gamma1: Polyline::new(self.gamma1.iter().copied().map(unpair).collect())?,
            sample_density: self.sample_density,
            margins: Margins { margin_i: self.margin_i, margin_ii: self.margin_ii },
        })
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, AppError> {
    let text = std::fs::read_to_string(path).map_err(|e| AppError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| AppError::Input(format!("{}: {e}", path.display())))
}
