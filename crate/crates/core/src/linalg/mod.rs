//! Small dense complex linear algebra, plus a diagonal fast path.
//!
//! Dense matrices are square and row-major; every algorithm here is `O(n^3)`
//! at worst and intended for `n ≤ 512`. Diagonal operators never densify
//! unless mixed with a dense operand.

mod eigen;
mod expm;
mod lu;
mod norm;

use core::ops::{Index, IndexMut};

use crate::prelude::*;

pub use eigen::{eigenvalues, hessenberg};
pub use expm::expm;
pub use lu::{checked_inverse, Lu, SINGULAR_CONDITION};
pub use norm::{op_norm, op_norm_dense, PowerIterationOptions};

/// Largest dense dimension the crate will work with.
pub const MAX_DENSE_DIM: usize = 512;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diagonal(d: &[C64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix rows must form a non-empty square array"));
        }
        Ok(Self { n, data: rows.iter().flatten().copied().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    /// `self + s·other`.
    pub fn axpy(&mut self, s: C64, other: &Self) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    pub fn add_diagonal(&mut self, s: C64) {
        for i in 0..self.n {
            self[(i, i)] += s;
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let orow = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[C64]) -> Vec<C64> {
        (0..self.n).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// `self^H x`.
    pub fn adjoint_matvec(&self, x: &[C64]) -> Vec<C64> {
        let n = self.n;
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, xi) in x.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += a.conj() * xi;
            }
        }
        out
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| ((i + 1)..self.n).all(|j| self[(i, j)] == C64::new(0.0, 0.0)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == C64::new(0.0, 0.0)))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// A linear operator on `C^n`, kept diagonal whenever possible.
#[derive(Debug, Clone, PartialEq)]
pub enum Operator {
    Diagonal(Vec<C64>),
    Dense(CMatrix),
}

impl Operator {
    pub fn zeros(n: usize, diagonal: bool) -> Self {
        if diagonal {
            Operator::Diagonal(vec![C64::new(0.0, 0.0); n])
        } else {
            Operator::Dense(CMatrix::zeros(n))
        }
    }

    pub fn identity(n: usize, diagonal: bool) -> Self {
        if diagonal {
            Operator::Diagonal(vec![C64::new(1.0, 0.0); n])
        } else {
            Operator::Dense(CMatrix::identity(n))
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Operator::Diagonal(d) => d.len(),
            Operator::Dense(m) => m.dim(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, Operator::Diagonal(_))
    }

    pub fn to_dense(&self) -> CMatrix {
        match self {
            Operator::Diagonal(d) => CMatrix::from_diagonal(d),
            Operator::Dense(m) => m.clone(),
        }
    }

    pub fn diagonal(&self) -> Vec<C64> {
        match self {
            Operator::Diagonal(d) => d.clone(),
            Operator::Dense(m) => m.diagonal(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        match self {
            Operator::Diagonal(d) if i == j => d[i],
            Operator::Diagonal(_) => C64::new(0.0, 0.0),
            Operator::Dense(m) => m[(i, j)],
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        match self {
            Operator::Diagonal(d) => Operator::Diagonal(d.iter().map(|v| v * s).collect()),
            Operator::Dense(m) => Operator::Dense(m.scale(s)),
        }
    }

    /// `self + s·other`, staying diagonal when both operands are.
    pub fn axpy(&mut self, s: C64, other: &Operator) {
        match (&mut *self, other) {
            (Operator::Diagonal(a), Operator::Diagonal(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y * s;
                }
            }
            (Operator::Dense(a), b) => match b {
                Operator::Dense(b) => a.axpy(s, b),
                Operator::Diagonal(b) => {
                    for (i, y) in b.iter().enumerate() {
                        a[(i, i)] += y * s;
                    }
                }
            },
            (Operator::Diagonal(_), Operator::Dense(b)) => {
                let mut a = self.to_dense();
                a.axpy(s, b);
                *self = Operator::Dense(a);
            }
        }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        let mut out = self.clone();
        out.axpy(C64::new(-1.0, 0.0), other);
        out
    }

    pub fn add_identity(&mut self, s: C64) {
        match self {
            Operator::Diagonal(d) => d.iter_mut().for_each(|v| *v += s),
            Operator::Dense(m) => m.add_diagonal(s),
        }
    }

    pub fn matmul(&self, other: &Operator) -> Operator {
        match (self, other) {
            (Operator::Diagonal(a), Operator::Diagonal(b)) => {
                Operator::Diagonal(a.iter().zip(b).map(|(x, y)| x * y).collect())
            }
            (Operator::Diagonal(a), Operator::Dense(b)) => {
                Operator::Dense(CMatrix::from_fn(b.dim(), |i, j| a[i] * b[(i, j)]))
            }
            (Operator::Dense(a), Operator::Diagonal(b)) => {
                Operator::Dense(CMatrix::from_fn(a.dim(), |i, j| a[(i, j)] * b[j]))
            }
            (Operator::Dense(a), Operator::Dense(b)) => Operator::Dense(a.matmul(b)),
        }
    }

    /// Largest singular value.
    pub fn norm(&self) -> Result<f64> {
        op_norm(self)
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        spec_radius(self)
    }

    pub fn max_abs(&self) -> f64 {
        match self {
            Operator::Diagonal(d) => d.iter().map(|v| v.norm()).fold(0.0, f64::max),
            Operator::Dense(m) => m.max_abs(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Operator::Diagonal(d) => d.iter().all(|v| v.re.is_finite() && v.im.is_finite()),
            Operator::Dense(m) => m.is_finite(),
        }
    }
}

/// Spectral radius. Diagonal and triangular inputs are read off the
/// diagonal; everything else goes through the Hessenberg QR eigensolver.
pub fn spec_radius(m: &Operator) -> Result<f64> {
    let max_diag = |d: &[C64]| d.iter().map(|v| v.norm()).fold(0.0, f64::max);
    match m {
        Operator::Diagonal(d) => Ok(max_diag(d)),
        Operator::Dense(a) => {
            if a.dim() > MAX_DENSE_DIM {
                return Err(Error::invalid(format!(
                    "dimension {} exceeds the dense cap {MAX_DENSE_DIM}",
                    a.dim()
                )));
            }
            if a.is_lower_triangular() || a.is_upper_triangular() {
                return Ok(max_diag(&a.diagonal()));
            }
            let eig = eigenvalues(a)?;
            Ok(eig.iter().map(|v| v.norm()).fold(0.0, f64::max))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_and_dense_products_agree() {
        let d = Operator::Diagonal(vec![c(1.0, 1.0), c(-2.0, 0.5)]);
        let m = Operator::Dense(CMatrix::from_rows(&[vec![c(0.0, 1.0), c(2.0, 0.0)], vec![c(3.0, -1.0), c(1.0, 1.0)]]).unwrap());
        let dm = d.matmul(&m).to_dense();
        let dm2 = d.to_dense().matmul(&m.to_dense());
        assert!(dm.sub(&dm2).max_abs() < 1e-15);
        let md = m.matmul(&d).to_dense();
        let md2 = m.to_dense().matmul(&d.to_dense());
        assert!(md.sub(&md2).max_abs() < 1e-15);
        assert!(d.matmul(&d).is_diagonal());
    }

    #[test]
    fn spectral_radius_examples() {
        let nil = Operator::Dense(CMatrix::from_fn(5, |i, j| if i == j + 1 { c(1.0, 0.0) } else { c(0.0, 0.0) }));
        assert_eq!(spec_radius(&nil).unwrap(), 0.0);
        let tri = Operator::Dense(CMatrix::from_fn(4, |i, j| if j <= i { c(i as f64 - 2.5, j as f64) } else { c(0.0, 0.0) }));
        let want = (0..4).map(|i| c(i as f64 - 2.5, i as f64).norm()).fold(0.0, f64::max);
        assert_eq!(spec_radius(&tri).unwrap(), want);
        let diag = Operator::Diagonal(vec![c(0.1, 0.0), c(0.0, -0.3)]);
        assert_eq!(spec_radius(&diag).unwrap(), 0.3);
    }

    #[test]
    fn axpy_mixes_representations() {
        let mut a = Operator::Diagonal(vec![c(1.0, 0.0); 2]);
        let b = Operator::Dense(CMatrix::from_fn(2, |_, _| c(1.0, 0.0)));
        a.axpy(c(2.0, 0.0), &b);
        assert_eq!(a.to_dense(), CMatrix::from_rows(&[vec![c(3.0, 0.0), c(2.0, 0.0)], vec![c(2.0, 0.0), c(3.0, 0.0)]]).unwrap());
    }
}
