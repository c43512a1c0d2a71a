use super::CMatrix;
use crate::prelude::*;

/// Condition estimates above this are treated as singular.
pub const SINGULAR_CONDITION: f64 = 1e14;

/// LU factorization with partial pivoting, `PA = LU`.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: CMatrix,
    perm: Vec<usize>,
    norm_one: f64,
}

impl Lu {
    /// Factors `a`. Fails with [`Error::SingularResolvent`] on an exactly
    /// zero pivot.
    pub fn factor(a: &CMatrix) -> Result<Self> {
        let n = a.dim();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm()))
                .unwrap_or(k);
            let pivot = lu[(p, k)];
            if pivot.norm() == 0.0 || !pivot.norm().is_finite() {
                return Err(Error::SingularResolvent { condition_estimate: f64::INFINITY });
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
            }
            for i in (k + 1)..n {
                let l = lu[(i, k)] / pivot;
                lu[(i, k)] = l;
                if l == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in (k + 1)..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= l * u;
                }
            }
        }
        Ok(Self { lu, perm, norm_one: a.norm_one() })
    }

    pub fn solve_vec(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.dim();
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = self.lu.row(i);
            let s: C64 = row[..i].iter().zip(&x[..i]).map(|(l, xj)| l * xj).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let s: C64 = row[i + 1..].iter().zip(&x[i + 1..]).map(|(u, xj)| u * xj).sum();
            x[i] = (x[i] - s) / row[i];
        }
        x
    }

    pub fn solve(&self, b: &CMatrix) -> CMatrix {
        let n = b.dim();
        let mut out = CMatrix::zeros(n);
        for j in 0..n {
            let col: Vec<C64> = (0..n).map(|i| b[(i, j)]).collect();
            let x = self.solve_vec(&col);
            for i in 0..n {
                out[(i, j)] = x[i];
            }
        }
        out
    }

    /// Inverse together with the 1-norm condition number `‖A‖₁‖A⁻¹‖₁`.
    pub fn inverse(&self) -> (CMatrix, f64) {
        let inv = self.solve(&CMatrix::identity(self.lu.dim()));
        let cond = self.norm_one * inv.norm_one();
        (inv, cond)
    }
}

/// `a⁻¹`, rejecting numerically singular inputs.
pub fn checked_inverse(a: &CMatrix) -> Result<CMatrix> {
    let (inv, cond) = Lu::factor(a)?.inverse();
    if !(cond <= SINGULAR_CONDITION) {
        return Err(Error::SingularResolvent { condition_estimate: cond });
    }
    Ok(inv)
}
