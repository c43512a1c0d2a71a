use super::{eigenvalues, CMatrix, Operator, MAX_DENSE_DIM};
use crate::prelude::*;

/// Controls for [`op_norm_dense`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIterationOptions {
    /// Stop once `‖M^H M v − λv‖ ≤ rel_tol·λ`.
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Also stop when λ has not moved by more than `plateau_tol·λ` for
    /// `plateau_len` consecutive iterations (near-degenerate top singular
    /// values, where the residual test cannot be met but λ is exact).
    pub plateau_tol: f64,
    pub plateau_len: usize,
}

impl Default for PowerIterationOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-10, max_iter: 10_000, plateau_tol: 1e-15, plateau_len: 50 }
    }
}

/// Operator 2-norm.
pub fn op_norm(m: &Operator) -> Result<f64> {
    match m {
        Operator::Diagonal(d) => Ok(d.iter().map(|v| v.norm()).fold(0.0, f64::max)),
        Operator::Dense(a) => op_norm_dense(a, PowerIterationOptions::default()),
    }
}

fn start_vector(n: usize, attempt: usize) -> Vec<C64> {
    (0..n)
        .map(|i| {
            let t = (i + 1) as f64 * (attempt + 1) as f64;
            C64::new(1.0 + 0.5 * (0.7 * t).sin(), 0.25 * (1.3 * t).cos())
        })
        .collect()
}

fn normalize(v: &mut [C64]) -> f64 {
    let nrm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if nrm > 0.0 {
        v.iter_mut().for_each(|c| *c /= nrm);
    }
    nrm
}

/// `sqrt(λ_max(M^H M))` from the QR eigenvalues of the Gram matrix.
fn gram_norm(a: &CMatrix) -> Result<f64> {
    let gram = a.adjoint().matmul(a);
    let top = eigenvalues(&gram)?.iter().map(|z| z.re).fold(0.0, f64::max);
    Ok(top.sqrt())
}

/// Largest singular value by power iteration on `M^H M`, restarting from a
/// fresh start vector when the iterate collapses into the kernel. If the
/// iteration cap is reached, the Gram matrix is diagonalized instead.
pub fn op_norm_dense(a: &CMatrix, opts: PowerIterationOptions) -> Result<f64> {
    let n = a.dim();
    if n > MAX_DENSE_DIM {
        return Err(Error::invalid(format!("dimension {n} exceeds the dense cap {MAX_DENSE_DIM}")));
    }
    if !a.is_finite() {
        return Err(Error::invalid("norm of a non-finite matrix"));
    }
    if a.max_abs() == 0.0 {
        return Ok(0.0);
    }
    if n == 1 {
        return Ok(a[(0, 0)].norm());
    }
    let mut best = 0.0f64;
    for attempt in 0..4 {
        let mut v = start_vector(n, attempt);
        normalize(&mut v);
        let mut lambda_prev = 0.0;
        let mut flat = 0usize;
        let mut collapsed = false;
        for _ in 0..opts.max_iter {
            let w = a.matvec(&v);
            let lambda: f64 = w.iter().map(|c| c.norm_sqr()).sum();
            best = best.max(lambda.sqrt());
            let mut y = a.adjoint_matvec(&w);
            let ynorm = y.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if ynorm == 0.0 || lambda == 0.0 {
                collapsed = true;
                break;
            }
            let resid = y
                .iter()
                .zip(&v)
                .map(|(yi, vi)| (yi - vi * lambda).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if resid <= opts.rel_tol * lambda {
                return Ok(best);
            }
            if (lambda - lambda_prev).abs() <= opts.plateau_tol * lambda {
                flat += 1;
                if flat >= opts.plateau_len {
                    return Ok(best);
                }
            } else {
                flat = 0;
            }
            lambda_prev = lambda;
            normalize(&mut y);
            v = y;
        }
        if !collapsed {
            // clustered top singular values: fall back to the Gram spectrum
            return gram_norm(a).map(|g| g.max(best)).map_err(|_| Error::numeric("power iteration hit its iteration cap", Some(best)));
        }
    }
    Err(Error::numeric("power iteration collapsed from every start vector", Some(best)))
}
