//! Eigenvalues of dense complex matrices: Householder reduction to upper
//! Hessenberg form followed by single-shift QR with Wilkinson shifts.

use super::CMatrix;
use crate::prelude::*;

const ITERATIONS_PER_EIGENVALUE: usize = 60;

/// Unitarily similar upper Hessenberg form of `a`.
pub fn hessenberg(a: &CMatrix) -> CMatrix {
    let n = a.dim();
    let mut h = a.clone();
    if n < 3 {
        return h;
    }
    for k in 0..(n - 2) {
        let x: Vec<C64> = ((k + 1)..n).map(|i| h[(i, k)]).collect();
        let xnorm = x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let tail = x[1..].iter().map(|v| v.norm_sqr()).sum::<f64>();
        if xnorm == 0.0 || tail == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 { C64::new(1.0, 0.0) } else { x[0] / x[0].norm() };
        let alpha = -phase * xnorm;
        let mut v = x;
        v[0] -= alpha;
        let vnorm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|c| *c /= vnorm);

        // H <- (I - 2vv^H) H on rows k+1..n
        for j in 0..n {
            let dot: C64 = v.iter().enumerate().map(|(r, vr)| vr.conj() * h[(k + 1 + r, j)]).sum();
            for (r, vr) in v.iter().enumerate() {
                h[(k + 1 + r, j)] -= vr * dot * 2.0;
            }
        }
        // H <- H (I - 2vv^H) on columns k+1..n
        for i in 0..n {
            let dot: C64 = v.iter().enumerate().map(|(r, vr)| h[(i, k + 1 + r)] * vr).sum();
            for (r, vr) in v.iter().enumerate() {
                h[(i, k + 1 + r)] -= dot * vr.conj() * 2.0;
            }
        }
        for i in (k + 2)..n {
            h[(i, k)] = C64::new(0.0, 0.0);
        }
    }
    h
}

/// Rotation `G = [[c, s], [-conj(s), c]]` with `G (x, y)^T = (r, 0)^T`.
fn givens(x: C64, y: C64) -> (f64, C64) {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    if x.norm() == 0.0 {
        return (0.0, y.conj() / y.norm());
    }
    let phase = x / x.norm();
    (x.norm() / r, phase * y.conj() / r)
}

/// All eigenvalues of `a`, in no particular order.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<C64>> {
    let n = a.dim();
    if !a.is_finite() {
        return Err(Error::invalid("eigenvalues of a non-finite matrix"));
    }
    let mut h = hessenberg(a);
    let mut eigs = Vec::with_capacity(n);
    if n == 0 {
        return Ok(eigs);
    }
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    let budget = ITERATIONS_PER_EIGENVALUE * n.max(1);
    let mut rotations: Vec<(f64, C64)> = Vec::with_capacity(n);
    loop {
        if hi == 0 {
            eigs.push(h[(0, 0)]);
            break;
        }
        // locate the active block [lo, hi]
        let mut lo = hi;
        while lo > 0 {
            let scale = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            let sub = h[(lo, lo - 1)].norm();
            if sub <= f64::EPSILON * scale || sub < f64::MIN_POSITIVE {
                h[(lo, lo - 1)] = C64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigs.push(h[(hi, hi)]);
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if total > budget {
            return Err(Error::numeric("QR iteration did not converge", None));
        }

        let shift = if iter.is_multiple_of(11) {
            // exceptional shift to break cycles
            h[(hi, hi)] + C64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        for k in lo..=hi {
            h[(k, k)] -= shift;
        }
        rotations.clear();
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rotations.push((c, s));
            for j in k..=hi {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
        }
        for (idx, &(c, s)) in rotations.iter().enumerate() {
            let k = lo + idx;
            for i in lo..=(k + 1).min(hi) {
                let p = h[(i, k)];
                let q = h[(i, k + 1)];
                h[(i, k)] = p * c + q * s.conj();
                h[(i, k + 1)] = -p * s + q * c;
            }
        }
        for k in lo..=hi {
            h[(k, k)] += shift;
        }
    }
    Ok(eigs)
}

/// Eigenvalue of `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let l1 = mid + disc;
    let l2 = mid - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sorted_by_modulus(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.arg().total_cmp(&b.arg())));
        v
    }

    #[test]
    fn hessenberg_is_similar() {
        let a = CMatrix::from_fn(6, |i, j| c((i * 3 + j) as f64 % 7.0 - 3.0, (i + j * j) as f64 % 5.0 - 2.0));
        let h = hessenberg(&a);
        for i in 0..6usize {
            for j in 0..i.saturating_sub(1) {
                assert_eq!(h[(i, j)], c(0.0, 0.0));
            }
        }
        let tr_a: C64 = a.diagonal().iter().sum();
        let tr_h: C64 = h.diagonal().iter().sum();
        assert!((tr_a - tr_h).norm() < 1e-12);
        assert!((a.norm_frobenius() - h.norm_frobenius()).abs() < 1e-12);
    }

    #[test]
    fn companion_matrix_roots() {
        // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
        let a = CMatrix::from_rows(&[
            vec![c(6.0, 0.0), c(-11.0, 0.0), c(6.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let e = sorted_by_modulus(eigenvalues(&a).unwrap());
        for (got, want) in e.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-12, "{got}");
        }
    }

    #[test]
    fn rotation_matrix_has_conjugate_pair() {
        let a = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(-1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        let e = eigenvalues(&a).unwrap();
        assert_eq!(e.len(), 2);
        for v in e {
            assert!((v.norm() - 1.0).abs() < 1e-14 && v.re.abs() < 1e-14);
        }
    }

    #[test]
    fn permutation_cycle() {
        // 5-cycle: eigenvalues are the fifth roots of unity; QR stalls without exceptional shifts
        let a = CMatrix::from_fn(5, |i, j| if (j + 1) % 5 == i { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let e = eigenvalues(&a).unwrap();
        for v in &e {
            assert!((v.powu(5) - c(1.0, 0.0)).norm() < 1e-10, "{v}");
        }
    }
}
