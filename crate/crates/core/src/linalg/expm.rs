//! Matrix exponential by scaling and squaring with diagonal Padé
//! approximants of degree 3 to 13 (Higham's 2005 variant).

use super::{CMatrix, Lu};
use crate::prelude::*;

const THETA: [(usize, f64); 4] = [
    (3, 1.495_585_217_958_292e-2),
    (5, 2.539_398_330_063_23e-1),
    (7, 9.504_178_996_162_932e-1),
    (9, 2.097_847_961_257_068),
];
const THETA_13: f64 = 5.371_920_351_148_152;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `e^A`.
pub fn expm(a: &CMatrix) -> Result<CMatrix> {
    if !a.is_finite() {
        return Err(Error::invalid("expm of a non-finite matrix"));
    }
    let n = a.dim();
    let norm = a.norm_one();
    for (m, theta) in THETA {
        if norm <= theta {
            let coeffs: &[f64] = match m {
                3 => &B3,
                5 => &B5,
                7 => &B7,
                _ => &B9,
            };
            return pade_low(a, coeffs);
        }
    }
    let s = if norm > THETA_13 { (norm / THETA_13).log2().ceil().max(0.0) as i32 } else { 0 };
    let scaled = a.scale(re(0.5f64.powi(s)));
    let mut x = pade13(&scaled)?;
    for _ in 0..s {
        x = x.matmul(&x);
    }
    debug_assert_eq!(x.dim(), n);
    if !x.is_finite() {
        return Err(Error::numeric("expm overflowed", None));
    }
    Ok(x)
}

fn solve_pade(u: &CMatrix, v: &CMatrix) -> Result<CMatrix> {
    let q = v.sub(u);
    let p = v.add(u);
    let lu = Lu::factor(&q).map_err(|_| Error::numeric("singular Pade denominator", None))?;
    Ok(lu.solve(&p))
}

fn pade_low(a: &CMatrix, b: &[f64]) -> Result<CMatrix> {
    let n = a.dim();
    let a2 = a.matmul(a);
    // even and odd parts in powers of A^2
    let mut even = CMatrix::identity(n).scale(re(b[0]));
    let mut odd = CMatrix::identity(n).scale(re(b[1]));
    let mut p = CMatrix::identity(n);
    let mut k = 2;
    while k < b.len() {
        p = p.matmul(&a2);
        even.axpy(re(b[k]), &p);
        odd.axpy(re(b[k + 1]), &p);
        k += 2;
    }
    let u = a.matmul(&odd);
    solve_pade(&u, &even)
}

fn pade13(a: &CMatrix) -> Result<CMatrix> {
    let n = a.dim();
    let b = &B13;
    let id = CMatrix::identity(n);
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a4.matmul(&a2);

    let mut inner_u = a6.scale(re(b[13]));
    inner_u.axpy(re(b[11]), &a4);
    inner_u.axpy(re(b[9]), &a2);
    let mut u = a6.matmul(&inner_u);
    u.axpy(re(b[7]), &a6);
    u.axpy(re(b[5]), &a4);
    u.axpy(re(b[3]), &a2);
    u.axpy(re(b[1]), &id);
    let u = a.matmul(&u);

    let mut inner_v = a6.scale(re(b[12]));
    inner_v.axpy(re(b[10]), &a4);
    inner_v.axpy(re(b[8]), &a2);
    let mut v = a6.matmul(&inner_v);
    v.axpy(re(b[6]), &a6);
    v.axpy(re(b[4]), &a4);
    v.axpy(re(b[2]), &a2);
    v.axpy(re(b[0]), &id);

    solve_pade(&u, &v)
}
