//! Gauss–Legendre rules and the trapezoid rule on circles.

use core::f64::consts::PI;

use crate::prelude::*;

/// Gauss–Legendre nodes and weights on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `order`-point rule by Newton iteration on `P_order`
    /// started from Tricomi's approximation of the roots.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("Gauss-Legendre order must be positive"));
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // map [-1, 1] -> [0, 1]
            nodes[i] = 0.5 * (1.0 - x);
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `∫_a^b f` for a complex-valued integrand.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> C64) -> C64 {
        let h = b - a;
        self.iter().map(|(x, w)| f(a + h * x) * (w * h)).sum()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes `ζ_j` and trapezoid weights `dζ_j` for the positively oriented
/// circle `|ζ - center| = radius` with `n` equispaced nodes, so that
/// `∮ g(ζ) dζ ≈ Σ g(ζ_j) dζ_j`.
pub fn circle_rule(center: C64, radius: f64, n: usize) -> Vec<(C64, C64)> {
    (0..n)
        .map(|j| {
            let phase = C64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
            let node = center + phase * radius;
            let dz = C64::i() * phase * (radius * 2.0 * PI / n as f64);
            (node, dz)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        for order in [1usize, 2, 5, 8, 16, 32, 48] {
            let gl = GaussLegendre::new(order).unwrap();
            let total: f64 = gl.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-14, "order {order}");
            for deg in 0..(2 * order) {
                let got = gl.integrate(0.0, 1.0, |x| C64::new(x.powi(deg as i32), 0.0)).re;
                let want = 1.0 / (deg as f64 + 1.0);
                assert!((got - want).abs() < 1e-13, "order {order} degree {deg}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn gauss_legendre_entire_integrand() {
        // ∫_0^1 e^{cs} ds = (e^c - 1)/c for complex c
        let gl = GaussLegendre::new(32).unwrap();
        let c = C64::new(12.0, -7.0);
        let got = gl.integrate(0.0, 1.0, |s| (c * s).exp());
        let want = (c.exp() - 1.0) / c;
        assert!((got - want).norm() / want.norm() < 1e-13);
        assert!(GaussLegendre::new(0).is_err());
    }

    #[test]
    fn circle_rule_residues() {
        let rule = circle_rule(C64::new(1.0, 0.0), 0.25, 64);
        let inv: C64 = rule.iter().map(|(z, dz)| dz / (z - 1.0)).sum();
        assert!((inv - C64::new(0.0, 2.0 * PI)).norm() < 1e-13);
        let inv2: C64 = rule.iter().map(|(z, dz)| dz / ((z - 1.0) * (z - 1.0))).sum();
        assert!(inv2.norm() < 1e-13);
    }
}
