use statrs::function::gamma::gamma;

use super::tridiag::eigen_first_components;
use crate::error::Result;

/// Generalized Gauss–Laguerre rule for `∫₀^∞ f(z) z^α e^{−z} dz`.
#[derive(Clone, Debug)]
pub struct GaussLaguerre {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerre {
    /// Golub–Welsch on the Jacobi matrix of the monic Laguerre recurrence.
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        let diag: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..n)
            .map(|i| (i as f64 * (i as f64 + alpha)).sqrt())
            .collect();
        let (nodes, first) = eigen_first_components(&diag, &off)?;
        let mass = gamma(alpha + 1.0);
        let weights = first.iter().map(|v| mass * v * v).collect();
        Ok(GaussLaguerre {
            alpha,
            nodes,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| if w == 0.0 { 0.0 } else { w * f(z) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    #[test]
    fn exact_on_polynomials() {
        // ∫ z^k z^α e^{−z} = Γ(k+α+1)
        for alpha in [0.0, 0.5, 1.5, 4.5] {
            let q = GaussLaguerre::new(12, alpha).unwrap();
            for k in 0..20 {
                let got = q.integrate(|z| z.powi(k));
                let want = gamma(k as f64 + alpha + 1.0);
                assert!(((got - want) / want).abs() < 1e-11, "alpha={alpha} k={k}");
            }
        }
    }

    #[test]
    fn nodes_match_dense_eigenvalues() {
        let n = 15;
        let alpha = 2.5;
        let q = GaussLaguerre::new(n, alpha).unwrap();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                2.0 * i as f64 + alpha + 1.0
            } else if i.abs_diff(j) == 1 {
                let k = i.max(j) as f64;
                (k * (k + alpha)).sqrt()
            } else {
                0.0
            }
        });
        let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        for (a, b) in q.nodes.iter().zip(&ev) {
            assert!((a - b).abs() < 1e-10 * b.max(1.0));
        }
        assert!(q.nodes.iter().all(|&z| z > 0.0));
        assert!(q.weights.iter().all(|&w| w >= 0.0));
    }

    #[test]
    fn large_rules_stay_finite() {
        let q = GaussLaguerre::new(400, 3.5).unwrap();
        assert_eq!(q.len(), 400);
        assert!(q.weights.iter().all(|w| w.is_finite()));
        let total: f64 = q.weights.iter().sum();
        assert!((total / gamma(4.5) - 1.0).abs() < 1e-12);
    }
}
