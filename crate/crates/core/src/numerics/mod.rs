//! Floating-point cross-checks: finite-difference spectra of the radial
//! Hamiltonian `−d²/dx² + V(x)`, wavefunctions built from exceptional
//! polynomials, and Gauss–Laguerre integrals under the deformed weight.

mod quadrature;
pub mod tridiag;

pub use quadrature::GaussLaguerre;

use serde::{Deserialize, Serialize};

use crate::eop::{EopFamily, EopPolynomial};
use crate::error::{Error, Result};
use crate::exactmath::{rational_to_f64, Rational};
use crate::qrf::Potential;

/// Two-grid estimates further apart than this are reported as unconverged.
pub const RICHARDSON_GAP: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Right end of the box, in absolute units of `x`.
    pub x_max: f64,
    /// Number of intervals on the coarse grid.
    pub n_points: usize,
    pub extrapolate: bool,
    pub n_eigen: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            x_max: 12.0,
            n_points: 4000,
            extrapolate: true,
            n_eigen: 5,
        }
    }
}

impl SolverConfig {
    /// Defaults with `x_max = 12/√ω`.
    pub fn for_omega(omega: &Rational) -> Self {
        SolverConfig {
            x_max: 12.0 / rational_to_f64(omega).sqrt(),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_max > 0.0 && self.x_max.is_finite()) {
            return Err(Error::InvalidConfig(format!("x_max must be positive, got {}", self.x_max)));
        }
        if self.n_points < 100 {
            return Err(Error::InvalidConfig(format!("n_points must be at least 100, got {}", self.n_points)));
        }
        if self.n_eigen == 0 {
            return Err(Error::InvalidConfig("n_eigen must be at least 1".into()));
        }
        Ok(())
    }
}

/// Interior nodes `x_i = i·h`, `i = 1..intervals`, with `h = x_max/intervals`.
pub fn grid(x_max: f64, intervals: usize) -> (Vec<f64>, f64) {
    let h = x_max / intervals as f64;
    ((1..intervals).map(|i| i as f64 * h).collect(), h)
}

pub fn sample_potential(pot: &Potential, xs: &[f64]) -> Result<Vec<f64>> {
    xs.iter().map(|&x| pot.eval(x)).collect()
}

fn fd_matrix(samples: &[f64], h: f64) -> (Vec<f64>, Vec<f64>) {
    let k = 1.0 / (h * h);
    let diag = samples.iter().map(|v| 2.0 * k + v).collect();
    let off = vec![-k; samples.len().saturating_sub(1)];
    (diag, off)
}

/// Lowest eigenvalues of the three-point discretisation with Dirichlet ends.
pub fn fd_eigenvalues(samples: &[f64], h: f64, count: usize) -> Vec<f64> {
    let (d, e) = fd_matrix(samples, h);
    tridiag::lowest_eigenvalues(&d, &e, count)
}

/// Eigenvalues together with unit grid eigenvectors.
pub fn fd_eigenpairs(samples: &[f64], h: f64, count: usize) -> Vec<(f64, Vec<f64>)> {
    let (d, e) = fd_matrix(samples, h);
    tridiag::lowest_eigenvalues(&d, &e, count)
        .into_iter()
        .map(|lambda| (lambda, tridiag::eigenvector(&d, &e, lambda)))
        .collect()
}

/// Lowest `cfg.n_eigen` eigenvalues of `−d²/dx² + V`, Richardson-combined
/// from `n_points` and `2·n_points` intervals when `cfg.extrapolate` is set.
pub fn eig_solve(pot: &Potential, cfg: &SolverConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    let solve = |intervals: usize| -> Result<Vec<f64>> {
        let (xs, h) = grid(cfg.x_max, intervals);
        Ok(fd_eigenvalues(&sample_potential(pot, &xs)?, h, cfg.n_eigen))
    };
    if !cfg.extrapolate {
        return solve(cfg.n_points);
    }
    let coarse = solve(cfg.n_points)?;
    let fine = solve(2 * cfg.n_points)?;
    coarse
        .iter()
        .zip(&fine)
        .enumerate()
        .map(|(index, (&c, &f))| {
            if (c - f).abs() > RICHARDSON_GAP {
                Err(Error::ConvergenceFailure {
                    index,
                    coarse: c,
                    fine: f,
                    tol: RICHARDSON_GAP,
                })
            } else {
                Ok((4.0 * f - c) / 3.0)
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    #[serde(with = "crate::exactmath::rational_str::vec")]
    pub formula_values: Vec<Rational>,
    pub max_rel_error: f64,
}

impl SpectrumReport {
    pub fn new(eigenvalues: Vec<f64>, formula_values: Vec<Rational>) -> Self {
        let max_rel_error = eigenvalues
            .iter()
            .zip(&formula_values)
            .map(|(e, f)| {
                let f = rational_to_f64(f);
                (e - f).abs() / f.abs().max(f64::MIN_POSITIVE)
            })
            .fold(0.0, f64::max);
        SpectrumReport {
            eigenvalues,
            formula_values,
            max_rel_error,
        }
    }

    pub fn relative_errors(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(&self.formula_values)
            .map(|(e, f)| {
                let f = rational_to_f64(f);
                (e - f).abs() / f.abs()
            })
            .collect()
    }
}

/// Solves numerically and compares against the first `cfg.n_eigen` formula values.
pub fn spectrum_report(pot: &Potential, formula: &[Rational], cfg: &SolverConfig) -> Result<SpectrumReport> {
    let ev = eig_solve(pot, cfg)?;
    Ok(SpectrumReport::new(ev, formula.iter().take(cfg.n_eigen).cloned().collect()))
}

/// Relative level-by-level gap between two numeric spectra.
pub fn max_relative_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / x.abs().max(y.abs()))
        .fold(0.0, f64::max)
}

/// `η(z)·y(z)/g(z)` with `η = z^{(2α+1)/4} e^{−z/2}`, `z = ωx²/2`; unnormalised.
pub fn wavefunction(fam: &EopFamily, y: &EopPolynomial, omega: f64, x: f64) -> Result<f64> {
    let z = 0.5 * omega * x * x;
    let g = fam.g.eval_f64(z);
    if g.abs() < 1e-12 {
        return Err(Error::PoleEncountered { x });
    }
    let alpha = rational_to_f64(&fam.alpha);
    let eta = z.powf((2.0 * alpha + 1.0) / 4.0) * (-0.5 * z).exp();
    Ok(eta * y.y.eval_f64(z) / g)
}

/// Sign changes along a sampled function, ignoring entries below
/// `rel_floor` times the peak magnitude.
pub fn sign_changes(values: &[f64], rel_floor: f64) -> usize {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = rel_floor * peak;
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && last.signum() != v.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}

/// Relative tolerance for the doubled-node convergence certificate.
pub const QUADRATURE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub doubled: f64,
    pub nodes: usize,
}

fn weighted(q: &GaussLaguerre, fam: &EopFamily, a: &EopPolynomial, b: &EopPolynomial) -> f64 {
    q.integrate(|z| {
        let g = fam.g.eval_f64(z);
        a.y.eval_f64(z) * b.y.eval_f64(z) / (g * g)
    })
}

/// `∫₀^∞ y₁ y₂ z^α e^{−z} g^{−2} dz` with `nodes` and `2·nodes` points; the two
/// must agree to [`QUADRATURE_TOL`] relative to `√(‖y₁‖²‖y₂‖²)`.
pub fn orthogonality_integral(
    fam: &EopFamily,
    y1: &EopPolynomial,
    y2: &EopPolynomial,
    nodes: usize,
) -> Result<Integral> {
    let alpha = rational_to_f64(&fam.alpha);
    let q = GaussLaguerre::new(nodes, alpha)?;
    let q2 = GaussLaguerre::new(2 * nodes, alpha)?;
    let value = weighted(&q, fam, y1, y2);
    let doubled = weighted(&q2, fam, y1, y2);
    let scale = (weighted(&q2, fam, y1, y1) * weighted(&q2, fam, y2, y2)).sqrt();
    if (value - doubled).abs() > QUADRATURE_TOL * scale {
        return Err(Error::QuadratureNonConvergence {
            nodes,
            value,
            doubled,
        });
    }
    Ok(Integral {
        value,
        doubled,
        nodes,
    })
}

/// Gram matrix of `ys` under the family weight, each entry certified as in
/// [`orthogonality_integral`] with a shared pair of rules.
pub fn gram_matrix(fam: &EopFamily, ys: &[EopPolynomial], nodes: usize) -> Result<Vec<Vec<f64>>> {
    let alpha = rational_to_f64(&fam.alpha);
    let q = GaussLaguerre::new(nodes, alpha)?;
    let q2 = GaussLaguerre::new(2 * nodes, alpha)?;
    let norms: Vec<f64> = ys.iter().map(|y| weighted(&q2, fam, y, y)).collect();
    let mut gram = vec![vec![0.0; ys.len()]; ys.len()];
    for i in 0..ys.len() {
        for j in i..ys.len() {
            let value = weighted(&q, fam, &ys[i], &ys[j]);
            let doubled = weighted(&q2, fam, &ys[i], &ys[j]);
            if (value - doubled).abs() > QUADRATURE_TOL * (norms[i] * norms[j]).sqrt() {
                return Err(Error::QuadratureNonConvergence {
                    nodes,
                    value,
                    doubled,
                });
            }
            gram[i][j] = doubled;
            gram[j][i] = doubled;
        }
    }
    Ok(gram)
}

/// Largest `|G_ij| / √(G_ii G_jj)` over `i ≠ j`.
pub fn max_offdiagonal_ratio(gram: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..gram.len() {
        for j in 0..gram.len() {
            if i != j {
                worst = worst.max(gram[i][j].abs() / (gram[i][i] * gram[j][j]).sqrt());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eop::{eop_sequence, eop_solve};
    use crate::exactmath::{laguerre, rat};
    use crate::susy::{build_extension, Case, Convention, ExtensionSpec};
    use num_traits::ToPrimitive;

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig { n_points: 50, ..Default::default() };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = SolverConfig { x_max: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SolverConfig { n_eigen: 0, ..Default::default() };
        assert!(bad.validate().is_err());
        assert!((SolverConfig::for_omega(&rat(4, 1)).x_max - 6.0).abs() < 1e-15);
    }

    #[test]
    fn oscillator_sample() {
        let v = Potential::oscillator(1, rat(1, 1));
        assert!((v.eval(1.0).unwrap() - 2.25).abs() < 1e-15);
    }

    #[test]
    fn cubic_rational_part_at_one() {
        let pot = build_extension(&ExtensionSpec::new(Case::III, 1, 1, 1, rat(1, 1))).unwrap();
        let v = pot.v2(Convention::ConstantDropped);
        let rational = v.eval(1.0).unwrap() - 2.25;
        assert!((rational + 1.92).abs() < 1e-12);
    }

    #[test]
    fn oscillator_spectrum() {
        let v = Potential::oscillator(1, rat(1, 1));
        let ev = eig_solve(&v, &SolverConfig::default()).unwrap();
        for (k, e) in ev.iter().enumerate() {
            let want = 2.5 + 2.0 * k as f64;
            assert!((e - want).abs() / want < 1e-6, "{e} vs {want}");
        }
    }

    #[test]
    fn extrapolation_beats_single_grid() {
        let v = Potential::oscillator(2, rat(1, 1));
        let single = SolverConfig { extrapolate: false, n_eigen: 1, ..Default::default() };
        let both = SolverConfig { n_eigen: 1, ..Default::default() };
        let e1 = eig_solve(&v, &single).unwrap()[0];
        let e2 = eig_solve(&v, &both).unwrap()[0];
        assert!((e2 - 3.5).abs() < (e1 - 3.5).abs() / 10.0);
    }

    #[test]
    fn coarse_grid_reports_non_convergence() {
        let v = Potential::oscillator(1, rat(1, 1));
        let cfg = SolverConfig { n_points: 100, x_max: 40.0, ..Default::default() };
        assert!(matches!(eig_solve(&v, &cfg), Err(Error::ConvergenceFailure { .. })));
    }

    #[test]
    fn pole_is_reported() {
        let v = Potential::oscillator(0, rat(1, 1)).with_rational(
            crate::exactmath::RatFunc::new(crate::exactmath::Poly::one(), crate::exactmath::Poly::from_i64s(&[-2, 1])).unwrap(),
            crate::exactmath::Poly::from_i64s(&[-2, 1]),
        );
        assert!(matches!(v.eval(2.0), Err(Error::PoleEncountered { .. })));
    }

    #[test]
    fn ground_state_wavefunction_is_gaussian() {
        let fam = EopFamily::classical(rat(5, 2));
        let y = eop_solve(&fam, 0).unwrap();
        for x in [0.3, 1.0, 2.2] {
            let psi = wavefunction(&fam, &y, 1.0, x).unwrap();
            let want = 0.5f64.powf(1.5) * x.powi(3) * (-x * x / 4.0).exp();
            assert!((psi - want).abs() < 1e-14);
        }
        assert!(wavefunction(&fam, &y, 1.0, 1e-9).unwrap().abs() < 1e-20);
    }

    #[test]
    fn cubic_ground_state_is_nodeless() {
        let pot = build_extension(&ExtensionSpec::new(Case::III, 1, 1, 1, rat(1, 1))).unwrap();
        let fam = EopFamily::from_extension(&pot);
        let y = eop_solve(&fam, fam.mu).unwrap();
        let vals: Vec<f64> = (1..4000)
            .map(|i| wavefunction(&fam, &y, 1.0, i as f64 * 0.003).unwrap())
            .collect();
        assert!(vals.iter().all(|v| *v > 0.0) || vals.iter().all(|v| *v < 0.0));
    }

    #[test]
    fn classical_norms() {
        // ‖L_n^{(α)}‖² = Γ(n+α+1)/n!
        for alpha in [rat(1, 2), rat(3, 2), rat(7, 2)] {
            let a = alpha.to_f64().unwrap();
            let fam = EopFamily::classical(alpha.clone());
            for n in 0..7 {
                let y = EopPolynomial { n, nu: n, y: laguerre(n, &alpha) };
                let got = orthogonality_integral(&fam, &y, &y, 40).unwrap().doubled;
                let want = statrs::function::gamma::gamma(n as f64 + a + 1.0)
                    / (1..=n).map(|k| k as f64).product::<f64>();
                assert!((got / want - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cubic_family_is_orthogonal() {
        let pot = build_extension(&ExtensionSpec::new(Case::III, 1, 1, 1, rat(1, 1))).unwrap();
        let fam = EopFamily::from_extension(&pot);
        let ys = eop_sequence(&fam, 5).unwrap();
        let gram = gram_matrix(&fam, &ys, 200).unwrap();
        assert!(max_offdiagonal_ratio(&gram) < 1e-8);
        assert!(gram.iter().enumerate().all(|(i, r)| r[i] > 0.0));
    }

    #[test]
    fn sign_change_counting() {
        assert_eq!(sign_changes(&[1.0, 2.0, -1.0, -2.0, 1e-20, 3.0], 1e-10), 2);
        assert_eq!(sign_changes(&[0.0, 1.0, 1e-30, -1e-30, 1.0], 1e-10), 0);
    }
}
