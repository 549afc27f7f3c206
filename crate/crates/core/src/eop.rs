//! Exceptional Laguerre-type polynomials as exact polynomial eigenfunctions of
//! the deformed Laguerre operator
//!
//! ```text
//! z y″ + (α + 1 − z − 2z ġ/g) y′ + [(z − α) ġ/g + z g̈/g] y = (μ − n) y
//! ```
//!
//! Everything is multiplied through by `g` so the operator maps polynomials to
//! polynomials; solutions are kernel vectors of an exact rational matrix.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{count_positive_roots, laguerre, nullspace, Poly, Rational};
use crate::report::CheckEntry;
use crate::susy::{raw_g, raw_gbar, Case, ExtendedPotential};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Which pair of seed types produced the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyLabel {
    #[serde(rename = "I,I")]
    TypeITypeI,
    #[serde(rename = "II,II")]
    TypeIITypeII,
    #[serde(rename = "I,II")]
    TypeITypeII,
}

impl From<Case> for FamilyLabel {
    fn from(c: Case) -> Self {
        match c {
            Case::I => FamilyLabel::TypeITypeI,
            Case::II => FamilyLabel::TypeIITypeII,
            Case::III => FamilyLabel::TypeITypeII,
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyLabel::TypeITypeI => "I,I",
            FamilyLabel::TypeIITypeII => "II,II",
            FamilyLabel::TypeITypeII => "I,II",
        })
    }
}

/// An exceptional family: orthogonal under `z^α e^{−z} g^{−2} dz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EopFamily {
    pub case: Case,
    pub alpha: Rational,
    pub m1: u32,
    pub m2: u32,
    /// Canonical denominator.
    pub g: Poly,
    pub mu: usize,
}

impl EopFamily {
    pub fn from_extension(pot: &ExtendedPotential) -> Self {
        EopFamily {
            case: pot.spec.case,
            alpha: pot.alpha.clone(),
            m1: pot.spec.m1,
            m2: pot.spec.m2,
            g: pot.g.clone(),
            mu: pot.mu,
        }
    }

    /// Family built directly from the polynomial algebra at a given `α`,
    /// without the angular-momentum constraints of [`crate::susy::ExtensionSpec`].
    /// The weight must still be positive.
    pub fn algebraic(case: Case, alpha: Rational, m1: u32, m2: u32) -> Result<Self> {
        let g = raw_g(case, &alpha, m1, m2);
        let mu = case.mu(m1, m2);
        match g.degree() {
            Some(d) if d as i64 == mu => {}
            _ => {
                return Err(Error::ConstraintViolation(format!(
                    "case {case} ({m1}, {m2}) has no degree-{mu} denominator"
                )))
            }
        }
        let roots = count_positive_roots(&g)?;
        if roots > 0 {
            return Err(Error::InadmissibleDenominator {
                g: g.to_string(),
                roots,
            });
        }
        Ok(EopFamily {
            case,
            alpha,
            m1,
            m2,
            g: g.canonical(),
            mu: mu as usize,
        })
    }

    /// `g = 1`: the classical Laguerre polynomials `L_n^{(α)}`.
    pub fn classical(alpha: Rational) -> Self {
        Self::algebraic(Case::I, alpha, 0, 1).expect("constant denominator")
    }

    pub fn label(&self) -> FamilyLabel {
        self.case.into()
    }

    /// Residual of the cleared eigen-equation for a candidate `y` of degree `n`.
    pub fn residual(&self, y: &Poly, n: usize) -> Poly {
        apply_cleared(&self.g, &self.alpha, self.mu, n, y)
    }
}

/// `g[z y″ + (α+1−z) y′] − 2zġ y′ + [(z−α)ġ + z g̈] y − (μ−n) g y`.
fn apply_cleared(g: &Poly, alpha: &Rational, mu: usize, n: usize, y: &Poly) -> Poly {
    let dg = g.derivative();
    let ddg = dg.derivative();
    let dy = y.derivative();
    let lag = &y.nth_derivative(2).shift_up(1)
        + &(&Poly::from_coeffs(vec![alpha + Rational::one(), -Rational::one()]) * &dy);
    let pot = &(&Poly::from_coeffs(vec![-alpha.clone(), Rational::one()]) * &dg) + &ddg.shift_up(1);
    let eig = int(mu as i64 - n as i64);
    &(&(&(g * &lag) - &(&dg * &dy).shift_up(1).scale(&int(2))) + &(&pot * y)) - &(g * y).scale(&eig)
}

fn operator_columns(fam: &EopFamily, n: usize) -> Vec<Vec<Rational>> {
    let rows = n + fam.mu + 1;
    let cols: Vec<Poly> = (0..=n)
        .map(|j| fam.residual(&Poly::monomial(Rational::one(), j), n))
        .collect();
    (0..rows)
        .map(|i| cols.iter().map(|c| c.coeff(i)).collect())
        .collect()
}

/// Dimension of the polynomial solution space of degree ≤ `n` at eigenvalue `μ − n`.
pub fn kernel_dimension(fam: &EopFamily, n: usize) -> usize {
    nullspace(operator_columns(fam, n), n + 1).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EopPolynomial {
    pub n: usize,
    pub nu: usize,
    /// Monic.
    pub y: Poly,
}

/// The unique monic degree-`n` polynomial solution, `n ≥ μ`.
pub fn eop_solve(fam: &EopFamily, n: usize) -> Result<EopPolynomial> {
    if n < fam.mu {
        return Err(Error::ConstraintViolation(format!(
            "degree {n} is below the family's lowest degree {}",
            fam.mu
        )));
    }
    let kernel = nullspace(operator_columns(fam, n), n + 1);
    match kernel.len() {
        0 => Err(Error::NoPolynomialSolution { n }),
        1 => {
            let y = Poly::from_coeffs(kernel.into_iter().next().unwrap());
            if y.degree() != Some(n) {
                return Err(Error::NoPolynomialSolution { n });
            }
            Ok(EopPolynomial {
                n,
                nu: n - fam.mu,
                y: y.monic(),
            })
        }
        dim => Err(Error::AmbiguousSolution { n, dim }),
    }
}

/// The first `count` members, `ν = 0..count`.
pub fn eop_sequence(fam: &EopFamily, count: usize) -> Result<Vec<EopPolynomial>> {
    (0..count).map(|nu| eop_solve(fam, fam.mu + nu)).collect()
}

/// `g` and `ḡ` at matching (raw) normalisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBar {
    pub g: Poly,
    pub gbar: Poly,
}

/// `ḡ = W(ḟ₁, ḟ₂)` for cases I and II, after checking
/// `z g̈ = 2zḡ ∓ (α+z)ġ ± μg` exactly.
pub fn gbar_build(fam: &EopFamily) -> Result<GBar> {
    let gbar = raw_gbar(fam.case, &fam.alpha, fam.m1, fam.m2).ok_or_else(|| {
        Error::ConstraintViolation("the auxiliary Wronskian exists only for cases i and ii".into())
    })?;
    let g = raw_g(fam.case, &fam.alpha, fam.m1, fam.m2);
    let dg = g.derivative();
    let lin = Poly::from_coeffs(vec![fam.alpha.clone(), Rational::one()]);
    let mu = int(fam.mu as i64);
    let rhs_tail = &(&lin * &dg) - &g.scale(&mu);
    let rhs = match fam.case {
        Case::I => &gbar.shift_up(1).scale(&int(2)) - &rhs_tail,
        _ => &gbar.shift_up(1).scale(&int(2)) + &rhs_tail,
    };
    let residual = &g.nth_derivative(2).shift_up(1) - &rhs;
    if !residual.is_zero() {
        return Err(Error::identity(
            format!("gbar[case={},alpha={},m1={},m2={}]", fam.case, fam.alpha, fam.m1, fam.m2),
            residual,
        ));
    }
    Ok(GBar { g, gbar })
}

/// The alternative eigenvalue forms, cleared of `g`:
///
/// * case I:  `[zD² + (α+1−z−2zġ/g)D − 2αġ/g + 2zḡ/g] y = −n y`
/// * case II: `[zD² + (α+1−z−2zġ/g)D + 2z(ġ+ḡ)/g] y = (2μ−n) y`
pub fn alt_ode_check(fam: &EopFamily, y: &EopPolynomial) -> Result<CheckEntry> {
    let GBar { g, gbar } = gbar_build(fam)?;
    let id = format!(
        "alt-ode[case={},alpha={},m1={},m2={},n={}]",
        fam.case, fam.alpha, fam.m1, fam.m2, y.n
    );
    let (a, n, mu) = (&fam.alpha, int(y.n as i64), int(fam.mu as i64));
    let dg = g.derivative();
    let yy = &y.y;
    let dy = yy.derivative();
    let lag = &yy.nth_derivative(2).shift_up(1)
        + &(&Poly::from_coeffs(vec![a + Rational::one(), -Rational::one()]) * &dy);
    let kinetic = &(&g * &lag) - &(&dg * &dy).shift_up(1).scale(&int(2));
    let residual = match fam.case {
        Case::I => {
            let pot = &gbar.shift_up(1).scale(&int(2)) - &dg.scale(&(a * int(2)));
            &(&kinetic + &(&pot * yy)) + &(&g * yy).scale(&n)
        }
        Case::II => {
            let pot = (&dg + &gbar).shift_up(1).scale(&int(2));
            &(&kinetic + &(&pot * yy)) - &(&g * yy).scale(&(mu * int(2) - n))
        }
        Case::III => unreachable!("rejected by gbar_build"),
    };
    if residual.is_zero() {
        Ok(CheckEntry::exact_pass(id))
    } else {
        Err(Error::identity(id, residual))
    }
}

/// Reduction identities tying the second-order denominators and families back
/// to classical and first-order ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    /// `(0, 1)` in cases I and II gives the classical Laguerre polynomials.
    A,
    /// `(0, m+1)`: `g ∝ L_m^{(α−1)}(−z)` (case I), `g ∝ L_m^{(−α−1)}(z)` (case II).
    B,
    /// `(1, 2)`: case I gives `g ∝ L_2^{(−α−1)}(z)`, case II gives `g ∝ L_2^{(α−1)}(−z)`.
    C,
    /// Case III `(m₁, 0)` gives `g ∝ L_{m₁+1}^{(α−1)}(−z)`; `(0, m₂)` gives `g ∝ L_{m₂+1}^{(−α−1)}(z)`.
    D,
    /// Case III `(1, 1)` and cases I/II `(1, 3)` share one cubic, and hence one family.
    E,
    /// That cubic is proportional to neither first-order cubic.
    Distinct,
}

impl Reduction {
    pub const ALL: [Reduction; 6] = [
        Reduction::A,
        Reduction::B,
        Reduction::C,
        Reduction::D,
        Reduction::E,
        Reduction::Distinct,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Reduction::A => "reduction-a",
            Reduction::B => "reduction-b",
            Reduction::C => "reduction-c",
            Reduction::D => "reduction-d",
            Reduction::E => "reduction-e",
            Reduction::Distinct => "distinct-cubic",
        }
    }
}

fn require_proportional(id: &str, what: &str, got: &Poly, want: &Poly) -> Result<()> {
    if got.is_proportional(want) {
        Ok(())
    } else {
        Err(Error::identity(
            format!("{id}: {what}"),
            format!("{} vs {}", got.monic(), want.monic()),
        ))
    }
}

fn same_family(id: &str, a: &EopFamily, b: &EopFamily, extra: usize) -> Result<()> {
    for n in a.mu..=a.mu + extra {
        let ya = eop_solve(a, n)?;
        let yb = eop_solve(b, n)?;
        if ya.y != yb.y {
            return Err(Error::identity(format!("{id}: n={n}"), &ya.y - &yb.y));
        }
    }
    Ok(())
}

/// Checks one reduction identity at the given `α`, exactly and up to scale.
pub fn reduction_check(identity: Reduction, alpha: &Rational) -> Result<CheckEntry> {
    let id = format!("{}[alpha={alpha}]", identity.id());
    let one = Rational::one();
    let l_neg = |m: usize, a: &Rational| laguerre(m, a).compose_neg();
    match identity {
        Reduction::A => {
            let f1 = EopFamily::algebraic(Case::I, alpha.clone(), 0, 1)?;
            let f2 = EopFamily::algebraic(Case::II, alpha.clone(), 0, 1)?;
            for n in 0..=6 {
                let classical = laguerre(n, alpha).monic();
                for f in [&f1, &f2] {
                    let y = eop_solve(f, n)?;
                    if y.y != classical {
                        return Err(Error::identity(format!("{id}: n={n}"), &y.y - &classical));
                    }
                }
            }
        }
        Reduction::B => {
            for m in 1..=4u32 {
                let g = raw_g(Case::I, alpha, 0, m + 1);
                require_proportional(&id, &format!("case i (0,{})", m + 1), &g, &l_neg(m as usize, &(alpha - &one)))?;
                let g = raw_g(Case::II, alpha, 0, m + 1);
                require_proportional(&id, &format!("case ii (0,{})", m + 1), &g, &laguerre(m as usize, &(-alpha - &one)))?;
            }
        }
        Reduction::C => {
            let g = raw_g(Case::I, alpha, 1, 2);
            require_proportional(&id, "case i (1,2)", &g, &laguerre(2, &(-alpha - &one)))?;
            let g = raw_g(Case::II, alpha, 1, 2);
            require_proportional(&id, "case ii (1,2)", &g, &l_neg(2, &(alpha - &one)))?;
        }
        Reduction::D => {
            for m in 0..=3u32 {
                let g = raw_g(Case::III, alpha, m, 0);
                require_proportional(&id, &format!("case iii ({m},0)"), &g, &l_neg(m as usize + 1, &(alpha - &one)))?;
                let g = raw_g(Case::III, alpha, 0, m);
                require_proportional(&id, &format!("case iii (0,{m})"), &g, &laguerre(m as usize + 1, &(-alpha - &one)))?;
            }
        }
        Reduction::E => {
            let g3 = raw_g(Case::III, alpha, 1, 1);
            require_proportional(&id, "case i (1,3)", &raw_g(Case::I, alpha, 1, 3), &g3)?;
            require_proportional(&id, "case ii (1,3)", &raw_g(Case::II, alpha, 1, 3), &g3)?;
            let f3 = EopFamily::algebraic(Case::III, alpha.clone(), 1, 1)?;
            let f1 = EopFamily::algebraic(Case::I, alpha.clone(), 1, 3)?;
            let f2 = EopFamily::algebraic(Case::II, alpha.clone(), 1, 3)?;
            same_family(&id, &f3, &f1, 3)?;
            same_family(&id, &f3, &f2, 3)?;
        }
        Reduction::Distinct => {
            let g3 = raw_g(Case::III, alpha, 1, 1);
            for (what, other) in [
                ("type I cubic", l_neg(3, &(alpha - &one))),
                ("type II cubic", laguerre(3, &(-alpha - &one))),
            ] {
                if g3.is_proportional(&other) {
                    return Err(Error::identity(format!("{id}: {what}"), "proportional"));
                }
            }
        }
    }
    Ok(CheckEntry::exact_pass(id))
}

/// Export record for one polynomial of a family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EopExport {
    pub family: FamilyLabel,
    #[serde(with = "crate::exactmath::rational_str")]
    pub alpha: Rational,
    pub m1: u32,
    pub m2: u32,
    pub n: usize,
    pub nu: usize,
    #[serde(with = "crate::exactmath::rational_str::vec")]
    pub coefficients: Vec<Rational>,
}

impl EopExport {
    pub fn new(fam: &EopFamily, y: &EopPolynomial) -> Self {
        EopExport {
            family: fam.label(),
            alpha: fam.alpha.clone(),
            m1: fam.m1,
            m2: fam.m2,
            n: y.n,
            nu: y.nu,
            coefficients: y.y.coeffs().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::susy::{build_extension, ExtensionSpec};

    fn alphas() -> [Rational; 4] {
        [rat(3, 2), rat(5, 2), rat(7, 2), rat(9, 2)]
    }

    /// `L_m^{(α)}(−z) L_{n−m}^{(α−1)}(z) + L_m^{(α−1)}(−z) L_{n−m−1}^{(α)}(z)`.
    fn first_order_type_i(alpha: &Rational, m: usize, n: usize) -> Poly {
        let one = Rational::one();
        let a = &laguerre(m, alpha).compose_neg() * &laguerre(n - m, &(alpha - &one));
        let b = if n > m {
            &laguerre(m, &(alpha - &one)).compose_neg() * &laguerre(n - m - 1, alpha)
        } else {
            Poly::zero()
        };
        &a + &b
    }

    #[test]
    fn classical_family_is_laguerre() {
        for a in alphas() {
            let fam = EopFamily::classical(a.clone());
            for n in 0..=8 {
                assert_eq!(eop_solve(&fam, n).unwrap().y, laguerre(n, &a).monic());
            }
        }
    }

    #[test]
    fn new_cubic_family_solutions() {
        let pot = build_extension(&ExtensionSpec::new(Case::III, 1, 1, 1, rat(1, 1))).unwrap();
        let fam = EopFamily::from_extension(&pot);
        assert_eq!(fam.label(), FamilyLabel::TypeITypeII);
        let y = eop_solve(&fam, 3).unwrap();
        assert_eq!(y.nu, 0);
        assert_eq!(y.y.degree(), Some(3));
        assert!(fam.residual(&y.y, 3).is_zero());
        assert!(matches!(eop_solve(&fam, 2), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn first_order_family_matches_closed_form() {
        for a in alphas() {
            for m in 1..=3u32 {
                let fam = EopFamily::algebraic(Case::I, a.clone(), 0, m + 1).unwrap();
                for n in m as usize..m as usize + 5 {
                    let y = eop_solve(&fam, n).unwrap();
                    assert_eq!(y.y, first_order_type_i(&a, m as usize, n).monic(), "a={a} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn gbar_identity_examples() {
        gbar_build(&EopFamily::algebraic(Case::I, rat(5, 2), 1, 3).unwrap()).unwrap();
        gbar_build(&EopFamily::algebraic(Case::II, rat(7, 2), 1, 2).unwrap()).unwrap();
        let trivial = gbar_build(&EopFamily::algebraic(Case::I, rat(5, 2), 0, 1).unwrap()).unwrap();
        assert!(trivial.gbar.is_zero());
        let f3 = EopFamily::algebraic(Case::III, rat(5, 2), 1, 1).unwrap();
        assert!(matches!(gbar_build(&f3), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn alt_ode_examples() {
        let f = EopFamily::algebraic(Case::I, rat(5, 2), 1, 3).unwrap();
        alt_ode_check(&f, &eop_solve(&f, 3).unwrap()).unwrap();
        let f = EopFamily::algebraic(Case::II, rat(9, 2), 0, 4).unwrap();
        for n in 3..6 {
            alt_ode_check(&f, &eop_solve(&f, n).unwrap()).unwrap();
        }
        let f = EopFamily::classical(rat(3, 2));
        alt_ode_check(&f, &eop_solve(&f, 4).unwrap()).unwrap();
    }

    #[test]
    fn alt_ode_rejects_wrong_polynomial() {
        let f = EopFamily::algebraic(Case::I, rat(5, 2), 1, 3).unwrap();
        let mut y = eop_solve(&f, 4).unwrap();
        y.y = &y.y + &Poly::one();
        assert!(matches!(alt_ode_check(&f, &y), Err(Error::IdentityViolation { .. })));
    }

    #[test]
    fn reductions_hold() {
        for a in alphas() {
            for r in Reduction::ALL {
                reduction_check(r, &a).unwrap();
            }
        }
    }

    #[test]
    fn exact_reduction_constants() {
        // beyond proportionality, the raw Wronskians carry definite factors
        let one = Rational::one();
        for a in alphas() {
            assert_eq!(raw_g(Case::I, &a, 0, 1), Poly::one());
            assert_eq!(raw_g(Case::II, &a, 0, 1), -Poly::one());
            for m in 1..4u32 {
                assert_eq!(raw_g(Case::I, &a, 0, m + 1), laguerre(m as usize, &(&a - &one)).compose_neg());
                assert_eq!(raw_g(Case::II, &a, 0, m + 1), -laguerre(m as usize, &(-&a - &one)));
            }
            assert_eq!(raw_g(Case::I, &a, 1, 2), laguerre(2, &(-&a - &one)));
            assert_eq!(raw_g(Case::II, &a, 1, 2), -laguerre(2, &(&a - &one)).compose_neg());
            for m in 0..4u32 {
                let k = int(m as i64 + 1);
                assert_eq!(
                    raw_g(Case::III, &a, m, 0),
                    laguerre(m as usize + 1, &(&a - &one)).compose_neg().scale(&-k.clone())
                );
                assert_eq!(raw_g(Case::III, &a, 0, m), laguerre(m as usize + 1, &(-&a - &one)).scale(&k));
            }
        }
    }

    #[test]
    fn kernel_below_mu_is_diagnostic_only() {
        let fam = EopFamily::algebraic(Case::III, rat(5, 2), 1, 1).unwrap();
        for n in 0..fam.mu {
            let _ = kernel_dimension(&fam, n);
        }
        assert_eq!(kernel_dimension(&fam, fam.mu), 1);
    }

    #[test]
    fn export_shape() {
        let fam = EopFamily::classical(rat(3, 2));
        let y = eop_solve(&fam, 1).unwrap();
        let s = serde_json::to_string(&EopExport::new(&fam, &y)).unwrap();
        assert_eq!(
            s,
            r#"{"family":"I,I","alpha":"3/2","m1":0,"m2":1,"n":1,"nu":1,"coefficients":["-5/2","1"]}"#
        );
    }
}
