//! Two-seed constructions of rationally extended radial oscillators.
//!
//! Seeds come in two types, built from Laguerre polynomials with argument `−z`
//! (type I) or `z` with negated parameter (type II). Pairing two seeds gives
//! one of three cases; each case yields a denominator polynomial `g` in `z`
//! whose positive-axis zeros decide whether the extended potential is regular.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{count_positive_roots, laguerre, rat, wronskian, Poly, RatFunc, Rational};
use crate::qrf::{p_from_seeds, ssusy_check, wronskian_qrf, Potential, Qrf};
use crate::report::CheckEntry;

/// `α = l + 1/2`.
pub fn alpha_of(l: u32) -> Rational {
    rat(2 * l as i64 + 1, 2)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeedKind {
    TypeI,
    TypeII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedSpec {
    pub kind: SeedKind,
    pub l: u32,
    pub m: u32,
    pub omega: Rational,
}

impl SeedSpec {
    pub fn alpha(&self) -> Rational {
        alpha_of(self.l)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.omega.is_positive() {
            return Err(Error::ConstraintViolation(format!(
                "omega must be positive, got {}",
                self.omega
            )));
        }
        if self.kind == SeedKind::TypeII && self.alpha() <= int(self.m as i64) {
            return Err(Error::ConstraintViolation(format!(
                "type II seed needs alpha > m (alpha = {}, m = {})",
                self.alpha(),
                self.m
            )));
        }
        Ok(())
    }

    /// Seed energy: `−ω(α+2m+1)` for type I, `−ω(α−2m−1)` for type II.
    pub fn energy(&self) -> Rational {
        let a = self.alpha();
        let m2 = int(2 * self.m as i64);
        match self.kind {
            SeedKind::TypeI => -&self.omega * (a + m2 + Rational::one()),
            SeedKind::TypeII => -&self.omega * (a - m2 - Rational::one()),
        }
    }

    /// Polynomial factor of the seed in `z`.
    pub fn laguerre_factor(&self) -> Poly {
        let a = self.alpha();
        match self.kind {
            SeedKind::TypeI => laguerre(self.m as usize, &a).compose_neg(),
            SeedKind::TypeII => laguerre(self.m as usize, &-a),
        }
    }
}

/// Seed function (up to a constant) and its energy.
///
/// Type I: `x^{l+1} e^{+ωx²/4} L_m^{(α)}(−z)`; type II: `x^{−l} e^{−ωx²/4} L_m^{(−α)}(z)`.
pub fn make_seed(s: &SeedSpec) -> Result<(Qrf, Rational)> {
    s.validate()?;
    let l = s.l as i64;
    let (xpow, gauss) = match s.kind {
        SeedKind::TypeI => (int(l + 1), rat(1, 4)),
        SeedKind::TypeII => (int(-l), rat(-1, 4)),
    };
    let phi = Qrf::new(
        xpow,
        gauss,
        RatFunc::from_poly(s.laguerre_factor()),
        s.omega.clone(),
    );
    Ok((phi, s.energy()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// Two type I seeds on `V_{l−2}`.
    I,
    /// Two type II seeds on `V_{l+2}`.
    II,
    /// One seed of each type on `V_l`.
    III,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::I, Case::II, Case::III];

    pub fn as_str(&self) -> &'static str {
        match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
        }
    }

    /// Additive constant `C` in units of `ω`: −2, +2, 0.
    pub fn shift_units(&self) -> i64 {
        match self {
            Case::I => -2,
            Case::II => 2,
            Case::III => 0,
        }
    }

    /// Degree of `g` for seed indices `(m₁, m₂)`.
    pub fn mu(&self, m1: u32, m2: u32) -> i64 {
        match self {
            Case::I | Case::II => m1 as i64 + m2 as i64 - 1,
            Case::III => m1 as i64 + m2 as i64 + 1,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Case::I),
            "ii" | "2" => Ok(Case::II),
            "iii" | "3" => Ok(Case::III),
            other => Err(Error::Parse(format!("unknown case `{other}` (expected i, ii or iii)"))),
        }
    }
}

/// Raw (unnormalised) denominator polynomial for a case at a given `α`.
///
/// Pure polynomial algebra in `α`: no admissibility or angular-momentum
/// constraint is applied here.
pub fn raw_g(case: Case, alpha: &Rational, m1: u32, m2: u32) -> Poly {
    let (m1, m2) = (m1 as usize, m2 as usize);
    match case {
        Case::I => {
            let a = alpha - int(2);
            wronskian(&[
                laguerre(m1, &a).compose_neg(),
                laguerre(m2, &a).compose_neg(),
            ])
        }
        Case::II => {
            let a = -alpha - int(2);
            wronskian(&[laguerre(m1, &a), laguerre(m2, &a)])
        }
        Case::III => {
            let f1 = laguerre(m1, alpha).compose_neg();
            let f2 = laguerre(m2, &-alpha);
            let zw = wronskian(&[f1.clone(), f2.clone()]).shift_up(1);
            let lin = Poly::from_coeffs(vec![alpha.clone(), Rational::one()]);
            &zw - &(&lin * &(&f1 * &f2))
        }
    }
}

/// The auxiliary Wronskian of first derivatives used by the alternative
/// eigenvalue forms of cases I and II. `None` for case III.
pub fn raw_gbar(case: Case, alpha: &Rational, m1: u32, m2: u32) -> Option<Poly> {
    let (m1, m2) = (m1 as usize, m2 as usize);
    let (f1, f2) = match case {
        Case::I => {
            let a = alpha - int(2);
            (laguerre(m1, &a).compose_neg(), laguerre(m2, &a).compose_neg())
        }
        Case::II => {
            let a = -alpha - int(2);
            (laguerre(m1, &a), laguerre(m2, &a))
        }
        Case::III => return None,
    };
    Some(wronskian(&[f1.derivative(), f2.derivative()]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub case: Case,
    pub l: u32,
    pub m1: u32,
    pub m2: u32,
    pub omega: Rational,
}

impl ExtensionSpec {
    pub fn new(case: Case, l: u32, m1: u32, m2: u32, omega: Rational) -> Self {
        ExtensionSpec {
            case,
            l,
            m1,
            m2,
            omega,
        }
    }

    pub fn alpha(&self) -> Rational {
        alpha_of(self.l)
    }

    pub fn mu(&self) -> i64 {
        self.case.mu(self.m1, self.m2)
    }

    /// Angular index of the starting oscillator, if non-negative.
    pub fn l_prime(&self) -> Option<u32> {
        match self.case {
            Case::I => self.l.checked_sub(2),
            Case::II => Some(self.l + 2),
            Case::III => Some(self.l),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ConstraintViolation(msg));
        if !self.omega.is_positive() {
            return fail(format!("omega must be positive, got {}", self.omega));
        }
        let a = self.alpha();
        let (m1, m2) = (int(self.m1 as i64), int(self.m2 as i64));
        match self.case {
            Case::I => {
                if self.l < 2 {
                    return fail(format!("case i starts from V_(l-2) and needs l >= 2, got l = {}", self.l));
                }
                if self.m1 >= self.m2 {
                    return fail(format!("case i needs 0 <= m1 < m2, got ({}, {})", self.m1, self.m2));
                }
            }
            Case::II => {
                if self.m1 >= self.m2 {
                    return fail(format!("case ii needs 0 <= m1 < m2, got ({}, {})", self.m1, self.m2));
                }
                if m2 >= &a + int(2) {
                    return fail(format!(
                        "case ii needs m2 < alpha + 2 = {}, got m2 = {}",
                        &a + int(2),
                        self.m2
                    ));
                }
            }
            Case::III => {
                if m2 >= a {
                    return fail(format!("case iii needs m2 < alpha = {a}, got m2 = {}", self.m2));
                }
                let _ = m1;
            }
        }
        Ok(())
    }

    /// The two seeds `(φ₁, φ₂)` in construction order.
    pub fn seed_specs(&self) -> Result<(SeedSpec, SeedSpec)> {
        let lp = self
            .l_prime()
            .ok_or_else(|| Error::ConstraintViolation("starting angular index is negative".into()))?;
        let (k1, k2) = match self.case {
            Case::I => (SeedKind::TypeI, SeedKind::TypeI),
            Case::II => (SeedKind::TypeII, SeedKind::TypeII),
            Case::III => (SeedKind::TypeI, SeedKind::TypeII),
        };
        let seed = |kind, m| SeedSpec {
            kind,
            l: lp,
            m,
            omega: self.omega.clone(),
        };
        Ok((seed(k1, self.m1), seed(k2, self.m2)))
    }
}

/// Canonical `g` (integer coefficients, unit content, positive leading
/// coefficient) and its degree `μ`.
pub fn build_g(spec: &ExtensionSpec) -> Result<(Poly, usize)> {
    spec.validate()?;
    let g = raw_g(spec.case, &spec.alpha(), spec.m1, spec.m2);
    let mu = spec.mu();
    match g.degree() {
        Some(d) if d as i64 == mu => Ok((g.canonical(), d)),
        _ => Err(Error::identity(
            format!("degree of g for {spec:?}"),
            format!("expected {mu}, got {g}"),
        )),
    }
}

/// No zero of `g` on `(0, ∞)`.
pub fn check_admissible(g: &Poly) -> Result<bool> {
    Ok(count_positive_roots(g)? == 0)
}

/// `−ω{2ġ/g + 4z[g̈/g − (ġ/g)²]}` as a rational function of `z`.
pub fn rational_part_from_g(g: &Poly, omega: &Rational) -> RatFunc {
    let dg = g.derivative();
    let ddg = dg.derivative();
    let inner = &(&ddg * g) - &(&dg * &dg);
    let num = &(&dg * g).scale(&int(2)) + &inner.shift_up(1).scale(&int(4));
    RatFunc::new(num.scale(&-omega), g * g).expect("g is nonzero")
}

/// [`rational_part_from_g`] with `z = ωx²/2` substituted: a rational function of `x`.
pub fn rational_part_x_from_g(g: &Poly, omega: &Rational) -> RatFunc {
    rational_part_from_g(g, omega).substitute_scaled_square(&(omega / int(2)))
}

/// Which additive constant the extended potential carries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `V⁽²⁾ = V_l + V_rat − (E₁+E₂)/2 + C`, partner of `V⁽¹⁾ = V_{l′} − (E₁+E₂)/2`.
    #[default]
    Partner,
    /// `V_l + V_rat`, same spectrum as the bare oscillator `V_l`.
    ConstantDropped,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partner" => Ok(Convention::Partner),
            "constant-dropped" | "dropped" => Ok(Convention::ConstantDropped),
            other => Err(Error::Parse(format!(
                "unknown convention `{other}` (expected partner or constant-dropped)"
            ))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Partner => "partner",
            Convention::ConstantDropped => "constant-dropped",
        })
    }
}

/// `ω(2ν + α + 1)`: bound states of the bare oscillator `V_l`.
pub fn oscillator_energy(l: u32, omega: &Rational, nu: u32) -> Rational {
    omega * (int(2 * nu as i64) + alpha_of(l) + Rational::one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedPotential {
    pub spec: ExtensionSpec,
    pub g: Poly,
    pub mu: usize,
    /// Additive constant `C`: −2ω, 2ω or 0.
    pub c_shift: Rational,
    pub e1: Rational,
    pub e2: Rational,
    pub alpha: Rational,
}

pub fn build_extension(spec: &ExtensionSpec) -> Result<ExtendedPotential> {
    let (g, mu) = build_g(spec)?;
    extension_from_g(spec, g, mu)
}

fn extension_from_g(spec: &ExtensionSpec, g: Poly, mu: usize) -> Result<ExtendedPotential> {
    let roots = count_positive_roots(&g)?;
    if roots > 0 {
        return Err(Error::InadmissibleDenominator {
            g: g.to_string(),
            roots,
        });
    }
    let (s1, s2) = spec.seed_specs()?;
    s1.validate()?;
    s2.validate()?;
    Ok(ExtendedPotential {
        spec: spec.clone(),
        c_shift: &spec.omega * int(spec.case.shift_units()),
        e1: s1.energy(),
        e2: s2.energy(),
        alpha: spec.alpha(),
        g,
        mu,
    })
}

impl ExtendedPotential {
    pub fn omega(&self) -> &Rational {
        &self.spec.omega
    }

    fn half_energy_sum(&self) -> Rational {
        (&self.e1 + &self.e2) / int(2)
    }

    /// Rational part `V_rat(z)`.
    pub fn rational_part_z(&self) -> RatFunc {
        rational_part_from_g(&self.g, self.omega())
    }

    /// Rational part as a function of `x`.
    pub fn rational_part_x(&self) -> RatFunc {
        rational_part_x_from_g(&self.g, self.omega())
    }

    /// Starting potential `V⁽¹⁾ = V_{l′} − (E₁+E₂)/2`.
    pub fn v1(&self) -> Potential {
        let lp = self.spec.l_prime().expect("validated") as i64;
        Potential::oscillator(lp, self.omega().clone()).shifted(&-self.half_energy_sum())
    }

    /// Extended potential under the given convention.
    pub fn v2(&self, convention: Convention) -> Potential {
        let base = Potential::oscillator(self.spec.l as i64, self.omega().clone())
            .with_rational(self.rational_part_z(), self.g.clone());
        match convention {
            Convention::Partner => base.shifted(&(&self.c_shift - self.half_energy_sum())),
            Convention::ConstantDropped => base,
        }
    }

    /// Bound-state energy of level `ν`.
    pub fn spectrum_energy(&self, nu: u32, convention: Convention) -> Rational {
        let w = self.omega();
        let (l, m1, m2) = (self.spec.l as i64, self.spec.m1 as i64, self.spec.m2 as i64);
        let nu = nu as i64;
        match convention {
            Convention::ConstantDropped => oscillator_energy(self.spec.l, w, nu as u32),
            Convention::Partner => match self.spec.case {
                Case::I => w * int(2 * nu + 2 * l + m1 + m2 - 1),
                Case::II => w * int(2 * nu + 2 * l - m1 - m2 + 5),
                Case::III => w * int(2 * nu + 2 * l + m1 - m2 + 2),
            },
        }
    }

    pub fn seeds(&self) -> Result<((Qrf, Rational), (Qrf, Rational))> {
        let (s1, s2) = self.spec.seed_specs()?;
        Ok((make_seed(&s1)?, make_seed(&s2)?))
    }

    /// `p(x)` from the seed Wronskian (both forms cross-checked).
    pub fn p(&self) -> Result<Qrf> {
        let ((phi1, e1), (phi2, e2)) = self.seeds()?;
        p_from_seeds(&phi1, &phi2, &e1, &e2)
    }

    /// Rebuilds both potentials from `p` and `c = E₁ − E₂` and compares them
    /// exactly with [`Self::v1`] and the partner-convention [`Self::v2`].
    pub fn ssusy_check(&self) -> Result<CheckEntry> {
        let id = format!("ssusy[{}]", self.label());
        ssusy_check(
            &self.p()?,
            &(&self.e1 - &self.e2),
            &self.v1(),
            &self.v2(Convention::Partner),
            &id,
        )
    }

    /// The seed Wronskian in `x` has the expected prefactor times a constant multiple of `g`.
    pub fn seed_wronskian_check(&self) -> Result<CheckEntry> {
        let id = format!("seed-wronskian[{}]", self.label());
        let ((phi1, _), (phi2, _)) = self.seeds()?;
        let w = wronskian_qrf(&phi1, &phi2)?;
        let l = self.spec.l as i64;
        let (xpow, gauss) = match self.spec.case {
            Case::I => (int(2 * l - 1), rat(1, 2)),
            Case::II => (int(-2 * l - 3), rat(-1, 2)),
            Case::III => (Rational::zero(), Rational::zero()),
        };
        if w.gauss() != &gauss {
            return Err(Error::identity(&id, format!("gaussian factor {}", w.gauss())));
        }
        let r = w.rat_at_xpow(&xpow)?;
        if !r.den().is_constant() || !r.num().is_proportional(&self.g) {
            return Err(Error::identity(&id, r));
        }
        Ok(CheckEntry::exact_pass(id))
    }

    pub fn label(&self) -> String {
        let s = &self.spec;
        format!("case={},l={},m1={},m2={},omega={}", s.case, s.l, s.m1, s.m2, s.omega)
    }
}

/// Denominator from three seeds of one type (the pure third-order cases):
/// type I on `V_{l−3}` gives `W(L^{(α−3)}_{mᵢ}(−z))`, type II on `V_{l+3}` gives
/// `W(L^{(−α−3)}_{mᵢ}(z))`. Degree `m₁+m₂+m₃−3`.
pub fn pure_three_seed_g(kind: SeedKind, alpha: &Rational, ms: [u32; 3]) -> Poly {
    let fs: Vec<Poly> = ms
        .iter()
        .map(|&m| match kind {
            SeedKind::TypeI => laguerre(m as usize, &(alpha - int(3))).compose_neg(),
            SeedKind::TypeII => laguerre(m as usize, &(-alpha - int(3))),
        })
        .collect();
    wronskian(&fs)
}

/// The two three-seed collapses for `(m₁, m₂, m₃) = (1, 2, 3)`:
/// `W(L^{(α−3)}_{1,2,3}(−z)) = −L₃^{(−α−1)}(z)` and
/// `W(L^{(−α−3)}_{1,2,3}(z)) = L₃^{(α−1)}(−z)`, checked as exact equalities.
pub fn wronskian3_identities(alpha: &Rational) -> Result<CheckEntry> {
    let id = format!("k3[alpha={alpha}]");
    let ms = [1, 2, 3];
    let type_i = pure_three_seed_g(SeedKind::TypeI, alpha, ms);
    let want_i = -laguerre(3, &(-alpha - Rational::one()));
    let type_ii = pure_three_seed_g(SeedKind::TypeII, alpha, ms);
    let want_ii = laguerre(3, &(alpha - Rational::one())).compose_neg();
    let r1 = &type_i - &want_i;
    if !r1.is_zero() {
        return Err(Error::identity(format!("{id}: type I triple"), r1));
    }
    let r2 = &type_ii - &want_ii;
    if !r2.is_zero() {
        return Err(Error::identity(format!("{id}: type II triple"), r2));
    }
    Ok(CheckEntry::exact_pass(id))
}

/// One candidate denominator found while enumerating constructions of a given degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub label: String,
    pub g: Poly,
    pub admissible: bool,
    /// Whether the seed constraints allow the construction for this `α`.
    pub realizable: bool,
}

/// Every two-seed (cases I–III) and pure three-seed (`m₁ > 0`) construction
/// whose denominator has degree `mu`, at the given `α`.
pub fn enumerate_candidates(alpha: &Rational, mu: u32) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    let mu_i = mu as i64;
    let push = |out: &mut Vec<Candidate>, label: String, g: Poly, realizable: bool| -> Result<()> {
        if g.degree() != Some(mu as usize) {
            return Ok(());
        }
        let admissible = check_admissible(&g)?;
        out.push(Candidate {
            label,
            g: g.canonical(),
            admissible,
            realizable,
        });
        Ok(())
    };
    for case in Case::ALL {
        for m1 in 0..=mu + 1 {
            for m2 in 0..=mu + 1 {
                if case.mu(m1, m2) != mu_i || (case != Case::III && m1 >= m2) {
                    continue;
                }
                let (a, mm1, mm2) = (alpha.clone(), int(m1 as i64), int(m2 as i64));
                let realizable = match case {
                    Case::I => a >= rat(5, 2),
                    Case::II => mm2 < &a + int(2),
                    Case::III => mm2 < a,
                };
                let _ = mm1;
                let g = raw_g(case, alpha, m1, m2);
                push(&mut out, format!("case {case} (m1={m1}, m2={m2})"), g, realizable)?;
            }
        }
    }
    for m1 in 1..=mu + 3 {
        for m2 in m1 + 1..=mu + 3 {
            for m3 in m2 + 1..=mu + 3 {
                if (m1 + m2 + m3) as i64 - 3 != mu_i {
                    continue;
                }
                let ms = [m1, m2, m3];
                let g = pure_three_seed_g(SeedKind::TypeI, alpha, ms);
                push(&mut out, format!("three type I seeds {ms:?}"), g, alpha >= &rat(7, 2))?;
                let g = pure_three_seed_g(SeedKind::TypeII, alpha, ms);
                push(&mut out, format!("three type II seeds {ms:?}"), g, int(m3 as i64) < alpha + int(3))?;
            }
        }
    }
    Ok(out)
}

/// Groups candidates into classes of proportional denominators (hence identical potentials).
pub fn distinct_classes(cands: &[Candidate]) -> Vec<Vec<&Candidate>> {
    let mut classes: Vec<Vec<&Candidate>> = Vec::new();
    for c in cands {
        match classes.iter_mut().find(|cl| cl[0].g == c.g) {
            Some(cl) => cl.push(c),
            None => classes.push(vec![c]),
        }
    }
    classes
}
