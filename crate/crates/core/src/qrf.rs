//! Quasi-rational functions of the radial coordinate.
//!
//! A [`Qrf`] is `x^p · exp(q·ω·x²) · R(z)` with `z = ω·x²/2` and `R` an exact
//! rational function. The class is closed under products, quotients, `d/dx`,
//! and sums of terms that share the Gaussian factor and whose powers of `x`
//! differ by an even integer. Seeds, superpotentials and the second-order
//! intertwining data `p(x)`, `q(x)` all live here, so every relation between
//! them can be checked with zero tolerance.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat, rational_to_f64, Poly, RatFunc, Rational};
use crate::report::CheckEntry;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qrf {
    xpow: Rational,
    gauss: Rational,
    rat: RatFunc,
    omega: Rational,
}

impl Qrf {
    pub fn new(xpow: Rational, gauss: Rational, rat: RatFunc, omega: Rational) -> Self {
        assert!(omega.is_positive(), "omega must be positive");
        if rat.is_zero() {
            return Self::zero(omega);
        }
        Qrf {
            xpow,
            gauss,
            rat,
            omega,
        }
    }

    pub fn zero(omega: Rational) -> Self {
        Qrf {
            xpow: Rational::zero(),
            gauss: Rational::zero(),
            rat: RatFunc::zero(),
            omega,
        }
    }

    /// A rational function of `z` alone.
    pub fn from_z(rat: RatFunc, omega: Rational) -> Self {
        Self::new(Rational::zero(), Rational::zero(), rat, omega)
    }

    pub fn constant(c: Rational, omega: Rational) -> Self {
        Self::from_z(RatFunc::constant(c), omega)
    }

    pub fn xpow(&self) -> &Rational {
        &self.xpow
    }

    pub fn gauss(&self) -> &Rational {
        &self.gauss
    }

    pub fn rat(&self) -> &RatFunc {
        &self.rat
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero()
    }

    /// `d/dx`: `(p, q, R) ↦ (p − 1, q, pR + 4qzR + 2zṘ)`.
    pub fn differentiate(&self) -> Qrf {
        if self.is_zero() {
            return self.clone();
        }
        let z = RatFunc::from_poly(Poly::z());
        let coef = &RatFunc::constant(self.xpow.clone()) + &(&z * &RatFunc::constant(&self.gauss * rat(4, 1)));
        let rat = &(&coef * &self.rat) + &(&z * &self.rat.derivative()).scale(&rat(2, 1));
        Qrf::new(
            &self.xpow - Rational::one(),
            self.gauss.clone(),
            rat,
            self.omega.clone(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Qrf {
        Qrf::new(
            self.xpow.clone(),
            self.gauss.clone(),
            self.rat.scale(c),
            self.omega.clone(),
        )
    }

    fn same_omega(&self, other: &Qrf) -> Result<()> {
        if self.omega != other.omega {
            return Err(Error::Structural(format!(
                "frequencies differ ({} vs {})",
                self.omega, other.omega
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Qrf) -> Result<Qrf> {
        self.same_omega(other)?;
        Ok(Qrf::new(
            &self.xpow + &other.xpow,
            &self.gauss + &other.gauss,
            &self.rat * &other.rat,
            self.omega.clone(),
        ))
    }

    pub fn div(&self, other: &Qrf) -> Result<Qrf> {
        self.same_omega(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Qrf::new(
            &self.xpow - &other.xpow,
            &self.gauss - &other.gauss,
            self.rat.checked_div(&other.rat)?,
            self.omega.clone(),
        ))
    }

    pub fn square(&self) -> Qrf {
        self.mul(self).expect("same frequency")
    }

    /// The rational part re-expressed against `x^target`, absorbing the even
    /// power difference via `x² = 2z/ω`.
    pub fn rat_at_xpow(&self, target: &Rational) -> Result<RatFunc> {
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let diff = &self.xpow - target;
        if !diff.is_integer() || diff.numer().is_odd() {
            return Err(Error::Structural(format!(
                "powers x^{} and x^{} do not differ by an even integer",
                self.xpow, target
            )));
        }
        let k = (diff.numer() / BigInt::from(2))
            .to_i64()
            .ok_or_else(|| Error::Structural("power difference too large".into()))?;
        let factor = RatFunc::monomial(
            (rat(2, 1) / &self.omega).pow(k as i32),
            k,
        );
        Ok(&self.rat * &factor)
    }

    pub fn add(&self, other: &Qrf) -> Result<Qrf> {
        self.same_omega(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.gauss != other.gauss {
            return Err(Error::Structural(format!(
                "Gaussian factors differ ({} vs {})",
                self.gauss, other.gauss
            )));
        }
        // Keep the smaller power so the absorbed factor is polynomial.
        let (lo, hi) = if self.xpow <= other.xpow {
            (self, other)
        } else {
            (other, self)
        };
        let rat = &lo.rat + &hi.rat_at_xpow(&lo.xpow)?;
        Ok(Qrf::new(
            lo.xpow.clone(),
            lo.gauss.clone(),
            rat,
            self.omega.clone(),
        ))
    }

    pub fn sub(&self, other: &Qrf) -> Result<Qrf> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Exact equality as functions of `x`.
    pub fn equals(&self, other: &Qrf) -> bool {
        self.sub(other).is_ok_and(|d| d.is_zero())
    }

    /// The function as a rational function of `z`; requires no Gaussian factor
    /// and an even integer power of `x`.
    pub fn as_z_ratfunc(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        if !self.gauss.is_zero() {
            return Err(Error::Structural(format!(
                "Gaussian factor e^({} ω x²) is not rational in z",
                self.gauss
            )));
        }
        self.rat_at_xpow(&Rational::zero())
    }

    pub fn z_of(&self, x: f64) -> f64 {
        0.5 * rational_to_f64(&self.omega) * x * x
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let w = rational_to_f64(&self.omega);
        x.powf(rational_to_f64(&self.xpow))
            * (rational_to_f64(&self.gauss) * w * x * x).exp()
            * self.rat.eval_f64(self.z_of(x))
    }
}

impl fmt::Display for Qrf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.xpow.is_zero() {
            write!(f, "x^({}) ", self.xpow)?;
        }
        if !self.gauss.is_zero() {
            write!(f, "exp({}·ω·x²) ", self.gauss)?;
        }
        write!(f, "[{}]", self.rat)
    }
}

/// Radial potential `¼ω²x² + l(l+1)/x² + V_rat(z) + constant`.
///
/// `poles` is a polynomial in `z` whose zeros contain every pole of `rat`;
/// floating-point evaluation refuses to get close to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    pub omega: Rational,
    pub l: i64,
    pub rat: RatFunc,
    pub constant: Rational,
    pub poles: Poly,
}

impl Potential {
    /// Bare radial oscillator `V_l`.
    pub fn oscillator(l: i64, omega: Rational) -> Self {
        Potential {
            omega,
            l,
            rat: RatFunc::zero(),
            constant: Rational::zero(),
            poles: Poly::one(),
        }
    }

    pub fn with_rational(mut self, rat: RatFunc, poles: Poly) -> Self {
        self.rat = rat;
        self.poles = poles;
        self
    }

    pub fn shifted(mut self, c: &Rational) -> Self {
        self.constant += c;
        self
    }

    /// Whole potential as a rational function of `z`
    /// (`¼ω²x² = ωz/2`, `1/x² = ω/(2z)`).
    pub fn as_ratfunc(&self) -> RatFunc {
        let half_w = &self.omega / rat(2, 1);
        let cent = Rational::from_integer(BigInt::from(self.l * (self.l + 1))) * &half_w;
        let mut v = &RatFunc::monomial(half_w, 1) + &self.rat;
        if !cent.is_zero() {
            v = &v + &RatFunc::monomial(cent, -1);
        }
        &v + &RatFunc::constant(self.constant.clone())
    }

    pub fn as_qrf(&self) -> Qrf {
        Qrf::from_z(self.as_ratfunc(), self.omega.clone())
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let w = rational_to_f64(&self.omega);
        let z = 0.5 * w * x * x;
        if !self.poles.is_constant() && self.poles.eval_f64(z).abs() < 1e-12 {
            return Err(Error::PoleEncountered { x });
        }
        let l = self.l as f64;
        Ok(0.25 * w * w * x * x
            + l * (l + 1.0) / (x * x)
            + self.rat.eval_f64(z)
            + rational_to_f64(&self.constant))
    }
}

/// `−f″ + V·f`.
pub fn apply_schrodinger(v: &Potential, f: &Qrf) -> Result<Qrf> {
    let second = f.differentiate().differentiate();
    v.as_qrf().mul(f)?.sub(&second)
}

/// `𝒲(f₁, f₂) = f₁f₂′ − f₁′f₂` in `x`.
pub fn wronskian_qrf(f1: &Qrf, f2: &Qrf) -> Result<Qrf> {
    f1.mul(&f2.differentiate())?
        .sub(&f1.differentiate().mul(f2)?)
}

/// `W = −φ′/φ`.
pub fn superpotential(phi: &Qrf) -> Result<Qrf> {
    if phi.is_zero() {
        return Err(Error::DegenerateSeed);
    }
    Ok(phi.differentiate().div(phi)?.scale(&-Rational::one()))
}

/// First-order partner `V⁽⁻⁾ = W² + W′ + E` of the potential that `phi` solves at energy `e`.
pub fn partner_potential(phi: &Qrf, e: &Rational) -> Result<Qrf> {
    let w = superpotential(phi)?;
    w.square()
        .add(&w.differentiate())?
        .add(&Qrf::constant(e.clone(), phi.omega.clone()))
}

/// `p = −𝒲′/(2𝒲)`, cross-checked against `p = −(E₁−E₂)φ₁φ₂/(2𝒲)`.
pub fn p_from_seeds(phi1: &Qrf, phi2: &Qrf, e1: &Rational, e2: &Rational) -> Result<Qrf> {
    let w = wronskian_qrf(phi1, phi2)?;
    if w.is_zero() {
        return Err(Error::DegenerateWronskian);
    }
    let minus_half = rat(-1, 2);
    let from_derivative = w.differentiate().div(&w)?.scale(&minus_half);
    let from_product = phi1
        .mul(phi2)?
        .div(&w)?
        .scale(&(&minus_half * (e1 - e2)));
    let residual = from_derivative.sub(&from_product)?;
    if !residual.is_zero() {
        return Err(Error::identity("wronskian-derivative-form", residual));
    }
    Ok(from_derivative)
}

/// The second-order intertwining data rebuilt from `p` and `c`.
#[derive(Clone, Debug)]
pub struct SsusyTriple {
    pub p: Qrf,
    pub q: Qrf,
    pub c: Rational,
    pub v1: Qrf,
    pub v2: Qrf,
}

/// `q` and `V⁽¹'²⁾` from `p` and the integration constant `c`:
///
/// ```text
/// q       = −p′ + p² − p″/(2p) + (p′/2p)² − c²/(16p²)
/// V⁽¹'²⁾ = ∓2p′ + p² + p″/(2p) − (p′/2p)² + c²/(16p²)
/// ```
pub fn ssusy_relations(p: &Qrf, c: &Rational) -> Result<SsusyTriple> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let omega = p.omega().clone();
    let dp = p.differentiate();
    let ddp = dp.differentiate();
    let p2 = p.square();
    let ratio = dp.div(&p.scale(&rat(2, 1)))?; // p′/(2p)
    let curv = ddp.div(&p.scale(&rat(2, 1)))?; // p″/(2p)
    let c_term = Qrf::constant(c * c / rat(16, 1), omega).div(&p2)?;
    let ratio2 = ratio.square();

    let q = dp
        .scale(&-Rational::one())
        .add(&p2)?
        .sub(&curv)?
        .add(&ratio2)?
        .sub(&c_term)?;
    let common = p2.add(&curv)?.sub(&ratio2)?.add(&c_term)?;
    let two_dp = dp.scale(&rat(2, 1));
    let v1 = common.sub(&two_dp)?;
    let v2 = common.add(&two_dp)?;
    Ok(SsusyTriple {
        p: p.clone(),
        q,
        c: c.clone(),
        v1,
        v2,
    })
}

/// Rebuilds `q`, `V⁽¹⁾`, `V⁽²⁾` from `p`, then checks `V⁽²⁾ − V⁽¹⁾ = 4p′` and
/// that both potentials coincide exactly with the independently assembled ones.
pub fn ssusy_check(
    p: &Qrf,
    c: &Rational,
    v1_expected: &Potential,
    v2_expected: &Potential,
    check_id: &str,
) -> Result<CheckEntry> {
    let t = ssusy_relations(p, c)?;
    let gap = t.v2.sub(&t.v1)?.sub(&p.differentiate().scale(&rat(4, 1)))?;
    if !gap.is_zero() {
        return Err(Error::identity(format!("{check_id}: V2 - V1 - 4p'"), gap));
    }
    let r1 = t.v1.sub(&v1_expected.as_qrf())?;
    if !r1.is_zero() {
        return Err(Error::identity(format!("{check_id}: V1"), r1));
    }
    let r2 = t.v2.sub(&v2_expected.as_qrf())?;
    if !r2.is_zero() {
        return Err(Error::identity(format!("{check_id}: V2"), r2));
    }
    Ok(CheckEntry::exact_pass(check_id))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w1() -> Rational {
        rat(1, 1)
    }

    fn ground_state(l: i64) -> Qrf {
        Qrf::new(rat(l + 1, 1), rat(-1, 4), RatFunc::one(), w1())
    }

    #[test]
    fn differentiate_examples() {
        let l = 2;
        let d = ground_state(l).differentiate();
        let expected = Qrf::new(
            rat(l, 1),
            rat(-1, 4),
            RatFunc::from_poly(Poly::from_i64s(&[l + 1, -1])),
            w1(),
        );
        assert_eq!(d, expected);

        let z = Qrf::from_z(RatFunc::from_poly(Poly::z()), w1());
        assert_eq!(
            z.differentiate(),
            Qrf::new(rat(-1, 1), rat(0, 1), RatFunc::from_poly(Poly::from_i64s(&[0, 2])), w1())
        );
        assert!(Qrf::constant(rat(1, 1), w1()).differentiate().is_zero());
    }

    #[test]
    fn differentiate_matches_finite_difference() {
        let f = Qrf::new(
            rat(3, 2),
            rat(1, 4),
            RatFunc::new(Poly::from_i64s(&[1, -2, 1]), Poly::from_i64s(&[3, 1])).unwrap(),
            rat(2, 1),
        );
        let df = f.differentiate();
        for &x in &[0.3, 0.9, 1.7] {
            let h = 1e-5;
            let fd = (f.eval_f64(x + h) - f.eval_f64(x - h)) / (2.0 * h);
            assert!((fd - df.eval_f64(x)).abs() < 1e-6 * (1.0 + fd.abs()));
        }
    }

    #[test]
    fn superpotential_examples() {
        let l = 1;
        let w = superpotential(&ground_state(l)).unwrap();
        assert_eq!(
            w,
            Qrf::new(rat(-1, 1), rat(0, 1), RatFunc::from_poly(Poly::from_i64s(&[-(l + 1), 1])), w1())
        );
        let type_i = Qrf::new(rat(l + 1, 1), rat(1, 4), RatFunc::one(), w1());
        assert_eq!(
            superpotential(&type_i).unwrap(),
            Qrf::new(rat(-1, 1), rat(0, 1), RatFunc::from_poly(Poly::from_i64s(&[-(l + 1), -1])), w1())
        );
        assert!(superpotential(&ground_state(l).scale(&rat(-7, 3))).unwrap().equals(&w));
        assert_eq!(superpotential(&Qrf::zero(w1())), Err(Error::DegenerateSeed));
    }

    #[test]
    fn oscillator_ground_state() {
        for l in 0..4 {
            let v = Potential::oscillator(l, w1());
            let hpsi = apply_schrodinger(&v, &ground_state(l)).unwrap();
            let e = rat(2 * l + 3, 2);
            assert!(hpsi.equals(&ground_state(l).scale(&e)), "l={l}");
        }
        assert!(apply_schrodinger(&Potential::oscillator(1, w1()), &Qrf::zero(w1()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn addition_rules() {
        let a = Qrf::new(rat(2, 1), rat(0, 1), RatFunc::one(), w1());
        // x² = 2z/ω
        let b = Qrf::from_z(RatFunc::from_poly(Poly::from_i64s(&[0, 2])), w1());
        assert!(a.equals(&b));
        let odd = Qrf::new(rat(1, 1), rat(0, 1), RatFunc::one(), w1());
        assert!(matches!(a.add(&odd), Err(Error::Structural(_))));
        let gauss = Qrf::new(rat(2, 1), rat(1, 4), RatFunc::one(), w1());
        assert!(matches!(a.add(&gauss), Err(Error::Structural(_))));
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn degenerate_wronskian() {
        let phi = ground_state(1);
        assert_eq!(
            p_from_seeds(&phi, &phi, &rat(1, 1), &rat(1, 1)),
            Err(Error::DegenerateWronskian)
        );
    }
}
