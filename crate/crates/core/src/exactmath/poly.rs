use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_to_f64, Rational};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` multiplies `z^k`. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients and [`Poly::degree`] returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest-degree nonzero coefficient; its sign is the sign of `p(0+)`.
    pub fn lowest_nonzero(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + rational_to_f64(c))
    }

    /// Coefficients converted once, for repeated floating-point evaluation.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `p(-z)`.
    pub fn compose_neg(&self) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p(c·x²)`, read as a polynomial in `x`.
    pub fn substitute_scaled_square(&self, c: &Rational) -> Poly {
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        let mut out = vec![Rational::zero(); 2 * deg + 1];
        let mut power = Rational::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            out[2 * k] = a * &power;
            power *= c;
        }
        Poly::from_coeffs(out)
    }

    /// `z^k · p`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Integer coefficients with unit content and positive leading coefficient.
    pub fn canonical(&self) -> Poly {
        let Some(lead) = self.leading() else {
            return Poly::zero();
        };
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::zero(), |acc, c| {
                acc.gcd(&(c.numer() * (&den_lcm / c.denom())))
            });
        let mut factor = Rational::new(den_lcm, num_gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `Some(c)` with `self == c · other` and `c != 0`, if such a constant exists.
    pub fn proportionality(&self, other: &Poly) -> Option<Rational> {
        match (self.leading(), other.leading()) {
            (None, None) => Some(Rational::one()),
            (Some(a), Some(b)) if self.degree() == other.degree() => {
                let c = a / b;
                (&other.scale(&c) == self).then_some(c)
            }
            _ => None,
        }
    }

    pub fn is_proportional(&self, other: &Poly) -> bool {
        self.proportionality(other).is_some()
    }
}

/// Determinant of the `k×k` matrix whose row `i` holds the `i`-th derivatives
/// of `fs`. Defined for any `k ≥ 1`; `k = 2` gives `f₁ḟ₂ − ḟ₁f₂`.
pub fn wronskian(fs: &[Poly]) -> Poly {
    let k = fs.len();
    assert!(k > 0, "Wronskian of an empty list");
    let rows: Vec<Vec<Poly>> = (0..k)
        .map(|i| fs.iter().map(|f| f.nth_derivative(i)).collect())
        .collect();
    let cols: Vec<usize> = (0..k).collect();
    laplace_det(&rows, 0, &cols)
}

fn laplace_det(rows: &[Vec<Poly>], row: usize, cols: &[usize]) -> Poly {
    if cols.len() == 1 {
        return rows[row][cols[0]].clone();
    }
    let mut acc = Poly::zero();
    for (j, &c) in cols.iter().enumerate() {
        let entry = &rows[row][c];
        if entry.is_zero() {
            continue;
        }
        let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &laplace_det(rows, row + 1, &minor_cols);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn compose_neg_examples() {
        assert_eq!(Poly::one().compose_neg(), Poly::one());
        // (a+1) - z with a = 1/2
        let lin = Poly::from_coeffs(vec![rat(3, 2), rat(-1, 1)]);
        assert_eq!(lin.compose_neg(), Poly::from_coeffs(vec![rat(3, 2), rat(1, 1)]));
        assert_eq!(p(&[3, -2, 1]).compose_neg(), p(&[3, 2, 1]));
    }

    #[test]
    fn wronskian_examples() {
        let q = p(&[1, 4, -3, 2]);
        assert_eq!(wronskian(&[Poly::one(), q.clone()]), q.derivative());
        assert!(wronskian(&[q.clone(), q.clone()]).is_zero());
        assert_eq!(wronskian(&[Poly::z(), p(&[0, 0, 1])]), p(&[0, 0, 1]));
        // 3×3: W(1, z, z²) = 2
        assert_eq!(
            wronskian(&[Poly::one(), Poly::z(), p(&[0, 0, 1])]),
            p(&[2])
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // (z-1)(z+1)
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let c = p(&[2, 3, 1]); // (z+1)(z+2)
        assert_eq!(Poly::gcd(&a, &c), p(&[1, 1]));
        assert_eq!(Poly::gcd(&p(&[1, 1]), &p(&[2, 1])), Poly::one());
    }

    #[test]
    fn canonical_form() {
        let g = Poly::from_coeffs(vec![rat(-5, 8), rat(-5, 4), rat(-5, 6)]);
        assert_eq!(g.canonical(), p(&[3, 6, 4]));
        assert_eq!(g.proportionality(&p(&[3, 6, 4])), Some(rat(-5, 24)));
        assert!(!g.is_proportional(&p(&[3, 6, 5])));
    }

    #[test]
    fn substitute_scaled_square() {
        // 1 + z with z = x²/2
        let q = p(&[1, 1]).substitute_scaled_square(&rat(1, 2));
        assert_eq!(q, Poly::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(1, 2)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, -1, 0, 2]).to_string(), "2*z^3 - z + 3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-9i64..=9, 0..7).prop_map(|c| Poly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn compose_neg_is_degree_preserving_involution(q in arb_poly()) {
            prop_assert_eq!(q.compose_neg().degree(), q.degree());
            prop_assert_eq!(q.compose_neg().compose_neg(), q);
        }

        #[test]
        fn wronskian_antisymmetric(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!(wronskian(&[f.clone(), g.clone()]), -wronskian(&[g.clone(), f.clone()]));
            prop_assert!(wronskian(&[f.clone(), f]).is_zero());
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }
    }
}
