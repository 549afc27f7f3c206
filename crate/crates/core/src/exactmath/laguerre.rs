use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;

/// Generalised binomial `C(r, j) = r(r-1)…(r-j+1) / j!` for rational `r`.
pub fn binomial(r: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| {
        let i = Rational::from_integer(BigInt::from(i));
        acc * (r - &i) / (&i + Rational::one())
    })
}

/// Generalised Laguerre polynomial `L_n^{(a)}(z) = Σ_k (-1)^k C(n+a, n-k) z^k / k!`.
///
/// Total for every rational `a`, including the negative half-integers used by the
/// type II seeds; the leading coefficient `(-1)^n / n!` never vanishes.
pub fn laguerre(n: usize, a: &Rational) -> Poly {
    let top = a + Rational::from_integer(BigInt::from(n));
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut k_fact = Rational::one();
    for k in 0..=n {
        if k > 0 {
            k_fact *= Rational::from_integer(BigInt::from(k));
        }
        let mut c = binomial(&top, n - k) / &k_fact;
        if k % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    debug_assert!(!coeffs[n].is_zero());
    Poly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    /// Three-term recurrence, kept independent of the explicit sum.
    fn laguerre_recurrence(n: usize, a: &Rational) -> Poly {
        let mut prev = Poly::one();
        if n == 0 {
            return prev;
        }
        let mut cur = Poly::from_coeffs(vec![a + Rational::one(), -Rational::one()]);
        for k in 1..n {
            let kr = Rational::from_integer(BigInt::from(k));
            let lin = Poly::from_coeffs(vec![&kr * rat(2, 1) + a + Rational::one(), -Rational::one()]);
            let next = (&(&lin * &cur) - &prev.scale(&(&kr + a))).scale(&(&kr + Rational::one()).recip());
            prev = cur;
            cur = next;
        }
        cur
    }

    fn half_integers() -> impl Iterator<Item = Rational> {
        (-9..=9).step_by(2).map(|k| rat(k, 2))
    }

    #[test]
    fn low_orders() {
        let a = rat(3, 2);
        assert_eq!(laguerre(0, &a), Poly::one());
        assert_eq!(laguerre(1, &a), Poly::from_coeffs(vec![rat(5, 2), rat(-1, 1)]));
        // z²/2 - (a+2) z + (a+1)(a+2)/2
        assert_eq!(
            laguerre(2, &a),
            Poly::from_coeffs(vec![rat(35, 8), rat(-7, 2), rat(1, 2)])
        );
    }

    #[test]
    fn matches_recurrence() {
        for a in half_integers().chain([rat(0, 1), rat(7, 3)]) {
            for n in 0..=10 {
                assert_eq!(laguerre(n, &a), laguerre_recurrence(n, &a), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn satisfies_laguerre_equation() {
        for a in half_integers() {
            for n in 0..=10 {
                let y = laguerre(n, &a);
                let lin = Poly::from_coeffs(vec![&a + Rational::one(), -Rational::one()]);
                let res = &(&y.nth_derivative(2).shift_up(1) + &(&lin * &y.derivative()))
                    + &y.scale(&Rational::from_integer(BigInt::from(n)));
                assert!(res.is_zero(), "n={n} a={a}");
                assert_eq!(y.degree(), Some(n));
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(&rat(5, 1), 2), rat(10, 1));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&rat(-3, 2), 0), rat(1, 1));
    }
}
