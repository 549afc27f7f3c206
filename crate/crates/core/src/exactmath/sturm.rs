use num_traits::{Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// `p / gcd(p, p')`: same distinct roots, all simple.
pub fn square_free_part(p: &Poly) -> Poly {
    let g = Poly::gcd(p, &p.derivative());
    if g.is_zero() {
        return p.clone();
    }
    p.exact_div(&g).expect("gcd divides p")
}

/// Sturm chain `p₀ = p, p₁ = p', p_{k+1} = -rem(p_{k-1}, p_k)`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = -seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn sign_of(r: &crate::exactmath::Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots in the open interval `(0, ∞)`.
pub fn count_positive_roots(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(&square_free_part(p));
    let at_zero = sign_changes(seq.iter().map(|q| q.lowest_nonzero().map_or(0, sign_of)));
    let at_inf = sign_changes(seq.iter().map(|q| q.leading().map_or(0, sign_of)));
    Ok(at_zero - at_inf)
}
