//! Closed forms `N₁/D + N₂/D²` of the three cubic rational extensions, written
//! directly as polynomials in `x` and compared exactly with the rational part
//! assembled from `g`.

use std::fmt;

use num_bigint::BigInt;

use crate::exactmath::{laguerre, ratfunc_equal, Poly, RatFunc, Rational};
use crate::report::CheckEntry;
use crate::susy::{alpha_of, build_extension, rational_part_x_from_g, Case, ExtensionSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoldenForm {
    /// Case III with `m₁ = m₂ = 1`: the cubic not reachable in first order.
    NewCubic,
    /// `g = L₃^{(α−1)}(−z)`.
    TypeICubic,
    /// `g = L₃^{(−α−1)}(z)`, with `(2l−9)` as the `ω²x⁴` coefficient of `N₂`.
    TypeIICubic,
    /// `g = L₃^{(−α−1)}(z)`, with `(2l−7)` as the `ω²x⁴` coefficient of `N₂`.
    TypeIICubicAmended,
}

impl GoldenForm {
    pub const ALL: [GoldenForm; 4] = [
        GoldenForm::NewCubic,
        GoldenForm::TypeICubic,
        GoldenForm::TypeIICubic,
        GoldenForm::TypeIICubicAmended,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            GoldenForm::NewCubic => "golden-new-cubic",
            GoldenForm::TypeICubic => "golden-type-i-cubic",
            GoldenForm::TypeIICubic => "golden-type-ii-cubic",
            GoldenForm::TypeIICubicAmended => "golden-type-ii-cubic-amended",
        }
    }

    /// Angular momenta the closed form is stated for.
    pub fn l_values(&self) -> [u32; 3] {
        match self {
            GoldenForm::NewCubic | GoldenForm::TypeICubic => [1, 2, 3],
            GoldenForm::TypeIICubic | GoldenForm::TypeIICubicAmended => [3, 4, 5],
        }
    }

    /// `V_rat(x)` assembled from the construction.
    pub fn constructed(&self, l: u32, omega: &Rational) -> RatFunc {
        let a = alpha_of(l);
        let one = Rational::from_integer(1.into());
        match self {
            GoldenForm::NewCubic => {
                let spec = ExtensionSpec::new(Case::III, l, 1, 1, omega.clone());
                build_extension(&spec)
                    .expect("case iii (1, 1) is admissible for l >= 1")
                    .rational_part_x()
            }
            GoldenForm::TypeICubic => {
                rational_part_x_from_g(&laguerre(3, &(a - one)).compose_neg(), omega)
            }
            GoldenForm::TypeIICubic | GoldenForm::TypeIICubicAmended => {
                rational_part_x_from_g(&laguerre(3, &(-a - one)), omega)
            }
        }
    }

    /// The closed form `N₁/D + N₂/D²` at concrete `l`, `ω`.
    pub fn closed_form(&self, l: u32, omega: &Rational) -> RatFunc {
        let l = Rational::from_integer(BigInt::from(l));
        let c = |n: i64| Rational::from_integer(BigInt::from(n));
        let w = omega.clone();
        let w2 = &w * &w;
        // 2l + k
        let tl = |k: i64| &l * c(2) + c(k);
        // a·ω²x⁴ + b·ωx² + d as a polynomial in x
        let quad = |a: Rational, b: Rational, d: Rational| {
            Poly::from_coeffs(vec![d, c(0), b * &w, c(0), a * &w2])
        };
        let wx2 = Poly::monomial(w.clone(), 2);

        let (n1, n2, d) = match self {
            GoldenForm::NewCubic => {
                let n1 = quad(c(1), c(0), c(28) - tl(1) * tl(1)).scale(&(c(12) * &w));
                let n2 = quad(
                    c(3) * tl(1),
                    c(4) * tl(-1) * tl(3),
                    tl(-1) * tl(1) * tl(3),
                )
                .scale(&(c(-288) * &w));
                let d = &(&wx2 + &Poly::constant(tl(1))).pow(3)
                    - &(&wx2.scale(&c(3)) + &Poly::constant(tl(1))).scale(&c(4));
                (n1, n2, d)
            }
            GoldenForm::TypeICubic => {
                let n1 = quad(c(1), c(0), -(tl(-9) * tl(5))).scale(&(c(12) * &w));
                let n2 = quad(
                    tl(9),
                    c(2) * tl(3) * tl(5),
                    tl(1) * tl(3) * tl(5),
                )
                .scale(&(c(-144) * &w * tl(5)));
                let d = &(&wx2 + &Poly::constant(tl(5))).pow(3)
                    - &(&wx2.scale(&c(3)) + &Poly::constant(&l * c(6) + c(11))).scale(&(c(2) * tl(5)));
                (n1, n2, d)
            }
            GoldenForm::TypeIICubic | GoldenForm::TypeIICubicAmended => {
                let x4 = if *self == GoldenForm::TypeIICubic {
                    tl(-9)
                } else {
                    tl(-7)
                };
                let n1 = quad(c(1), c(0), -(tl(-3) * tl(11))).scale(&(c(12) * &w));
                let n2 = quad(
                    x4,
                    c(2) * tl(-3) * tl(-1),
                    tl(-3) * tl(-1) * tl(1),
                )
                .scale(&(c(144) * &w * tl(-3)));
                let d = &(&wx2 + &Poly::constant(tl(-3))).pow(3)
                    + &(&wx2.scale(&c(3)) + &Poly::constant(&l * c(6) - c(5))).scale(&(c(2) * tl(-3)));
                (n1, n2, d)
            }
        };
        let first = RatFunc::new(n1, d.clone()).expect("D is nonzero");
        let second = RatFunc::new(n2, &d * &d).expect("D is nonzero");
        &first + &second
    }
}

impl fmt::Display for GoldenForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Exact comparison of the constructed and closed-form rational parts.
pub fn golden_check(form: GoldenForm, l: u32, omega: &Rational) -> CheckEntry {
    let id = format!("{}[l={l},omega={omega}]", form.id());
    let built = form.constructed(l, omega);
    let closed = form.closed_form(l, omega);
    if ratfunc_equal(&built, &closed) {
        CheckEntry::exact_pass(id)
    } else {
        CheckEntry::exact_fail(id, (&built - &closed).to_string())
    }
}

/// All forms, at their stated `l` values and `ω ∈ {1, 2}`.
pub fn golden_suite() -> Vec<CheckEntry> {
    let omegas = [Rational::from_integer(1.into()), Rational::from_integer(2.into())];
    GoldenForm::ALL
        .iter()
        .flat_map(|form| {
            let omegas = omegas.clone();
            form.l_values().into_iter().flat_map(move |l| {
                omegas
                    .clone()
                    .into_iter()
                    .map(move |w| golden_check(*form, l, &w))
            })
        })
        .collect()
}
