//! Exact arithmetic over the rationals: scalars, dense univariate polynomials,
//! rational functions, Laguerre polynomials, Wronskians and positive-root counting.
//!
//! Everything here is exact. The variable of every [`Poly`] is the reduced
//! oscillator coordinate `z`, except where a function says otherwise.

mod laguerre;
mod linalg;
mod poly;
mod ratfunc;
mod rational;
mod sturm;

pub use laguerre::{binomial, laguerre};
pub use linalg::nullspace;
pub use poly::{wronskian, Poly};
pub use ratfunc::{ratfunc_equal, RatFunc};
pub use rational::{format_rational, parse_rational, rat, rational_str, rational_to_f64, Rational};
pub use sturm::{count_positive_roots, square_free_part, sturm_sequence};
