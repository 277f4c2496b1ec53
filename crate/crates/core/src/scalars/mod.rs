//! Exact arithmetic in `Q[q^±1, x^±1, y^±1]` and its fraction field,
//! together with the q-integers, q-factorials and Gaussian binomials.

mod eval;
mod format;
mod gcd;
mod ipoly;
mod laurent;
mod qnum;
mod scalar;

pub(crate) use ipoly::IPoly;

pub(crate) use eval::rational_str;
pub use eval::{classical_limit, specialize, Point};
pub use format::{canonical_string, parse_poly, parse_rational, parse_scalar, poly_to_string};
pub use laurent::{LaurentPoly, Monomial};
pub use qnum::{binomial, q_binomial, q_binomial_poly, q_factorial, q_factorial_poly, q_int, q_int_poly};
pub use scalar::Scalar;
