//! The q-combinatorial identities, each checked as an exact equality of
//! Laurent polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::ser_scalar;
use crate::scalars::{
    binomial, classical_limit, q_binomial_poly, q_factorial_poly, q_int_poly, LaurentPoly, Monomial, Scalar,
};

/// Both sides of one instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub holds: bool,
    #[serde(serialize_with = "ser_scalar")]
    pub lhs: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub rhs: Scalar,
}

impl IdentityReport {
    fn new(id: &str, params: &[(&str, i64)], lhs: Scalar, rhs: Scalar) -> Self {
        let holds = (&lhs - &rhs).is_zero();
        IdentityReport {
            id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            holds,
            lhs,
            rhs,
        }
    }
}

fn alt(i: i64) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sgn(i: i64) -> BigRational {
    BigRational::from_integer(alt(i).into())
}

fn check_ml(m: i64, l: i64) -> Result<()> {
    if l < 1 || l > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= l <= m, got (m, l) = ({m}, {l})"
        )));
    }
    Ok(())
}

fn qb(r: i64, s: i64) -> LaurentPoly {
    q_binomial_poly(r, s).expect("indices checked by caller")
}

/// `sum_{i=0..min(l,m-l)} (-1)^i q^-i [l i] [m-i l]`
pub fn binomial_sum(m: i64, l: i64) -> Result<LaurentPoly> {
    check_ml(m, l)?;
    let mut sum = LaurentPoly::zero();
    for i in 0..=l.min(m - l) {
        let t = &(&qb(l, i) * &qb(m - i, l)) * &LaurentPoly::q_pow(-i as i32);
        sum = &sum + &t.scale(&sgn(i));
    }
    Ok(sum)
}

/// Checks the q-binomial form against `q^(l(m-l))`.
pub fn binomial_sum_check(m: i64, l: i64) -> Result<IdentityReport> {
    let lhs = binomial_sum(m, l)?;
    Ok(IdentityReport::new(
        "binomial_sum",
        &[("m", m), ("l", l)],
        lhs.into(),
        Scalar::q_pow((l * (m - l)) as i32),
    ))
}

/// The factorial form `sum (-1)^i q^-i [m-i]! / ([i]! [l-i]! [m-l-i]!)`.
pub fn binomial_sum_factorial(m: i64, l: i64) -> Result<Scalar> {
    check_ml(m, l)?;
    let f = |r| Scalar::from(q_factorial_poly(r).expect("nonnegative"));
    let mut sum = Scalar::zero();
    for i in 0..=l.min(m - l) {
        let den = &(&f(i) * &f(l - i)) * &f(m - l - i);
        let t = &f(m - i).checked_div(&den)? * &Scalar::q_pow(-i as i32);
        sum = &sum + &(&t * &Scalar::from_int(alt(i)));
    }
    Ok(sum)
}

/// Factorial form compared with the q-binomial form.
pub fn binomial_sum_factorial_check(m: i64, l: i64) -> Result<IdentityReport> {
    Ok(IdentityReport::new(
        "binomial_sum_factorial",
        &[("m", m), ("l", l)],
        binomial_sum_factorial(m, l)?,
        binomial_sum(m, l)?.into(),
    ))
}

/// Same sum with a bare `[m-l-i]` in place of `[m-l-i]!`.
pub fn binomial_sum_bare_bracket(m: i64, l: i64) -> Result<Scalar> {
    check_ml(m, l)?;
    let f = |r| Scalar::from(q_factorial_poly(r).expect("nonnegative"));
    let mut sum = Scalar::zero();
    for i in 0..=l.min(m - l) {
        let den = &(&f(i) * &f(l - i)) * &Scalar::from(q_int_poly(m - l - i));
        let t = &f(m - i).checked_div(&den)? * &Scalar::q_pow(-i as i32);
        sum = &sum + &(&t * &Scalar::from_int(alt(i)));
    }
    Ok(sum)
}

/// `sum (-1)^i C(l,i) C(m-i,l)` against 1.
pub fn classical_sum_check(m: i64, l: i64) -> Result<IdentityReport> {
    check_ml(m, l)?;
    let sum: BigInt = (0..=l.min(m - l))
        .map(|i| binomial(l, i) * binomial(m - i, l) * alt(i))
        .sum();
    Ok(IdentityReport::new(
        "classical_sum",
        &[("m", m), ("l", l)],
        Scalar::from(sum),
        Scalar::one(),
    ))
}

/// `q -> 1` limit of [`binomial_sum`].
pub fn binomial_sum_classical(m: i64, l: i64) -> Result<Scalar> {
    Ok(Scalar::from_rational(classical_limit(
        &binomial_sum(m, l)?.into(),
    )?))
}

/// `sum_{i=0..l} (-1)^i [l i] q^(ik)` without range restriction on `k`.
pub fn vanishing_sum(l: i64, k: i64) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for i in 0..=l {
        let t = &qb(l, i) * &LaurentPoly::q_pow((i * k) as i32);
        sum = &sum + &t.scale(&sgn(i));
    }
    sum
}

/// Admissible `k`: `l-1, l-3, ..., -(l-1)`.
pub fn vanishing_sum_exponents(l: i64) -> Vec<i64> {
    (0..l).map(|t| l - 1 - 2 * t).collect()
}

pub fn vanishing_sum_check(l: i64, k: i64) -> Result<IdentityReport> {
    if l < 1 {
        return Err(Error::OutOfRange(format!("need l >= 1, got {l}")));
    }
    if !vanishing_sum_exponents(l).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "k = {k} is not one of l-1, l-3, ..., -(l-1) for l = {l}"
        )));
    }
    Ok(IdentityReport::new(
        "vanishing_sum",
        &[("l", l), ("k", k)],
        vanishing_sum(l, k).into(),
        Scalar::zero(),
    ))
}

/// `sum_{i=0..l} (-1)^i [l i] x^i y^(l-i) q^(i(l-1)) q^(-is)
///  = prod_{j=0..l-1} (y - x q^(-s+2j))`.
pub fn product_expansion_check(l: i64, s: i64) -> Result<IdentityReport> {
    if l < 1 {
        return Err(Error::OutOfRange(format!("need l >= 1, got {l}")));
    }
    let mut lhs = LaurentPoly::zero();
    for i in 0..=l {
        let mono = Monomial {
            x: i as i32,
            y: (l - i) as i32,
            q: (i * (l - 1) - i * s) as i32,
        };
        lhs = &lhs + &qb(l, i).mul_monomial(mono).scale(&sgn(i));
    }
    let mut rhs = LaurentPoly::one();
    for j in 0..l {
        let factor = LaurentPoly::y()
            - LaurentPoly::term(
                Monomial {
                    x: 1,
                    y: 0,
                    q: (-s + 2 * j) as i32,
                },
                One::one(),
            );
        rhs = &rhs * &factor;
    }
    Ok(IdentityReport::new(
        "product_expansion",
        &[("l", l), ("s", s)],
        lhs.into(),
        rhs.into(),
    ))
}

#[cfg(test)]
mod tests;
