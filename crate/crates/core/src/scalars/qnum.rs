use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::{LaurentPoly, Monomial};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `[r]_q` as a Laurent polynomial: `q^(r-1) + q^(r-3) + ... + q^(1-r)`.
///
/// Negative arguments use `[-r]_q = -[r]_q`.
pub fn q_int_poly(r: i64) -> LaurentPoly {
    if r < 0 {
        return -q_int_poly(-r);
    }
    let r = i32::try_from(r).expect("q-integer argument exceeds exponent range");
    LaurentPoly::from_terms((0..r).map(|k| (Monomial::q(r - 1 - 2 * k), BigRational::one())))
}

pub fn q_int(r: i64) -> Scalar {
    Scalar::from_poly(q_int_poly(r))
}

pub fn q_factorial_poly(r: i64) -> Result<LaurentPoly> {
    if r < 0 {
        return Err(Error::OutOfRange(format!("q-factorial of negative {r}")));
    }
    Ok((1..=r).fold(LaurentPoly::one(), |acc, s| &acc * &q_int_poly(s)))
}

/// `[r]_q! = [1]_q [2]_q ... [r]_q`, with `[0]_q! = 1`.
pub fn q_factorial(r: i64) -> Result<Scalar> {
    q_factorial_poly(r).map(Scalar::from_poly)
}

pub fn q_binomial_poly(r: i64, s: i64) -> Result<LaurentPoly> {
    if s < 0 || s > r {
        return Err(Error::OutOfRange(format!("q-binomial [{r} choose {s}]")));
    }
    let (r, s) = (r as usize, s.min(r - s) as usize);
    // Gaussian binomial in t = q^2 by Pascal's rule G(k, j) = G(k-1, j-1) + t^j G(k-1, j);
    // then [r s]_q = q^(-s(r-s)) G(r, s)(q^2).
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=r {
        let mut next = Vec::with_capacity(s + 1);
        for j in 0..=k.min(s) {
            let mut g = vec![BigInt::from(0); j * (k - j) + 1];
            if j > 0 {
                for (e, c) in row[j - 1].iter().enumerate() {
                    g[e] += c;
                }
            }
            if j < row.len() && j < k {
                for (e, c) in row[j].iter().enumerate() {
                    g[e + j] += c;
                }
            }
            next.push(g);
        }
        row = next;
    }
    let shift = -((s * (r - s)) as i64);
    Ok(LaurentPoly::from_terms(row[s].iter().enumerate().map(
        |(e, c)| {
            (
                Monomial::q((shift + 2 * e as i64) as i32),
                BigRational::from_integer(c.clone()),
            )
        },
    )))
}

/// Gaussian binomial `[r]_q! / ([s]_q! [r-s]_q!)`, requiring `0 <= s <= r`.
pub fn q_binomial(r: i64, s: i64) -> Result<Scalar> {
    q_binomial_poly(r, s).map(Scalar::from_poly)
}

/// Ordinary binomial coefficient, `0` outside `0 <= s <= r`.
pub fn binomial(r: i64, s: i64) -> BigInt {
    if s < 0 || r < 0 || s > r {
        return BigInt::from(0);
    }
    let s = s.min(r - s);
    let mut acc = BigInt::one();
    for k in 0..s {
        acc = acc * BigInt::from(r - k) / BigInt::from(k + 1);
    }
    acc
}
