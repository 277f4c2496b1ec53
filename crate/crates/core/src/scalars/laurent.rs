use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ipoly::IPoly;
use crate::error::{Error, Result};

/// Exponent triple of a monomial `x^x * y^y * q^q`.
///
/// Ordering is lexicographic in `(x, y, q)`, which is also the monomial
/// order used for leading terms and for serialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: i32,
    pub y: i32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, q: 0 };

    pub const fn new(q: i32, x: i32, y: i32) -> Self {
        Monomial { x, y, q }
    }

    pub fn q(e: i32) -> Self {
        Monomial { x: 0, y: 0, q: e }
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        Ok(Monomial {
            x: self.x.checked_add(other.x).ok_or(Error::ExponentOverflow)?,
            y: self.y.checked_add(other.y).ok_or(Error::ExponentOverflow)?,
            q: self.q.checked_add(other.q).ok_or(Error::ExponentOverflow)?,
        })
    }

    pub fn inv(self) -> Monomial {
        Monomial {
            x: -self.x,
            y: -self.y,
            q: -self.q,
        }
    }

    pub fn min(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x.min(other.x),
            y: self.y.min(other.y),
            q: self.q.min(other.q),
        }
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y && self.q <= other.q
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    pub(crate) fn get(self, var: usize) -> i32 {
        match var {
            0 => self.x,
            1 => self.y,
            _ => self.q,
        }
    }

    pub(crate) fn with(mut self, var: usize, e: i32) -> Monomial {
        match var {
            0 => self.x = e,
            1 => self.y = e,
            _ => self.q = e,
        }
        self
    }
}

/// Product of monomials. Overflow of an exponent is a hard error.
impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }
}

/// Laurent polynomial in `q, x, y` with exact rational coefficients.
///
/// No stored coefficient is zero; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Monomial::q(e))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::new(0, 1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 0, 1))
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    /// The constant value, when the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term, when the polynomial is a monomial times a constant.
    pub fn as_term(&self) -> Option<(Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Componentwise minimum of all exponents (`Monomial::ONE` for zero).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.min(*m)),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Image under `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { q: -m.q, ..*m }, c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point. Callers guarantee nonzero values
    /// for every variable occurring with a negative exponent.
    pub fn eval(&self, q: &BigRational, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * rat_pow(q, m.q) * rat_pow(x, m.x) * rat_pow(y, m.y);
        }
        acc
    }

    /// True when `x` or `y` occurs.
    pub fn involves_xy(&self) -> bool {
        self.terms.keys().any(|m| m.x != 0 || m.y != 0)
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor`
    /// does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        // Shift both sides to ordinary polynomials; the divisor then has no
        // monomial factor, so divisibility is decided by plain lex division.
        let dshift = divisor.min_exponents().inv();
        let d = divisor.mul_monomial(dshift);
        let ashift = self.min_exponents().inv();
        let mut rem = self.mul_monomial(ashift);
        let (lm, lc) = d.leading().map(|(m, c)| (m, c.clone()))?;
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let t = rm.mul(lm.inv());
            let c = rc / &lc;
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(t), -(dc * &c));
            }
            quot.add_term(t, c);
        }
        Some(quot.mul_monomial(dshift.mul(ashift.inv())))
    }
}

pub(crate) fn rat_pow(base: &BigRational, e: i32) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.terms.len() * rhs.terms.len() > 16 {
            if let (Some(a), Some(b)) = (IPoly::from_laurent(self), IPoly::from_laurent(rhs)) {
                return a.mul(&b).to_laurent();
            }
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::poly_to_string(self))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::poly_to_string(self))
    }
}
