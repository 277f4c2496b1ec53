use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::{gcd, ZPoly};
use super::laurent::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// Element of the rational function field `Q(q, x, y)`.
///
/// Canonical form: `den` is a primitive integer polynomial with nonnegative
/// exponents, no monomial factor and positive lex-leading coefficient;
/// `num` is a Laurent polynomial coprime to `den`. Structural equality is
/// therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Scalar::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn q() -> Self {
        Scalar::from_poly(LaurentPoly::q())
    }

    pub fn q_pow(e: i32) -> Self {
        Scalar::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn x() -> Self {
        Scalar::from_poly(LaurentPoly::x())
    }

    pub fn y() -> Self {
        Scalar::from_poly(LaurentPoly::y())
    }

    pub fn monomial(m: Monomial) -> Self {
        Scalar::from_poly(LaurentPoly::monomial(m))
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn involves_xy(&self) -> bool {
        self.num.involves_xy() || self.den.involves_xy()
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Scalar {
        if self.is_laurent() {
            return Scalar::from_poly(&self.num * p);
        }
        canonicalize(&self.num * p, self.den.clone())
    }

    /// Image under `q -> q^-1`.
    pub fn invert_q(&self) -> Scalar {
        canonicalize(self.num.invert_q(), self.den.invert_q())
    }
}

fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return Scalar::zero();
    }
    // Monomial denominators are units of the Laurent ring.
    if let Some((m, c)) = den.as_term() {
        let inv = c.recip();
        return Scalar::from_poly(num.mul_monomial(m.inv()).scale(&inv));
    }
    let dshift = den.min_exponents().inv();
    let nshift = num.min_exponents().inv();
    let (dz, dscale) = ZPoly::from_laurent(&den.mul_monomial(dshift));
    let (nz, nscale) = ZPoly::from_laurent(&num.mul_monomial(nshift));
    // value = (nz / nscale) * M / (dz / dscale), M = dshift / nshift
    let g = gcd(&nz, &dz);
    let (nz, dz) = if g.terms.len() == 1 && g.terms.keys().next().unwrap().is_one() {
        (nz, dz)
    } else {
        (
            nz.div_exact(&g).expect("gcd divides numerator"),
            dz.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let mut content = dz.integer_content();
    if dz.terms.values().next_back().unwrap().is_negative() {
        content = -content;
    }
    let dz = dz
        .div_exact(&ZPoly::constant(content.clone()))
        .expect("content divides");
    let factor = BigRational::new(dscale, nscale * content);
    let num = nz
        .to_laurent()
        .mul_monomial(dshift.mul(nshift.inv()))
        .scale(&factor);
    let den = dz.to_laurent();
    if den.is_one() {
        Scalar::from_poly(num)
    } else {
        Scalar { num, den }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.is_laurent() {
                return Scalar::from_poly(&self.num + &rhs.num);
            }
            return canonicalize(&self.num + &rhs.num, self.den.clone());
        }
        if self.is_laurent() {
            return canonicalize(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.is_laurent() {
            return canonicalize(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let (a, _) = ZPoly::from_laurent(&self.den);
        let (b, _) = ZPoly::from_laurent(&rhs.den);
        let g = gcd(&a, &b).to_laurent();
        let a_red = self.den.div_exact(&g).expect("gcd divides");
        let b_red = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b_red) + &(&rhs.num * &a_red);
        canonicalize(num, &self.den * &b_red)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_laurent() && rhs.is_laurent() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl From<BigInt> for Scalar {
    fn from(c: BigInt) -> Self {
        Scalar::from_rational(BigRational::from_integer(c))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::canonical_string(self))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| &a * &b)
    }
}

impl Scalar {
    /// True when the stored form satisfies every canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        if self.den.is_zero() {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        if !self.den.min_exponents().is_one() {
            return false;
        }
        if self.den.terms().any(|(_, c)| !c.is_integer()) {
            return false;
        }
        let (dz, _) = ZPoly::from_laurent(&self.den);
        if !dz.integer_content().is_one() {
            return false;
        }
        if !self.den.leading().map(|(_, c)| c.is_positive()).unwrap_or(false) {
            return false;
        }
        let (nz, _) = ZPoly::from_laurent(&self.num.mul_monomial(self.num.min_exponents().inv()));
        gcd(&nz, &dz) == ZPoly::constant(BigInt::one())
    }
}
