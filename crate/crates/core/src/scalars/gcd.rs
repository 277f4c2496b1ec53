//! Greatest common divisors in `Z[x, y, q]`.
//!
//! Polynomials are viewed recursively: pick a main variable, take contents
//! over the remaining variables, and run a primitive pseudo-remainder
//! sequence. Before that, univariate images modulo a prime bound the degree
//! of the gcd in each variable; a degree-zero image proves the gcd is free
//! of that variable, which settles the common coprime case cheaply.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial};

/// Polynomial with integer coefficients and nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ZPoly {
    pub terms: BTreeMap<Monomial, BigInt>,
}

const VARS: [usize; 3] = [0, 1, 2];

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        ZPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn sub(&self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }

    fn mul_monomial(&self, m: Monomial, c: &BigInt) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    fn degree(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.get(var)).max().unwrap_or(0)
    }

    fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.get(var) > 0)
    }

    /// Coefficients with respect to `var`, keyed by degree.
    fn coeffs_in(&self, var: usize) -> BTreeMap<i32, ZPoly> {
        let mut out: BTreeMap<i32, ZPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.get(var))
                .or_default()
                .terms
                .insert(m.with(var, 0), c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, var: usize) -> ZPoly {
        let d = self.degree(var);
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            if m.get(var) == d {
                out.terms.insert(m.with(var, 0), c.clone());
            }
        }
        out
    }

    pub fn integer_content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Makes the lex-leading coefficient positive.
    pub fn normalize_sign(mut self) -> ZPoly {
        if let Some((_, c)) = self.terms.iter().next_back() {
            if c.is_negative() {
                for v in self.terms.values_mut() {
                    *v = -v.clone();
                }
            }
        }
        self
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        let (lm, lc) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = ZPoly::zero();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if !lm.divides(*rm) {
                return None;
            }
            let (c, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let t = rm.mul(lm.inv());
            rem = rem.sub(&divisor.mul_monomial(t, &c));
            quot.add_term(t, c);
        }
        Some(quot)
    }

    /// Converts a Laurent polynomial with nonnegative exponents, returning
    /// the integer polynomial and the positive scale `s` with `p = poly / s`.
    pub fn from_laurent(p: &LaurentPoly) -> (ZPoly, BigInt) {
        let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut out = ZPoly::zero();
        for (m, c) in p.terms() {
            debug_assert!(m.x >= 0 && m.y >= 0 && m.q >= 0);
            out.terms.insert(*m, c.numer() * (&lcm / c.denom()));
        }
        (out, lcm)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, BigRational::from_integer(c.clone()))),
        )
    }
}

/// Content with respect to `var`: gcd of the coefficient polynomials.
fn content_in(p: &ZPoly, var: usize) -> ZPoly {
    let mut g = ZPoly::zero();
    for c in p.coeffs_in(var).into_values() {
        g = gcd(&g, &c);
        if is_unit(&g) {
            break;
        }
    }
    g
}

fn is_unit(p: &ZPoly) -> bool {
    p.terms.len() == 1
        && p.terms
            .iter()
            .next()
            .map(|(m, c)| m.is_one() && c.abs().is_one())
            .unwrap_or(false)
}

/// Pseudo-remainder of `a` by `b` in `var`, up to a power of `lc_var(b)`.
fn prem(a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
    let db = b.degree(var);
    let lcb = b.leading_coeff_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree(var) >= db {
        let d = r.degree(var) - db;
        let lcr = r.leading_coeff_in(var);
        let shift = Monomial::ONE.with(var, d);
        r = r.mul(&lcb).sub(&lcr.mul(b).mul_monomial(shift, &BigInt::one()));
    }
    r
}

fn primitive_part(p: &ZPoly, var: usize) -> ZPoly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides polynomial")
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = c.mod_floor(&p);
    r.try_into().expect("residue fits")
}

/// Image in `F_P[var]` with the other variables set to `point`, low degree first.
fn image(p: &ZPoly, var: usize, point: [u64; 3]) -> Vec<u64> {
    let mut out = vec![0u64; p.degree(var) as usize + 1];
    for (m, c) in &p.terms {
        let mut v = reduce(c);
        for w in VARS {
            if w != var {
                v = mulmod(v, powmod(point[w], m.get(w) as u64));
            }
        }
        let d = m.get(var) as usize;
        out[d] = (out[d] + v) % P;
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the gcd of two univariate polynomials over `F_P`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + P - mulmod(f, *c)) % P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Proves `deg_var gcd(a, b) = 0` from a degree-zero modular image.
///
/// If the image keeps the degree of `a` in `var`, the image of the true gcd
/// divides both images with its degree intact, so the image gcd degree
/// bounds the true one from above.
fn free_of(a: &ZPoly, b: &ZPoly, var: usize) -> bool {
    const POINTS: [[u64; 3]; 3] = [[3, 5, 7], [11, 2, 13], [1_000_003, 999_983, 65_537]];
    let da = a.degree(var) as usize;
    POINTS.iter().any(|&pt| {
        let ia = image(a, var, pt);
        if ia[da] == 0 {
            return false;
        }
        gcd_degree_mod(ia, image(b, var, pt)) == 0
    })
}

/// `gcd(g, c_1, c_2, ...)` over the coefficients of `p` in `var`.
fn gcd_with_coeffs(g: ZPoly, p: &ZPoly, var: usize) -> ZPoly {
    let mut g = g;
    for c in p.coeffs_in(var).into_values() {
        g = gcd(&g, &c);
        if is_unit(&g) {
            break;
        }
    }
    g
}

/// Greatest common divisor in `Z[x, y, q]`, with positive leading coefficient.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if is_unit(a) || is_unit(b) {
        return ZPoly::constant(BigInt::one());
    }
    let var = VARS.iter().copied().find(|&v| a.involves(v) || b.involves(v));
    let Some(var) = var else {
        let ca = a.terms.values().next().unwrap();
        let cb = b.terms.values().next().unwrap();
        return ZPoly::constant(ca.gcd(cb));
    };
    if !b.involves(var) {
        return gcd_with_coeffs(b.clone(), a, var);
    }
    if !a.involves(var) {
        return gcd_with_coeffs(a.clone(), b, var);
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    if free_of(a, b, var) {
        // the gcd divides every coefficient of a and b in var
        let g = gcd_with_coeffs(b.clone(), a, var);
        return gcd_with_coeffs(g, b, var);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut r = b.div_exact(&cb).expect("content divides");
    if p.degree(var) < r.degree(var) {
        std::mem::swap(&mut p, &mut r);
    }
    loop {
        if r.degree(var) == 0 {
            // r is primitive and constant in var, so it is a unit here.
            return c.normalize_sign();
        }
        let rem = prem(&p, &r, var);
        if rem.is_zero() {
            return c.mul(&r).normalize_sign();
        }
        p = r;
        r = primitive_part(&rem, var);
    }
}

impl LaurentPoly {
    /// Greatest common divisor in the Laurent ring, normalized to a primitive
    /// integer polynomial with no monomial factor and positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let shift = |p: &LaurentPoly| p.mul_monomial(p.min_exponents().inv());
        let (a, _) = ZPoly::from_laurent(&shift(self));
        let (b, _) = ZPoly::from_laurent(&shift(other));
        let g = gcd(&a, &b);
        let c = g.integer_content();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        g.div_exact(&ZPoly::constant(c)).unwrap().to_laurent()
    }

    /// Least common multiple, normalized like [`LaurentPoly::gcd`].
    pub fn lcm(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let g = self.gcd(other);
        let shift = |p: &LaurentPoly| p.mul_monomial(p.min_exponents().inv());
        let a = shift(self);
        let b = shift(other);
        let prod = &a.div_exact(&g).expect("gcd divides") * &b;
        let (z, _) = ZPoly::from_laurent(&prod);
        let c = z.integer_content();
        z.div_exact(&ZPoly::constant(c))
            .unwrap()
            .normalize_sign()
            .to_laurent()
    }
}
