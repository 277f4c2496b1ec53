//! Canonical text form of polynomials and scalars.
//!
//! ```text
//! poly   := "0" | term ((" + " | " - ") term)*
//! term   := coeff "*" factors | factors | coeff
//! factors:= factor ("*" factor)*
//! factor := ("x" | "y" | "q") "^" int
//! coeff  := ["-"] digits ["/" digits]
//! scalar := poly | "(" poly ")/(" poly ")"
//! ```
//!
//! Terms are written in descending `(x, y, q)` exponent order; factors
//! appear as `x`, `y`, `q` and are omitted when their exponent is zero.
//! Only the first term carries a signed coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial};
use super::scalar::Scalar;
use crate::error::{Error, Result};

fn factors(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", m.x), ("y", m.y), ("q", m.q)] {
        if e != 0 {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

fn term(m: &Monomial, c: &BigRational) -> String {
    let f = factors(m);
    if f.is_empty() {
        c.to_string()
    } else if c.is_one() {
        f
    } else {
        format!("{c}*{f}")
    }
}

pub fn poly_to_string(p: &LaurentPoly) -> String {
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        if k == 0 {
            out.push_str(&term(m, c));
        } else if c.is_negative() {
            out.push_str(" - ");
            out.push_str(&term(m, &-c.clone()));
        } else {
            out.push_str(" + ");
            out.push_str(&term(m, c));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Deterministic serialization of a scalar.
pub fn canonical_string(s: &Scalar) -> String {
    if s.is_laurent() {
        poly_to_string(s.num())
    } else {
        format!("({})/({})", poly_to_string(s.num()), poly_to_string(s.den()))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn coeff(&mut self, allow_sign: bool) -> Result<BigRational> {
        let neg = allow_sign && self.eat("-");
        let n = self.digits()?;
        let d = if self.eat("/") {
            let d = self.digits()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            d
        } else {
            BigInt::one()
        };
        let c = BigRational::new(n, d);
        Ok(if neg { -c } else { c })
    }

    fn factor(&mut self, m: &mut Monomial) -> Result<()> {
        let var = match self.peek() {
            Some(b'x') => 0,
            Some(b'y') => 1,
            Some(b'q') => 2,
            _ => return self.err("expected x, y or q"),
        };
        self.pos += 1;
        if !self.eat("^") {
            return self.err("expected '^'");
        }
        let neg = self.eat("-");
        let e = self.digits()?;
        let e: i32 = i32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        let e = if neg { -e } else { e };
        let cur = m.get(var);
        *m = m.with(var, cur.checked_add(e).ok_or(Error::ExponentOverflow)?);
        Ok(())
    }

    fn factors(&mut self) -> Result<Monomial> {
        let mut m = Monomial::ONE;
        self.factor(&mut m)?;
        while self.eat("*") {
            self.factor(&mut m)?;
        }
        Ok(m)
    }

    fn term(&mut self, first: bool) -> Result<(Monomial, BigRational)> {
        match self.peek() {
            Some(b'x' | b'y' | b'q') => Ok((self.factors()?, BigRational::one())),
            _ => {
                let c = self.coeff(first)?;
                if self.eat("*") {
                    Ok((self.factors()?, c))
                } else {
                    Ok((Monomial::ONE, c))
                }
            }
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        let (m, c) = self.term(true)?;
        p.add_term(m, c);
        loop {
            if self.eat(" + ") {
                let (m, c) = self.term(false)?;
                p.add_term(m, c);
            } else if self.eat(" - ") {
                let (m, c) = self.term(false)?;
                p.add_term(m, -c);
            } else {
                return Ok(p);
            }
        }
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.poly()?;
    if p.pos != text.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses the output of [`canonical_string`] (or any text in its grammar).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = if p.eat("(") {
        let num = p.poly()?;
        if !p.eat(")/(") {
            return p.err("expected ')/('");
        }
        let den = p.poly()?;
        if !p.eat(")") {
            return p.err("expected ')'");
        }
        Scalar::new(num, den)?
    } else {
        Scalar::from_poly(p.poly()?)
    };
    if p.pos != text.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse_scalar(s)
    }
}

/// Parses a rational in the CLI form `p`, `-p` or `p/r`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let c = p.coeff(true)?;
    if p.pos != text.len() {
        return p.err("trailing input");
    }
    Ok(c)
}
