//! Laurent polynomials over `Z`, used where coefficient growth dominates:
//! fraction-free elimination and integer-coefficient products.

use std::collections::{BTreeMap, HashMap};
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Monomial};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IPoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::ONE, BigInt::one());
        IPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` unless every coefficient is an integer.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return None;
            }
            terms.insert(*m, c.numer().clone());
        }
        Some(IPoly { terms })
    }

    /// `s * p` as an integer polynomial, `s` the lcm of the denominators.
    pub fn scaled_from_laurent(p: &LaurentPoly) -> (Self, BigInt) {
        let s = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p
            .terms()
            .map(|(m, c)| (*m, c.numer() * (&s / c.denom())))
            .collect();
        (IPoly { terms }, s)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, BigRational::from_integer(c.clone()))),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IPoly {
        if c.is_zero() {
            return IPoly::default();
        }
        IPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &IPoly) -> IPoly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
            }
        }
        IPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn sub(&self, other: &IPoly) -> IPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn bounds(&self) -> Option<(Monomial, Monomial)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), m| {
            (
                Monomial {
                    x: lo.x.min(m.x),
                    y: lo.y.min(m.y),
                    q: lo.q.min(m.q),
                },
                Monomial {
                    x: hi.x.max(m.x),
                    y: hi.y.max(m.y),
                    q: hi.q.max(m.q),
                },
            )
        }))
    }

    /// Exact quotient in `Z[x^±, y^±, q^±]`, or `None`.
    pub fn div_exact(&self, divisor: &IPoly) -> Option<IPoly> {
        let (lm, lc) = divisor.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))?;
        if self.is_zero() {
            return Some(IPoly::default());
        }
        let (alo, ahi) = self.bounds()?;
        let (dlo, dhi) = divisor.bounds()?;
        // every quotient monomial lies in this box
        let lo = Monomial {
            x: alo.x - dlo.x,
            y: alo.y - dlo.y,
            q: alo.q - dlo.q,
        };
        let hi = Monomial {
            x: ahi.x - dhi.x,
            y: ahi.y - dhi.y,
            q: ahi.q - dhi.q,
        };
        let inside = |t: Monomial| {
            lo.x <= t.x && t.x <= hi.x && lo.y <= t.y && t.y <= hi.y && lo.q <= t.q && t.q <= hi.q
        };
        let mut rem = self.clone();
        let mut quot = IPoly::default();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            let t = rm.mul(lm.inv());
            if !inside(t) {
                return None;
            }
            let (c, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(t), -(dc * &c));
            }
            quot.add_term(t, c);
        }
        Some(quot)
    }
}
