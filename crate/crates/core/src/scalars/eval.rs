use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A rational point `(q0, x0, y0)` with `q0` outside `{0, 1, -1}` and
/// `x0, y0` nonzero. Such a `q0` is never a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "rational_str")]
    pub q: BigRational,
    #[serde(with = "rational_str")]
    pub x: BigRational,
    #[serde(with = "rational_str")]
    pub y: BigRational,
}

impl Point {
    pub fn new(q: BigRational, x: BigRational, y: BigRational) -> Result<Self> {
        if q.is_zero() || q.is_one() || (-q.clone()).is_one() {
            return Err(Error::ForbiddenQ(q.to_string()));
        }
        if x.is_zero() {
            return Err(Error::ZeroParameter("x"));
        }
        if y.is_zero() {
            return Err(Error::ZeroParameter("y"));
        }
        Ok(Point { q, x, y })
    }

    pub fn from_ints(q: i64, x: i64, y: i64) -> Result<Self> {
        Point::new(
            BigRational::from_integer(q.into()),
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
        )
    }

    /// The default generic point `(2, 3, 5)`.
    pub fn generic() -> Self {
        Point::from_ints(2, 3, 5).unwrap()
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(q, x, y) = ({}, {}, {})", self.q, self.x, self.y)
    }
}

/// Exact value of `s` at a rational point.
pub fn specialize(s: &Scalar, point: &Point) -> Result<BigRational> {
    let den = s.den().eval(&point.q, &point.x, &point.y);
    if den.is_zero() {
        return Err(Error::Pole(point.to_string()));
    }
    Ok(s.num().eval(&point.q, &point.x, &point.y) / den)
}

/// Value at `q = x = y = 1`.
pub fn classical_limit(s: &Scalar) -> Result<BigRational> {
    let one = BigRational::one();
    let den = s.den().eval(&one, &one, &one);
    if den.is_zero() {
        return Err(Error::Pole("(q, x, y) = (1, 1, 1)".into()));
    }
    Ok(s.num().eval(&one, &one, &one) / den)
}

pub(crate) mod rational_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        crate::scalars::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
