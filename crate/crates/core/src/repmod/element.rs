use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ModuleShape, Param, TensorShape};
use crate::error::{Error, Result};
use crate::scalars::{canonical_string, parse_scalar, LaurentPoly, Scalar};

/// Element of a single module `V_m(param)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    shape: ModuleShape,
    coeffs: BTreeMap<usize, Scalar>,
}

impl ModuleElement {
    pub fn zero(shape: ModuleShape) -> Self {
        ModuleElement {
            shape,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(shape: ModuleShape, i: usize) -> Self {
        let mut v = ModuleElement::zero(shape);
        v.add_to(i, &Scalar::one());
        v
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c v_i`; out-of-range indices are dropped.
    pub fn add_to(&mut self, i: usize, c: &Scalar) {
        if i > self.shape.m || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub(super) fn map_basis<F>(&self, f: F) -> ModuleElement
    where
        F: Fn(usize) -> Option<(usize, LaurentPoly)>,
    {
        let mut out = ModuleElement::zero(self.shape.clone());
        for (i, c) in &self.coeffs {
            if let Some((k, p)) = f(*i) {
                out.add_to(k, &c.mul_poly(&p));
            }
        }
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_to(*i, &-c);
        }
        out
    }
}

/// Element of `V_m(a) ⊗ V_n(b)`, stored sparsely by basis pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    shape: TensorShape,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl TensorElement {
    pub fn zero(shape: TensorShape) -> Self {
        TensorElement {
            shape,
            coeffs: BTreeMap::new(),
        }
    }

    /// `v_i ⊗ w_j`
    pub fn basis(shape: TensorShape, i: usize, j: usize) -> Self {
        let mut t = TensorElement::zero(shape);
        t.add_to(i, j, &Scalar::one());
        t
    }

    pub fn from_coeffs<I>(shape: TensorShape, it: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), Scalar)>,
    {
        let mut t = TensorElement::zero(shape);
        for ((i, j), c) in it {
            t.add_to(i, j, &c);
        }
        t
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in ascending `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c v_i ⊗ w_j`; out-of-range indices are dropped.
    pub fn add_to(&mut self, i: usize, j: usize, c: &Scalar) {
        if i > self.shape.m() || j > self.shape.n() || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_to(k.0, k.1, c);
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_to(k.0, k.1, &-c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(self.shape.clone());
        }
        TensorElement {
            shape: self.shape.clone(),
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    /// `K_1`-weight `(m - 2i) + (n - 2j)` when all components share it.
    pub fn k1_weight(&self) -> Option<i64> {
        let (m, n) = (self.shape.m() as i64, self.shape.n() as i64);
        let mut ws = self
            .coeffs
            .keys()
            .map(|&(i, j)| (m - 2 * i as i64) + (n - 2 * j as i64));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Coefficient vector over the given basis pairs.
    pub fn coords(&self, basis: &[(usize, usize)]) -> Vec<Scalar> {
        basis.iter().map(|&(i, j)| self.coeff(i, j)).collect()
    }

    /// The scalar `r` with `self = r * other`, if one exists.
    pub fn ratio_to(&self, other: &TensorElement) -> Option<Scalar> {
        if other.is_zero() {
            return self.is_zero().then(Scalar::zero);
        }
        let (&k, c) = other.coeffs.iter().next()?;
        let r = self.coeff(k.0, k.1).checked_div(c).ok()?;
        (self == &other.scale(&r)).then_some(r)
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            m: self.shape.m(),
            n: self.shape.n(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| CoeffJson {
                    i,
                    j,
                    value: canonical_string(c),
                })
                .collect(),
        }
    }

    /// Reads the JSON form into `V_m(x) ⊗ V_n(y)`.
    pub fn from_json(json: &TensorJson) -> Result<Self> {
        let shape = TensorShape::new(json.m, json.n);
        let mut t = TensorElement::zero(shape);
        for c in &json.coeffs {
            if c.i > json.m || c.j > json.n {
                return Err(Error::OutOfRange(format!("index ({}, {})", c.i, c.j)));
            }
            t.add_to(c.i, c.j, &parse_scalar(&c.value)?);
        }
        Ok(t)
    }

    /// Same coefficients viewed in another tensor shape of equal dimensions.
    pub fn with_params(&self, left: Param, right: Param) -> TensorElement {
        let mut shape = self.shape.clone();
        shape.left.param = left;
        shape.right.param = right;
        TensorElement {
            shape,
            coeffs: self.coeffs.clone(),
        }
    }
}

/// JSON form `{"m", "n", "coeffs": [{"i", "j", "value"}]}`, entries sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl std::fmt::Display for TensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| format!("({c}) v{i}⊗w{j}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
