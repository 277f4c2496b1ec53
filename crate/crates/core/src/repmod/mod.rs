//! Evaluation modules of `U_q(sl2-hat)` and their tensor products.
//!
//! `V_m` has basis `v_0..v_m` with
//! `K v_i = q^(m-2i) v_i`, `f v_i = [i+1] v_(i+1)`, `e v_i = [m+1-i] v_(i-1)`,
//! and out-of-range indices dropped. The affine generators act through the
//! evaluation map at the module's parameter, and on a tensor product through
//! the coproduct, each leg with its own parameter.

mod element;
mod relations;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::scalars::{q_int_poly, LaurentPoly, Monomial, Scalar};

pub use element::{CoeffJson, ModuleElement, TensorElement, TensorJson};
pub use relations::{check_relations, relations, Relation, RelationReport, RelationViolation};

/// Evaluation parameter of a module: a symbol or a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Param {
    X,
    Y,
    Value(#[serde(with = "crate::scalars::rational_str")] BigRational),
}

impl Param {
    pub fn poly(&self) -> LaurentPoly {
        match self {
            Param::X => LaurentPoly::x(),
            Param::Y => LaurentPoly::y(),
            Param::Value(r) => LaurentPoly::constant(r.clone()),
        }
    }

    pub fn inverse_poly(&self) -> LaurentPoly {
        match self {
            Param::X => LaurentPoly::monomial(Monomial::new(0, -1, 0)),
            Param::Y => LaurentPoly::monomial(Monomial::new(0, 0, -1)),
            Param::Value(r) => {
                assert!(!r.is_zero(), "evaluation parameter must be nonzero");
                LaurentPoly::constant(r.recip())
            }
        }
    }
}

/// `V_m` pulled back along `ev_param`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleShape {
    pub m: usize,
    pub param: Param,
}

impl ModuleShape {
    pub fn new(m: usize, param: Param) -> Self {
        ModuleShape { m, param }
    }

    pub fn dim(&self) -> usize {
        self.m + 1
    }
}

/// Which factor of `V_m ⊗ V_n` is evaluated at `x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Legs {
    /// `V_m(x) ⊗ V_n(y)`
    #[default]
    LeftX,
    /// `V_m(y) ⊗ V_n(x)`
    LeftY,
}

/// The tensor module `V_m(a) ⊗ V_n(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorShape {
    pub left: ModuleShape,
    pub right: ModuleShape,
}

impl TensorShape {
    /// `V_m(x) ⊗ V_n(y)`.
    pub fn new(m: usize, n: usize) -> Self {
        Self::with_legs(m, n, Legs::LeftX)
    }

    pub fn with_legs(m: usize, n: usize, legs: Legs) -> Self {
        let (a, b) = match legs {
            Legs::LeftX => (Param::X, Param::Y),
            Legs::LeftY => (Param::Y, Param::X),
        };
        TensorShape {
            left: ModuleShape::new(m, a),
            right: ModuleShape::new(n, b),
        }
    }

    pub fn m(&self) -> usize {
        self.left.m
    }

    pub fn n(&self) -> usize {
        self.right.m
    }

    /// Basis pairs `(i, j)` with `i + j = level`, ascending in `i`.
    pub fn level_basis(&self, level: usize) -> Vec<(usize, usize)> {
        let lo = level.saturating_sub(self.n());
        let hi = level.min(self.m());
        if lo > hi {
            return Vec::new();
        }
        (lo..=hi).map(|i| (i, level - i)).collect()
    }

    pub fn basis(&self) -> Vec<(usize, usize)> {
        (0..=self.m())
            .flat_map(|i| (0..=self.n()).map(move |j| (i, j)))
            .collect()
    }
}

/// Generators of `U_q(sl2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sl2Generator {
    E,
    F,
    K,
    KInv,
}

/// Generators of `U_q(sl2-hat)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    E0,
    E1,
    F0,
    F1,
    K0,
    K0Inv,
    K1,
    K1Inv,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::E0,
        Generator::E1,
        Generator::F0,
        Generator::F1,
        Generator::K0,
        Generator::K0Inv,
        Generator::K1,
        Generator::K1Inv,
    ];

    pub fn e(i: usize) -> Self {
        if i == 0 {
            Generator::E0
        } else {
            Generator::E1
        }
    }

    pub fn f(i: usize) -> Self {
        if i == 0 {
            Generator::F0
        } else {
            Generator::F1
        }
    }

    pub fn k(i: usize) -> Self {
        if i == 0 {
            Generator::K0
        } else {
            Generator::K1
        }
    }

    pub fn k_inv(i: usize) -> Self {
        if i == 0 {
            Generator::K0Inv
        } else {
            Generator::K1Inv
        }
    }

    /// Change of the `K_1`-weight `(m - 2i) + (n - 2j)` caused by this generator.
    pub fn k1_weight_shift(self) -> i64 {
        match self {
            Generator::E1 | Generator::F0 => 2,
            Generator::F1 | Generator::E0 => -2,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::E0 => "e0",
            Generator::E1 => "e1",
            Generator::F0 => "f0",
            Generator::F1 => "f1",
            Generator::K0 => "K0",
            Generator::K0Inv => "K0^-1",
            Generator::K1 => "K1",
            Generator::K1Inv => "K1^-1",
        }
    }
}

/// A product of affine generators, applied rightmost first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn new(gens: Vec<Generator>) -> Self {
        GeneratorWord(gens)
    }

    /// `g^k`
    pub fn power(g: Generator, k: usize) -> Self {
        GeneratorWord(vec![g; k])
    }

    /// Concatenation `self * other` (other acts first).
    pub fn then(mut self, other: GeneratorWord) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.0.iter().map(|g| g.name()).collect();
        f.write_str(&names.join(" "))
    }
}

/// Image of `v_i` in `V_m` under a finite-type generator: `None` when zero.
pub fn sl2_basis_action(g: Sl2Generator, m: usize, i: usize) -> Option<(usize, LaurentPoly)> {
    let (m_, i_) = (m as i64, i as i64);
    match g {
        Sl2Generator::K => Some((i, LaurentPoly::q_pow((m_ - 2 * i_) as i32))),
        Sl2Generator::KInv => Some((i, LaurentPoly::q_pow((2 * i_ - m_) as i32))),
        Sl2Generator::F => (i < m).then(|| (i + 1, q_int_poly(i_ + 1))),
        Sl2Generator::E => (i > 0).then(|| (i - 1, q_int_poly(m_ + 1 - i_))),
    }
}

/// Image of `v_i` under an affine generator acting through the evaluation map.
pub fn eval_basis_action(g: Generator, shape: &ModuleShape, i: usize) -> Option<(usize, LaurentPoly)> {
    let m = shape.m;
    match g {
        Generator::E1 => sl2_basis_action(Sl2Generator::E, m, i),
        Generator::F1 => sl2_basis_action(Sl2Generator::F, m, i),
        Generator::K1 | Generator::K0Inv => sl2_basis_action(Sl2Generator::K, m, i),
        Generator::K1Inv | Generator::K0 => sl2_basis_action(Sl2Generator::KInv, m, i),
        // e0 -> q^-1 x f
        Generator::E0 => sl2_basis_action(Sl2Generator::F, m, i)
            .map(|(k, c)| (k, &(&c * &LaurentPoly::q_pow(-1)) * &shape.param.poly())),
        // f0 -> q x^-1 e
        Generator::F0 => sl2_basis_action(Sl2Generator::E, m, i)
            .map(|(k, c)| (k, &(&c * &LaurentPoly::q()) * &shape.param.inverse_poly())),
    }
}

/// Finite-type action on a single module.
pub fn act_sl2(g: Sl2Generator, v: &ModuleElement) -> ModuleElement {
    v.map_basis(|i| sl2_basis_action(g, v.shape().m, i))
}

/// Affine action on a single evaluation module.
pub fn act_eval(g: Generator, v: &ModuleElement) -> ModuleElement {
    let shape = v.shape().clone();
    v.map_basis(|i| eval_basis_action(g, &shape, i))
}

/// Affine action on `V_m(a) ⊗ V_n(b)` through the coproduct:
/// `Δe_i = e_i ⊗ K_i + 1 ⊗ e_i`, `Δf_i = f_i ⊗ 1 + K_i^-1 ⊗ f_i`,
/// `ΔK = K ⊗ K`.
pub fn act_tensor(g: Generator, t: &TensorElement) -> TensorElement {
    let shape = t.shape().clone();
    let left = |gen: Generator, i: usize| eval_basis_action(gen, &shape.left, i);
    let right = |gen: Generator, j: usize| eval_basis_action(gen, &shape.right, j);
    let mut out = TensorElement::zero(shape.clone());
    for ((i, j), c) in t.iter() {
        let mut push = |a: Option<(usize, LaurentPoly)>, b: Option<(usize, LaurentPoly)>| {
            if let (Some((i2, ca)), Some((j2, cb))) = (a, b) {
                out.add_to(i2, j2, &c.mul_poly(&(&ca * &cb)));
            }
        };
        match g {
            Generator::E0 | Generator::E1 => {
                let k = if g == Generator::E0 {
                    Generator::K0
                } else {
                    Generator::K1
                };
                push(left(g, i), right(k, j));
                push(Some((i, LaurentPoly::one())), right(g, j));
            }
            Generator::F0 | Generator::F1 => {
                let kinv = if g == Generator::F0 {
                    Generator::K0Inv
                } else {
                    Generator::K1Inv
                };
                push(left(g, i), Some((j, LaurentPoly::one())));
                push(left(kinv, i), right(g, j));
            }
            _ => push(left(g, i), right(g, j)),
        }
    }
    out
}

/// Applies a word, rightmost generator first.
pub fn act_word(w: &GeneratorWord, t: &TensorElement) -> TensorElement {
    w.0.iter().rev().fold(t.clone(), |acc, &g| act_tensor(g, &acc))
}

/// Kernel of `e_1` on the span of `{v_i ⊗ w_(l-i)}`.
///
/// For `l <= min(m, n)` the kernel is one-dimensional: the highest-weight
/// vector of the summand `V_(m+n-2l)`.
pub fn highest_weight_kernel(shape: &TensorShape, l: usize) -> Vec<TensorElement> {
    let source = shape.level_basis(l);
    let target = if l == 0 {
        Vec::new()
    } else {
        shape.level_basis(l - 1)
    };
    let images: Vec<TensorElement> = source
        .iter()
        .map(|&(i, j)| act_tensor(Generator::E1, &TensorElement::basis(shape.clone(), i, j)))
        .collect();
    let rows: Vec<Vec<Scalar>> = target
        .iter()
        .map(|&(i, j)| images.iter().map(|im| im.coeff(i, j)).collect())
        .collect();
    let kernel = if rows.is_empty() {
        (0..source.len())
            .map(|k| {
                let mut v = vec![Scalar::zero(); source.len()];
                v[k] = Scalar::one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&rows, source.len())
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut t = TensorElement::zero(shape.clone());
            for (&(i, j), c) in source.iter().zip(v) {
                t.add_to(i, j, &c);
            }
            t
        })
        .collect()
}

#[cfg(test)]
mod tests;
