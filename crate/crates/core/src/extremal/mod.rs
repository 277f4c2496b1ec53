//! Extremal vectors `Ω_l` (highest) and `Φ_l` (lowest) of `V_m(x) ⊗ V_n(y)`,
//! the proportionality constant `α_l` in `f^(m+n-2l) Ω_l = α_l Φ_l`, and the
//! identities relating neighbouring extremal vectors under `e_0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::repmod::{
    act_tensor, act_word, eval_basis_action, highest_weight_kernel, Generator, GeneratorWord, TensorElement,
    TensorShape,
};
use crate::scalars::{q_binomial_poly, q_factorial, q_int, LaurentPoly, Scalar};

/// Lower bound of the coefficient products defining `Ω_l` and `Φ_l`.
///
/// `AsPrinted` starts the product at `j = 0`, so every coefficient carries
/// the factor `[n-l]/[m+1]` (resp. `[m-l]/[n+1]`) and `Ω_n`, `Φ_m` vanish.
/// `UnitLeading` starts at `j = 1`, giving leading coefficient 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    #[default]
    AsPrinted,
    UnitLeading,
}

impl Convention {
    fn start(self) -> i64 {
        match self {
            Convention::AsPrinted => 0,
            Convention::UnitLeading => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtremalKind {
    Omega,
    Phi,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalVector {
    pub kind: ExtremalKind,
    pub l: usize,
    pub convention: Convention,
    pub value: TensorElement,
    /// The closed-form coefficients vanish identically.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaValue {
    pub l: usize,
    #[serde(serialize_with = "ser_scalar")]
    pub value: Scalar,
}

pub(crate) fn ser_scalar<S: serde::Serializer>(s: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&s.to_string())
}

fn check_level(shape: &TensorShape, l: usize) -> Result<()> {
    if l > shape.m().min(shape.n()) {
        return Err(Error::OutOfRange(format!(
            "l = {l} exceeds min(m, n) = {}",
            shape.m().min(shape.n())
        )));
    }
    Ok(())
}

fn ratio_product(top: i64, bottom: i64, from: i64, to: i64) -> Scalar {
    // prod_{j=from..to} [top + j] / [bottom - j + 1]
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in from..=to {
        num = &num * &crate::scalars::q_int_poly(top + j);
        den = &den * &crate::scalars::q_int_poly(bottom - j + 1);
    }
    Scalar::new(num, den).expect("q-integer denominators are nonzero")
}

fn sign(i: i64) -> Scalar {
    if i % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// `c_{i,l-i} = (-1)^i q^(i(2l-n-i-1)) prod_j [n-l+j]/[m-j+1]`.
pub fn omega_coeff(m: usize, n: usize, l: usize, i: usize, conv: Convention) -> Scalar {
    let (m, n, l, i) = (m as i64, n as i64, l as i64, i as i64);
    let p = ratio_product(n - l, m, conv.start(), i);
    &(&sign(i) * &Scalar::q_pow((i * (2 * l - n - i - 1)) as i32)) * &p
}

/// `d_{i,l} = (-1)^i q^(i(-m+2l-i-1)) prod_j [m-l+j]/[n-j+1]`.
pub fn phi_coeff(m: usize, n: usize, l: usize, i: usize, conv: Convention) -> Scalar {
    let (m, n, l, i) = (m as i64, n as i64, l as i64, i as i64);
    let p = ratio_product(m - l, n, conv.start(), i);
    &(&sign(i) * &Scalar::q_pow((i * (-m + 2 * l - i - 1)) as i32)) * &p
}

/// `Ω_l = sum_i c_{i,l-i} v_i ⊗ w_(l-i)`.
pub fn omega(shape: &TensorShape, l: usize, conv: Convention) -> Result<ExtremalVector> {
    check_level(shape, l)?;
    let (m, n) = (shape.m(), shape.n());
    let value = TensorElement::from_coeffs(
        shape.clone(),
        (0..=l).map(|i| ((i, l - i), omega_coeff(m, n, l, i, conv))),
    );
    Ok(ExtremalVector {
        kind: ExtremalKind::Omega,
        l,
        convention: conv,
        degenerate: value.is_zero(),
        value,
    })
}

/// `Φ_l = sum_i d_{i,l} v_(m-l+i) ⊗ w_(n-i)`.
pub fn phi(shape: &TensorShape, l: usize, conv: Convention) -> Result<ExtremalVector> {
    check_level(shape, l)?;
    let (m, n) = (shape.m(), shape.n());
    let value = TensorElement::from_coeffs(
        shape.clone(),
        (0..=l).map(|i| ((m - l + i, n - i), phi_coeff(m, n, l, i, conv))),
    );
    Ok(ExtremalVector {
        kind: ExtremalKind::Phi,
        l,
        convention: conv,
        degenerate: value.is_zero(),
        value,
    })
}

/// `Ω_l`, or the kernel-oracle highest vector when the closed form vanishes.
pub fn omega_or_kernel(shape: &TensorShape, l: usize, conv: Convention) -> Result<TensorElement> {
    let o = omega(shape, l, conv)?;
    if !o.degenerate {
        return Ok(o.value);
    }
    highest_weight_kernel(shape, l)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Degenerate(format!("no highest vector at level {l}")))
}

/// `f^k` applied through the closed coproduct expansion
/// `Δf^k = sum_j q^(-j(k-j)) [k j] K^-j f^(k-j) ⊗ f^j`.
pub fn coproduct_f_power(k: usize, t: &TensorElement) -> TensorElement {
    let shape = t.shape().clone();
    let mut out = TensorElement::zero(shape.clone());
    for ((i, jj), c) in t.iter() {
        for j in 0..=k {
            let binom = q_binomial_poly(k as i64, j as i64).expect("0 <= j <= k");
            let q = LaurentPoly::q_pow(-((j * (k - j)) as i32));
            let mut coef = &binom * &q;
            // left leg: K^-j f^(k-j) v_i
            let mut li = Some(i);
            for _ in 0..k - j {
                li = li.and_then(|a| {
                    eval_basis_action(Generator::F1, &shape.left, a).map(|(b, p)| {
                        coef = &coef * &p;
                        b
                    })
                });
            }
            for _ in 0..j {
                li = li.and_then(|a| {
                    eval_basis_action(Generator::K1Inv, &shape.left, a).map(|(b, p)| {
                        coef = &coef * &p;
                        b
                    })
                });
            }
            // right leg: f^j w_jj
            let mut rj = Some(jj);
            for _ in 0..j {
                rj = rj.and_then(|a| {
                    eval_basis_action(Generator::F1, &shape.right, a).map(|(b, p)| {
                        coef = &coef * &p;
                        b
                    })
                });
            }
            if let (Some(a), Some(b)) = (li, rj) {
                out.add_to(a, b, &c.mul_poly(&coef));
            }
        }
    }
    out
}

/// `α_l` from `f^(m+n-2l) Ω_l = α_l Φ_l` by direct operator application.
///
/// The ratio is read off the `v_(m-l) ⊗ w_n` component and then checked on
/// every other component.
pub fn alpha_direct(shape: &TensorShape, l: usize, conv: Convention) -> Result<AlphaValue> {
    let (m, n) = (shape.m(), shape.n());
    let om = omega(shape, l, conv)?;
    let ph = phi(shape, l, conv)?;
    if ph.degenerate {
        return Err(Error::Degenerate(format!(
            "Φ_{l} vanishes for (m, n) = ({m}, {n})"
        )));
    }
    let image = act_word(&GeneratorWord::power(Generator::F1, m + n - 2 * l), &om.value);
    let value = image.coeff(m - l, n).checked_div(&ph.value.coeff(m - l, n))?;
    if image != ph.value.scale(&value) {
        return Err(Error::NotProportional(format!(
            "f^{} Ω_{l} against Φ_{l}",
            m + n - 2 * l
        )));
    }
    Ok(AlphaValue { l, value })
}

fn qfact(r: i64) -> Scalar {
    q_factorial(r).expect("nonnegative argument")
}

/// `α_l` from the explicit coefficient sum
/// `q^(-l(n-l)) [n+1]/[m-l] sum_i (-1)^i q^-i [m+n-2l]![m-l]![n]! /
/// ([m-l-i]![n-l+i]![i]![l-i]!) prod_{j=0..i} [n-l+j]/[m-j+1]`.
pub fn alpha_sum(m: usize, n: usize, l: usize) -> Result<AlphaValue> {
    if l > m.min(n) || l >= m {
        return Err(Error::OutOfRange(format!(
            "alpha_sum needs l < m and l <= n, got (m, n, l) = ({m}, {n}, {l})"
        )));
    }
    let (mi, ni, li) = (m as i64, n as i64, l as i64);
    let top = &(&qfact(mi + ni - 2 * li) * &qfact(mi - li)) * &qfact(ni);
    let mut sum = Scalar::zero();
    for i in 0..=li.min(mi - li) {
        let den = &(&(&qfact(mi - li - i) * &qfact(ni - li + i)) * &qfact(i)) * &qfact(li - i);
        let term = &(&(&sign(i) * &Scalar::q_pow(-i as i32)) * &top.checked_div(&den)?)
            * &ratio_product(ni - li, mi, 0, i);
        sum = &sum + &term;
    }
    let pre = &Scalar::q_pow((-li * (ni - li)) as i32) * &q_int(ni + 1).checked_div(&q_int(mi - li))?;
    Ok(AlphaValue {
        l,
        value: &pre * &sum,
    })
}

/// `α_l = q^((m-n)l) [n][n+1][m+n]!/([m][m+1]) prod_{i=1..l} [n-i]/[m-i]
/// prod_{i=1..2l} 1/[m+n-2l+i]`.
pub fn alpha_closed(m: usize, n: usize, l: usize) -> Result<AlphaValue> {
    if n < 1 || n > m || l > n {
        return Err(Error::OutOfRange(format!(
            "alpha_closed needs 1 <= n <= m and l <= n, got (m, n, l) = ({m}, {n}, {l})"
        )));
    }
    let (mi, ni, li) = (m as i64, n as i64, l as i64);
    let mut num = &(&q_int(ni) * &q_int(ni + 1)) * &qfact(mi + ni);
    let mut den = &q_int(mi) * &q_int(mi + 1);
    for i in 1..=li {
        num = &num * &q_int(ni - i);
        den = &den * &q_int(mi - i);
    }
    for i in 1..=2 * li {
        den = &den * &q_int(mi + ni - 2 * li + i);
    }
    let value = &Scalar::q_pow(((mi - ni) * li) as i32) * &num.checked_div(&den)?;
    Ok(AlphaValue { l, value })
}

/// `α_l / α_(l-1) = [n-l]/[m-l] q^(m-n) / ([m+n-2l+1][m+n-2l+2])`.
pub fn alpha_ratio_formula(m: usize, n: usize, l: usize) -> Result<Scalar> {
    let (mi, ni, li) = (m as i64, n as i64, l as i64);
    let num = &q_int(ni - li) * &Scalar::q_pow((mi - ni) as i32);
    let den = &(&q_int(mi - li) * &q_int(mi + ni - 2 * li + 1)) * &q_int(mi + ni - 2 * li + 2);
    num.checked_div(&den)
}

/// Both sides of an identity between tensor elements.
#[derive(Clone, Debug, Serialize)]
pub struct VectorIdentity {
    pub lhs: TensorElement,
    pub rhs: TensorElement,
    pub holds: bool,
}

impl VectorIdentity {
    fn new(lhs: TensorElement, rhs: TensorElement) -> Self {
        let holds = lhs == rhs;
        VectorIdentity { lhs, rhs, holds }
    }
}

fn step_factor(a: &Scalar, b: &Scalar, exp_a: i64, exp_b: i64) -> Scalar {
    // q^-1 (a q^exp_a - b q^exp_b)
    let t = a * &Scalar::q_pow(exp_a as i32) - b * &Scalar::q_pow(exp_b as i32);
    &Scalar::q_pow(-1) * &t
}

/// `e^2 e_0 Ω_l = [2][n-l] q^-1 (x q^m - y q^(-n+2l-2)) Ω_(l-1)` with `e = e_1`.
pub fn omega_step(shape: &TensorShape, l: usize, conv: Convention) -> Result<VectorIdentity> {
    if l == 0 {
        return Err(Error::OutOfRange("need l >= 1".into()));
    }
    let (m, n) = (shape.m() as i64, shape.n() as i64);
    let li = l as i64;
    let om = omega(shape, l, conv)?;
    let om_prev = omega(shape, l - 1, conv)?;
    let lhs = act_word(
        &GeneratorWord::new(vec![Generator::E1, Generator::E1, Generator::E0]),
        &om.value,
    );
    let factor = &(&q_int(2) * &q_int(n - li)) * &step_factor(&Scalar::x(), &Scalar::y(), m, -n + 2 * li - 2);
    Ok(VectorIdentity::new(lhs, om_prev.value.scale(&factor)))
}

/// `e_0 Φ_l = [m-l] q^-1 (x q^n - y q^(-m+2l-2)) Φ_(l-1)`.
pub fn phi_step(shape: &TensorShape, l: usize, conv: Convention) -> Result<VectorIdentity> {
    if l == 0 {
        return Err(Error::OutOfRange("need l >= 1".into()));
    }
    let (m, n) = (shape.m() as i64, shape.n() as i64);
    let li = l as i64;
    let ph = phi(shape, l, conv)?;
    let ph_prev = phi(shape, l - 1, conv)?;
    let lhs = act_tensor(Generator::E0, &ph.value);
    let factor = &q_int(m - li) * &step_factor(&Scalar::x(), &Scalar::y(), n, -m + 2 * li - 2);
    Ok(VectorIdentity::new(lhs, ph_prev.value.scale(&factor)))
}

pub fn omega_step_check(shape: &TensorShape, l: usize) -> Result<bool> {
    Ok(omega_step(shape, l, Convention::AsPrinted)?.holds)
}

pub fn phi_step_check(shape: &TensorShape, l: usize) -> Result<bool> {
    Ok(phi_step(shape, l, Convention::AsPrinted)?.holds)
}

/// Coefficients of `e_0 Ω_l = c_(l-1) f^2 Ω_(l-1) + c_l f Ω_l + c_(l+1) Ω_(l+1)`.
#[derive(Clone, Debug, Serialize)]
pub struct E0Decomposition {
    #[serde(serialize_with = "ser_scalar")]
    pub c_prev: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub c_same: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub c_next: Scalar,
    /// `[n-l] q^-1 (x q^m - y q^(-n+2l-2)) / ([m+n-2l+1][m+n-2l+2])`
    #[serde(serialize_with = "ser_scalar")]
    pub c_prev_formula: Scalar,
}

impl E0Decomposition {
    pub fn matches_formula(&self) -> bool {
        self.c_prev == self.c_prev_formula
    }
}

/// Solves for the three-term decomposition of `e_0 Ω_l`. A degenerate
/// `Ω_(l+1)` is replaced by the kernel-oracle highest vector.
pub fn decompose_e0_omega(shape: &TensorShape, l: usize, conv: Convention) -> Result<E0Decomposition> {
    let (m, n) = (shape.m(), shape.n());
    if l == 0 || l >= n || n > m {
        return Err(Error::OutOfRange(format!(
            "decomposition needs 1 <= l < n <= m, got (m, n, l) = ({m}, {n}, {l})"
        )));
    }
    let om = omega(shape, l, conv)?.value;
    let target = act_tensor(Generator::E0, &om);
    let f2_prev = act_word(
        &GeneratorWord::power(Generator::F1, 2),
        &omega(shape, l - 1, conv)?.value,
    );
    let f_same = act_tensor(Generator::F1, &om);
    let next = if l < m.min(n) {
        omega_or_kernel(shape, l + 1, conv)?
    } else {
        TensorElement::zero(shape.clone())
    };
    let basis = shape.level_basis(l + 1);
    let mut columns = vec![f2_prev.coords(&basis), f_same.coords(&basis)];
    let with_next = !next.is_zero();
    if with_next {
        columns.push(next.coords(&basis));
    }
    let sol = linalg::solve_columns(&columns, &target.coords(&basis))?;
    let (mi, ni, li) = (m as i64, n as i64, l as i64);
    let c_prev_formula = (&q_int(ni - li) * &step_factor(&Scalar::x(), &Scalar::y(), mi, -ni + 2 * li - 2))
        .checked_div(&(&q_int(mi + ni - 2 * li + 1) * &q_int(mi + ni - 2 * li + 2)))?;
    Ok(E0Decomposition {
        c_prev: sol[0].clone(),
        c_same: sol[1].clone(),
        c_next: if with_next { sol[2].clone() } else { Scalar::zero() },
        c_prev_formula,
    })
}

#[cfg(test)]
mod tests;
