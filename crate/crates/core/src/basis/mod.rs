//! The vectors `φ_(l,j) = e_0^(l-j) f^j Ω_0`, their coefficient matrices
//! `(Δ_l)` and determinants, and the bases `Δ` and `Λ` of `V_m(x) ⊗ V_n(y)`
//! together with their genericity criterion.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::ser_scalar;
use crate::identities::product_expansion_check;
use crate::linalg;
use crate::repmod::{act_word, Generator, GeneratorWord, TensorElement, TensorShape};
use crate::scalars::{q_binomial, q_factorial, q_int, specialize, LaurentPoly, Monomial, Point, Scalar};

/// Scaling of the seed vector `Ω_0` (resp. `Φ_0`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `Ω_0 = [n]/[m+1] v_0 ⊗ w_0`, `Φ_0 = [m]/[n+1] v_m ⊗ w_n`.
    Paper,
    /// `Ω_0 = v_0 ⊗ w_0`, `Φ_0 = v_m ⊗ w_n`.
    #[default]
    Unit,
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Normalization::Paper),
            "unit" => Ok(Normalization::Unit),
            _ => Err(Error::OutOfRange(format!("unknown normalization {s:?}"))),
        }
    }
}

fn check_mn(m: usize, n: usize) -> Result<()> {
    if n > m {
        return Err(Error::OutOfRange(format!(
            "n = {n} exceeds m = {m}; swap the factors explicitly"
        )));
    }
    Ok(())
}

fn check_mnl(m: usize, n: usize, l: usize) -> Result<()> {
    check_mn(m, n)?;
    if l > n {
        return Err(Error::OutOfRange(format!("l = {l} exceeds n = {n}")));
    }
    Ok(())
}

fn seed_factor(top: usize, bottom: usize, norm: Normalization) -> Scalar {
    match norm {
        Normalization::Paper => q_int(top as i64)
            .checked_div(&q_int(bottom as i64 + 1))
            .expect("[k+1] is nonzero"),
        Normalization::Unit => Scalar::one(),
    }
}

pub fn omega0(m: usize, n: usize, norm: Normalization) -> TensorElement {
    TensorElement::basis(TensorShape::new(m, n), 0, 0).scale(&seed_factor(n, m, norm))
}

pub fn phi0(m: usize, n: usize, norm: Normalization) -> TensorElement {
    TensorElement::basis(TensorShape::new(m, n), m, n).scale(&seed_factor(m, n, norm))
}

/// `e_0^(l-j) f^j Ω_0`
pub fn phi_lj(m: usize, n: usize, l: usize, j: usize, norm: Normalization) -> Result<TensorElement> {
    check_mnl(m, n, l)?;
    if j > l {
        return Err(Error::OutOfRange(format!("j = {j} exceeds l = {l}")));
    }
    let word = GeneratorWord::power(Generator::E0, l - j).then(GeneratorWord::power(Generator::F1, j));
    Ok(act_word(&word, &omega0(m, n, norm)))
}

/// `f_0^(l-j) e^j Φ_0`
pub fn varphi_lj(m: usize, n: usize, l: usize, j: usize, norm: Normalization) -> Result<TensorElement> {
    check_mnl(m, n, l)?;
    if j > l {
        return Err(Error::OutOfRange(format!("j = {j} exceeds l = {l}")));
    }
    let word = GeneratorWord::power(Generator::F0, l - j).then(GeneratorWord::power(Generator::E1, j));
    Ok(act_word(&word, &phi0(m, n, norm)))
}

/// `(Δ_l)`: row `j` holds the coefficients of `φ_(l,j)` on `v_i ⊗ w_(l-i)`,
/// columns by ascending `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffMatrix {
    pub l: usize,
    #[serde(serialize_with = "ser_matrix")]
    pub entries: Vec<Vec<Scalar>>,
}

fn ser_matrix<S: serde::Serializer>(rows: &[Vec<Scalar>], ser: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect();
    text.serialize(ser)
}

pub fn delta_matrix(m: usize, n: usize, l: usize, norm: Normalization) -> Result<CoeffMatrix> {
    check_mnl(m, n, l)?;
    let entries = (0..=l)
        .map(|j| {
            let v = phi_lj(m, n, l, j, norm)?;
            Ok((0..=l).map(|i| v.coeff(i, l - i)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(CoeffMatrix { l, entries })
}

/// `γ_(l,0)^(l-i,i) = x^(l-i) y^i [l]! q^-l q^((l-i)(i-n))` (unit normalization).
pub fn gamma_top_closed(n: usize, l: usize, i: usize) -> Scalar {
    let (n, l, i) = (n as i64, l as i64, i as i64);
    let mono = Monomial {
        x: (l - i) as i32,
        y: i as i32,
        q: (-l + (l - i) * (i - n)) as i32,
    };
    &Scalar::monomial(mono) * &q_factorial(l).expect("l >= 0")
}

/// Both recursions linking `(Δ_l)` to `(Δ_(l+1))`:
/// `γ_(l+1,0)^(i,l+1-i) = y q^-1 [l-i+1] γ_(l,0)^(i,l-i) + x q^(-n+2l-2i+1) [i] γ_(l,0)^(i-1,l+1-i)`
/// and, for `j >= 1`,
/// `γ_(l+1,j)^(i,l-i+1) = q^(-m+2i) [l-i+1] γ_(l,j-1)^(i,l-i) + [i] γ_(l,j-1)^(i-1,l-i+1)`.
pub fn gamma_recursion_check(m: usize, n: usize, l: usize, norm: Normalization) -> Result<bool> {
    if l >= n {
        return Err(Error::OutOfRange(format!("need l < n, got l = {l}, n = {n}")));
    }
    let a = delta_matrix(m, n, l, norm)?.entries;
    let b = delta_matrix(m, n, l + 1, norm)?.entries;
    let (mi, ni, li) = (m as i64, n as i64, l as i64);
    let prev = |j: usize, i: i64| -> Scalar {
        if i < 0 || i > li {
            Scalar::zero()
        } else {
            a[j][i as usize].clone()
        }
    };
    for i in 0..=li + 1 {
        let top = &(&(&Scalar::y() * &Scalar::q_pow(-1)) * &q_int(li - i + 1)) * &prev(0, i)
            + &(&(&Scalar::x() * &Scalar::q_pow((-ni + 2 * li - 2 * i + 1) as i32)) * &q_int(i))
                * &prev(0, i - 1);
        if b[0][i as usize] != top {
            return Ok(false);
        }
        for (j, row) in b.iter().enumerate().skip(1) {
            let rhs = &(&Scalar::q_pow((-mi + 2 * i) as i32) * &q_int(li - i + 1)) * &prev(j - 1, i)
                + &q_int(i) * &prev(j - 1, i - 1);
            if row[i as usize] != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn det_exact(mat: &CoeffMatrix) -> Scalar {
    linalg::det(&mat.entries)
}

/// `y - x q^k`
pub fn linear_factor(k: i64) -> LaurentPoly {
    LaurentPoly::y()
        - LaurentPoly::term(
            Monomial {
                x: 1,
                y: 0,
                q: k as i32,
            },
            BigRational::one(),
        )
}

/// The `x, y`-dependent part `prod_{j=0..l} (y - x q^(-m-n+2j))^(l+1-j)`.
pub fn det_xy_part(m: usize, n: usize, l: usize) -> LaurentPoly {
    let s = (m + n) as i64;
    (0..=l as i64).fold(LaurentPoly::one(), |acc, j| {
        &acc * &linear_factor(-s + 2 * j).pow((l as i64 + 1 - j) as u32)
    })
}

/// `q^(-(l+1)(l+2)/2) prod_{j=1..l+1} [j]!`
pub fn det_q_part(l: usize) -> Scalar {
    let l = l as i64;
    let fact = (1..=l + 1).fold(Scalar::one(), |acc, j| &acc * &q_factorial(j).expect("j >= 1"));
    &Scalar::q_pow((-(l + 1) * (l + 2) / 2) as i32) * &fact
}

/// `|Δ_(l+1)|` as displayed, prefactor `[n]/[m+1]` included.
pub fn det_closed_form(m: usize, n: usize, l: usize) -> Result<Scalar> {
    if l >= n {
        return Err(Error::OutOfRange(format!("need l < n, got l = {l}, n = {n}")));
    }
    check_mn(m, n)?;
    let pre = q_int(n as i64).checked_div(&q_int(m as i64 + 1))?;
    Ok(&(&pre * &det_q_part(l)) * &Scalar::from_poly(det_xy_part(m, n, l)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub factor: String,
    pub multiplicity: u32,
}

/// `|Δ_(l+1)|` compared with its closed form.
#[derive(Clone, Debug, Serialize)]
pub struct DeterminantReport {
    pub m: usize,
    pub n: usize,
    /// Size index of the determinant, `|Δ_(l+1)|`.
    pub l: usize,
    pub normalization: Normalization,
    #[serde(serialize_with = "ser_scalar")]
    pub det: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub closed_form: Scalar,
    /// `det` divided by the q-power, factorial product and `x, y` part.
    #[serde(serialize_with = "ser_scalar")]
    pub prefactor: Scalar,
    /// The displayed `[n]/[m+1]`.
    #[serde(serialize_with = "ser_scalar")]
    pub printed_prefactor: Scalar,
    /// `prefactor` is `prod_{j=1..l+1} [j]!` times the seed factor to the
    /// power `l + 2`, i.e. the factorial product enters squared.
    pub factorial_squared: bool,
    /// Multiplicities of `y - x q^k` found in `det` by exact division.
    pub factored: Vec<Factor>,
    /// `prefactor` is free of `x, y` and every multiplicity is `l + 1 - j`.
    pub structure_matches: bool,
}

fn multiplicity(num: &LaurentPoly, factor: &LaurentPoly) -> u32 {
    let mut k = 0;
    let mut cur = num.clone();
    while let Some(q) = cur.div_exact(factor) {
        if cur.is_zero() {
            break;
        }
        cur = q;
        k += 1;
    }
    k
}

pub fn determinant_report(m: usize, n: usize, l: usize, norm: Normalization) -> Result<DeterminantReport> {
    let det = det_exact(&delta_matrix(m, n, l + 1, norm)?);
    determinant_report_with(m, n, l, norm, det)
}

/// `|Δ_l|` for `l = 0..=n`, each computed once.
pub fn determinant_chain(m: usize, n: usize, norm: Normalization) -> Result<Vec<Scalar>> {
    (0..=n)
        .map(|l| Ok(det_exact(&delta_matrix(m, n, l, norm)?)))
        .collect()
}

/// As [`determinant_report`], for an already computed `det = |Δ_(l+1)|`.
pub fn determinant_report_with(
    m: usize,
    n: usize,
    l: usize,
    norm: Normalization,
    det: Scalar,
) -> Result<DeterminantReport> {
    let closed_form = det_closed_form(m, n, l)?;
    let structural = &det_q_part(l) * &Scalar::from_poly(det_xy_part(m, n, l));
    let prefactor = det.checked_div(&structural)?;
    let s = (m + n) as i64;
    let mut factored = vec![Factor {
        factor: prefactor.to_string(),
        multiplicity: 1,
    }];
    let mut mult_ok = true;
    for j in 0..=l as i64 {
        let f = linear_factor(-s + 2 * j);
        let k = multiplicity(det.num(), &f);
        mult_ok &= k == (l as i64 + 1 - j) as u32;
        factored.push(Factor {
            factor: f.to_string(),
            multiplicity: k,
        });
    }
    let fact = (1..=l as i64 + 1).fold(Scalar::one(), |acc, j| &acc * &q_factorial(j).expect("j >= 1"));
    let seed = seed_constant(m, n, l, norm);
    Ok(DeterminantReport {
        m,
        n,
        l,
        normalization: norm,
        printed_prefactor: q_int(n as i64).checked_div(&q_int(m as i64 + 1))?,
        factorial_squared: prefactor == &fact * &seed,
        structure_matches: mult_ok && !prefactor.involves_xy() && !prefactor.is_zero(),
        det,
        closed_form,
        prefactor,
        factored,
    })
}

/// Contribution of the seed scaling to `|Δ_(l+1)|`: `([n]/[m+1])^(l+2)`
/// under `Normalization::Paper`, 1 under `Normalization::Unit`.
pub fn seed_constant(m: usize, n: usize, l: usize, norm: Normalization) -> Scalar {
    seed_factor(n, m, norm)
        .pow(l as i32 + 2)
        .expect("seed factor is nonzero")
}

/// `c = (y - x q^(-m-n+2l)) q^-(l+1) sum_{i=0..l} (-1)^i [l i] x^i y^(l-i) q^(i(l-1)) q^(-i(m+n))`
pub fn inductive_c(m: usize, n: usize, l: usize) -> Scalar {
    let s = (m + n) as i64;
    let li = l as i64;
    let mut sum = Scalar::zero();
    for i in 0..=li {
        let mono = Monomial {
            x: i as i32,
            y: (li - i) as i32,
            q: (i * (li - 1) - i * s) as i32,
        };
        let t = &q_binomial(li, i).expect("0 <= i <= l") * &Scalar::monomial(mono);
        sum = if i % 2 == 0 { &sum + &t } else { &sum - &t };
    }
    &(&Scalar::from_poly(linear_factor(-s + 2 * li)) * &Scalar::q_pow(-(li as i32) - 1)) * &sum
}

/// `|Δ_(l+1)| / (c |Δ_l|)`, with the extra seed factor of
/// `Normalization::Paper` divided out.
pub fn inductive_ratio(m: usize, n: usize, l: usize, norm: Normalization) -> Result<Scalar> {
    if l >= n {
        return Err(Error::OutOfRange(format!("need l < n, got l = {l}, n = {n}")));
    }
    let next = det_exact(&delta_matrix(m, n, l + 1, norm)?);
    let cur = det_exact(&delta_matrix(m, n, l, norm)?);
    inductive_ratio_of(m, n, l, norm, &next, &cur)
}

/// `next / (c cur)` for given `next = |Δ_(l+1)|`, `cur = |Δ_l|`.
pub fn inductive_ratio_of(
    m: usize,
    n: usize,
    l: usize,
    norm: Normalization,
    next: &Scalar,
    cur: &Scalar,
) -> Result<Scalar> {
    let den = &(&inductive_c(m, n, l) * cur) * &seed_factor(n, m, norm);
    next.checked_div(&den)
}

/// The sum inside `c` equals `prod_{j=0..l-1} (y - x q^(-m-n+2j))`.
pub fn inductive_sum_check(m: usize, n: usize, l: usize) -> Result<bool> {
    Ok(l == 0 || product_expansion_check(l as i64, (m + n) as i64)?.holds)
}

/// `|Δ_(l+1)| = c [l+1]! |Δ_l|` as displayed.
pub fn inductive_step_check(m: usize, n: usize, l: usize, norm: Normalization) -> Result<bool> {
    Ok(inductive_sum_check(m, n, l)? && inductive_ratio(m, n, l, norm)? == q_factorial(l as i64 + 1)?)
}

/// `|Δ_(l+1)| = c ([l+1]!)^2 |Δ_l|`, the form the determinants satisfy.
pub fn inductive_step_squared_check(m: usize, n: usize, l: usize, norm: Normalization) -> Result<bool> {
    let f = q_factorial(l as i64 + 1)?;
    Ok(inductive_sum_check(m, n, l)? && inductive_ratio(m, n, l, norm)? == &f * &f)
}

fn f_power(k: usize, v: &TensorElement) -> TensorElement {
    act_word(&GeneratorWord::power(Generator::F1, k), v)
}

fn e_power(k: usize, v: &TensorElement) -> TensorElement {
    act_word(&GeneratorWord::power(Generator::E1, k), v)
}

fn assemble<G, P>(m: usize, n: usize, gen: G, push: P) -> Result<Vec<TensorElement>>
where
    G: Fn(usize, usize) -> Result<TensorElement>,
    P: Fn(usize, &TensorElement) -> TensorElement,
{
    let mut out = Vec::with_capacity((m + 1) * (n + 1));
    let layer = |l: usize| (0..=l).map(|j| gen(l, j)).collect::<Result<Vec<_>>>();
    let lower: Vec<Vec<TensorElement>> = (0..n).map(layer).collect::<Result<_>>()?;
    for l in &lower {
        out.extend(l.iter().cloned());
    }
    for (l, vs) in lower.iter().enumerate() {
        out.extend(vs.iter().map(|v| push(m + n - 2 * l, v)));
    }
    let top = layer(n)?;
    for i in 0..=m - n {
        out.extend(top.iter().map(|v| push(i, v)));
    }
    Ok(out)
}

/// `Δ = ∪_(l<n) Δ_l ∪ ∪_(l<n) f^(m+n-2l) Δ_l ∪ ∪_(i=0..m-n) f^i Δ_n`
pub fn build_delta_basis(m: usize, n: usize, norm: Normalization) -> Result<Vec<TensorElement>> {
    check_mn(m, n)?;
    assemble(m, n, |l, j| phi_lj(m, n, l, j, norm), f_power)
}

/// `Λ = ∪_(l<n) Λ_l ∪ ∪_(l<n) e^(m+n-2l) Λ_l ∪ ∪_(i=0..m-n) e^i Λ_n`
pub fn build_lambda_basis(m: usize, n: usize, norm: Normalization) -> Result<Vec<TensorElement>> {
    check_mn(m, n)?;
    assemble(m, n, |l, j| varphi_lj(m, n, l, j, norm), e_power)
}

/// Values of `j` in `0..n` with `y0 = x0 q0^(-(m+n)+2j)`, or
/// `y0 = x0 q0^(m+n-2j)` for the dual set.
pub fn failing_j(m: usize, n: usize, point: &Point, dual: bool) -> Vec<usize> {
    let s = (m + n) as i64;
    (0..n)
        .filter(|&j| {
            let e = if dual { s - 2 * j as i64 } else { -s + 2 * j as i64 };
            let pow = num_traits::pow::Pow::pow(&point.q, e as i32);
            point.y == &point.x * pow
        })
        .collect()
}

fn full_basis(m: usize, n: usize) -> Vec<(usize, usize)> {
    TensorShape::new(m, n).basis()
}

/// Rank over `Q` of the candidate vectors specialized at `point`.
pub fn rank_certify(vectors: &[TensorElement], point: &Point) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let basis = full_basis(first.shape().m(), first.shape().n());
    let rows = vectors
        .iter()
        .map(|v| {
            v.coords(&basis)
                .iter()
                .map(|c| specialize(c, point))
                .collect::<Result<Vec<BigRational>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&rows))
}

/// Rank over the rational-function field.
pub fn rank_symbolic(vectors: &[TensorElement]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let basis = full_basis(first.shape().m(), first.shape().n());
    let rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.coords(&basis)).collect();
    linalg::rank(&rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub m: usize,
    pub n: usize,
    pub dual: bool,
    pub normalization: Normalization,
    /// `None` when the rank is taken symbolically.
    pub specialization: Option<Point>,
    pub criterion_pass: bool,
    pub failing_j: Vec<usize>,
    pub rank: usize,
    pub expected_rank: usize,
}

impl BasisReport {
    pub fn is_basis(&self) -> bool {
        self.rank == self.expected_rank
    }

    /// The rank agrees with the criterion.
    pub fn consistent(&self) -> bool {
        self.criterion_pass == self.is_basis()
    }
}

/// Builds `Δ` (or `Λ`), evaluates the criterion and certifies the rank,
/// at `point` or symbolically when `point` is `None`.
pub fn basis_report(
    m: usize,
    n: usize,
    point: Option<&Point>,
    dual: bool,
    norm: Normalization,
) -> Result<BasisReport> {
    let vectors = if dual {
        build_lambda_basis(m, n, norm)?
    } else {
        build_delta_basis(m, n, norm)?
    };
    let (fails, rank) = match point {
        Some(p) => (failing_j(m, n, p, dual), rank_certify(&vectors, p)?),
        None => (Vec::new(), rank_symbolic(&vectors)),
    };
    Ok(BasisReport {
        m,
        n,
        dual,
        normalization: norm,
        specialization: point.cloned(),
        criterion_pass: fails.is_empty(),
        failing_j: fails,
        rank,
        expected_rank: (m + 1) * (n + 1),
    })
}
