use serde::Serialize;

use super::{act_word, Generator, GeneratorWord, TensorElement, TensorShape};
use crate::scalars::{q_int, Scalar};

/// A defining relation written as `sum_k c_k w_k = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, GeneratorWord)>,
}

impl Relation {
    fn new(name: impl Into<String>, terms: Vec<(Scalar, Vec<Generator>)>) -> Self {
        Relation {
            name: name.into(),
            terms: terms
                .into_iter()
                .map(|(c, w)| (c, GeneratorWord::new(w)))
                .collect(),
        }
    }

    /// `sum_k c_k w_k (t)`
    pub fn apply(&self, t: &TensorElement) -> TensorElement {
        self.terms
            .iter()
            .fold(TensorElement::zero(t.shape().clone()), |acc, (c, w)| {
                acc.add(&act_word(w, t).scale(c))
            })
    }
}

/// Every relation of `U_q(sl2-hat)`: K invertibility and commutation,
/// K-conjugation of e and f, the commutators `[e_i, f_j]`, and the quantum
/// Serre relations.
pub fn relations() -> Vec<Relation> {
    use Generator::*;
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let q2 = Scalar::q_pow(2);
    let qm2 = Scalar::q_pow(-2);
    let q3 = q_int(3);
    let inv_qq = (&Scalar::q() - &Scalar::q_pow(-1))
        .inv()
        .expect("q - q^-1 is nonzero");

    let mut out = Vec::new();
    for i in 0..2 {
        let (k, ki) = (Generator::k(i), Generator::k_inv(i));
        out.push(Relation::new(
            format!("K{i} K{i}^-1 = 1"),
            vec![(one(), vec![k, ki]), (neg(), vec![])],
        ));
        out.push(Relation::new(
            format!("K{i}^-1 K{i} = 1"),
            vec![(one(), vec![ki, k]), (neg(), vec![])],
        ));
    }
    out.push(Relation::new(
        "K0 K1 = K1 K0",
        vec![(one(), vec![K0, K1]), (neg(), vec![K1, K0])],
    ));
    for i in 0..2 {
        let (k, ki) = (Generator::k(i), Generator::k_inv(i));
        for j in 0..2 {
            let (e, f) = (Generator::e(j), Generator::f(j));
            let (se, sf) = if i == j {
                (q2.clone(), qm2.clone())
            } else {
                (qm2.clone(), q2.clone())
            };
            out.push(Relation::new(
                format!("K{i} e{j} K{i}^-1 = {se} e{j}"),
                vec![(one(), vec![k, e, ki]), (-&se, vec![e])],
            ));
            out.push(Relation::new(
                format!("K{i} f{j} K{i}^-1 = {sf} f{j}"),
                vec![(one(), vec![k, f, ki]), (-&sf, vec![f])],
            ));
        }
    }
    for i in 0..2 {
        let (e, f, k, ki) = (
            Generator::e(i),
            Generator::f(i),
            Generator::k(i),
            Generator::k_inv(i),
        );
        out.push(Relation::new(
            format!("[e{i}, f{i}] = (K{i} - K{i}^-1)/(q - q^-1)"),
            vec![
                (one(), vec![e, f]),
                (neg(), vec![f, e]),
                (-&inv_qq, vec![k]),
                (inv_qq.clone(), vec![ki]),
            ],
        ));
    }
    out.push(Relation::new(
        "[e0, f1] = 0",
        vec![(one(), vec![E0, F1]), (neg(), vec![F1, E0])],
    ));
    out.push(Relation::new(
        "[e1, f0] = 0",
        vec![(one(), vec![E1, F0]), (neg(), vec![F0, E1])],
    ));
    for (i, j) in [(0, 1), (1, 0)] {
        for (kind, a, b) in [
            ("e", Generator::e(i), Generator::e(j)),
            ("f", Generator::f(i), Generator::f(j)),
        ] {
            out.push(Relation::new(
                format!("Serre {kind}{i}^3 {kind}{j}"),
                vec![
                    (one(), vec![a, a, a, b]),
                    (-&q3, vec![a, a, b, a]),
                    (q3.clone(), vec![a, b, a, a]),
                    (neg(), vec![b, a, a, a]),
                ],
            ));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationViolation {
    pub relation: String,
    pub basis: (usize, usize),
    pub residual: TensorElement,
}

/// Outcome of checking every relation on every basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub m: usize,
    pub n: usize,
    pub relations_checked: usize,
    pub basis_vectors: usize,
    pub violation: Option<RelationViolation>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Verifies each relation as an operator identity on all `v_i ⊗ w_j` of
/// `V_m(x) ⊗ V_n(y)`; stops at the first violation.
pub fn check_relations(shape: &TensorShape) -> RelationReport {
    let rels = relations();
    let basis = shape.basis();
    let mut report = RelationReport {
        m: shape.m(),
        n: shape.n(),
        relations_checked: rels.len(),
        basis_vectors: basis.len(),
        violation: None,
    };
    for rel in &rels {
        for &(i, j) in &basis {
            let residual = rel.apply(&TensorElement::basis(shape.clone(), i, j));
            if !residual.is_zero() {
                report.violation = Some(RelationViolation {
                    relation: rel.name.clone(),
                    basis: (i, j),
                    residual,
                });
                return report;
            }
        }
    }
    report
}
