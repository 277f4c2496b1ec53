use super::*;
use crate::scalars::{parse_scalar, q_int};

fn s(t: &str) -> Scalar {
    parse_scalar(t).unwrap()
}

fn v(m: usize, i: usize) -> ModuleElement {
    ModuleElement::basis(ModuleShape::new(m, Param::X), i)
}

fn t11(i: usize, j: usize) -> TensorElement {
    TensorElement::basis(TensorShape::new(1, 1), i, j)
}

fn tensor(shape: &TensorShape, terms: &[((usize, usize), &str)]) -> TensorElement {
    TensorElement::from_coeffs(shape.clone(), terms.iter().map(|&(k, c)| (k, s(c))))
}

#[test]
fn sl2_action_examples() {
    assert_eq!(act_sl2(Sl2Generator::F, &v(1, 0)), v(1, 1));
    for m in 0..4 {
        assert!(act_sl2(Sl2Generator::E, &v(m, 0)).is_zero());
        assert!(act_sl2(Sl2Generator::F, &v(m, m)).is_zero());
    }
    assert_eq!(act_sl2(Sl2Generator::K, &v(2, 1)), v(2, 1));
}

#[test]
fn eval_action_examples() {
    let e0 = act_eval(Generator::E0, &v(1, 0));
    assert_eq!(e0.coeff(1), s("x^1*q^-1"));
    let f0 = act_eval(Generator::F0, &v(1, 1));
    assert_eq!(f0.coeff(0), s("x^-1*q^1"));
    let k0 = act_eval(Generator::K0, &v(1, 0));
    assert_eq!(k0.coeff(0), s("q^-1"));
}

#[test]
fn eval_map_fixes_finite_part() {
    for m in 0..5 {
        let shape = ModuleShape::new(m, Param::Y);
        let mut el = ModuleElement::zero(shape);
        for i in 0..=m {
            el.add_to(i, &s(&format!("{}*y^{} + q^{}", i + 1, i, m)));
        }
        assert_eq!(act_eval(Generator::E1, &el), act_sl2(Sl2Generator::E, &el));
        assert_eq!(act_eval(Generator::F1, &el), act_sl2(Sl2Generator::F, &el));
        assert_eq!(act_eval(Generator::K1, &el), act_sl2(Sl2Generator::K, &el));
    }
}

#[test]
fn tensor_action_examples() {
    let shape = TensorShape::new(1, 1);
    assert_eq!(act_tensor(Generator::E1, &t11(0, 1)), t11(0, 0));
    assert_eq!(
        act_tensor(Generator::E1, &t11(1, 0)),
        tensor(&shape, &[((0, 0), "q^1")])
    );
    assert_eq!(
        act_tensor(Generator::F1, &t11(0, 0)),
        tensor(&shape, &[((1, 0), "1"), ((0, 1), "q^-1")])
    );
}

#[test]
fn word_examples() {
    let shape = TensorShape::new(1, 1);
    assert_eq!(act_word(&GeneratorWord::default(), &t11(0, 1)), t11(0, 1));
    let ff = act_word(&GeneratorWord::power(Generator::F1, 2), &t11(0, 0));
    assert_eq!(ff, tensor(&shape, &[((1, 1), "q^1 + q^-1")]));

    let ef = act_word(
        &GeneratorWord::new(vec![Generator::E1, Generator::F1]),
        &t11(0, 0),
    );
    let fe = act_word(
        &GeneratorWord::new(vec![Generator::F1, Generator::E1]),
        &t11(0, 0),
    );
    let k = act_tensor(Generator::K1, &t11(0, 0));
    let kinv = act_tensor(Generator::K1Inv, &t11(0, 0));
    let qq = (&Scalar::q() - &Scalar::q_pow(-1)).inv().unwrap();
    assert_eq!(ef.sub(&fe), k.sub(&kinv).scale(&qq));
}

#[test]
fn relations_hold_small() {
    for (m, n) in [(1, 1), (2, 1), (0, 2)] {
        let r = check_relations(&TensorShape::new(m, n));
        assert!(r.holds(), "({m},{n}): {:?}", r.violation.map(|v| v.relation));
    }
}

#[test]
fn e0_f1_commute_on_v1v1() {
    let shape = TensorShape::new(1, 1);
    let w = GeneratorWord::new(vec![Generator::E0, Generator::F1]);
    let w2 = GeneratorWord::new(vec![Generator::F1, Generator::E0]);
    for (i, j) in shape.basis() {
        let b = TensorElement::basis(shape.clone(), i, j);
        assert!(act_word(&w, &b).sub(&act_word(&w2, &b)).is_zero());
    }
}

#[test]
fn wrong_relation_is_detected() {
    // [e0, f0] does not vanish; the checker machinery must see that.
    let rel = Relation {
        name: "bogus".into(),
        terms: vec![
            (
                Scalar::one(),
                GeneratorWord::new(vec![Generator::E0, Generator::F0]),
            ),
            (
                Scalar::from_int(-1),
                GeneratorWord::new(vec![Generator::F0, Generator::E0]),
            ),
        ],
    };
    let shape = TensorShape::new(1, 1);
    assert!(shape
        .basis()
        .into_iter()
        .any(|(i, j)| !rel.apply(&TensorElement::basis(shape.clone(), i, j)).is_zero()));
}

#[test]
fn weight_shifts() {
    let shape = TensorShape::new(3, 2);
    for (i, j) in shape.basis() {
        let b = TensorElement::basis(shape.clone(), i, j);
        let w = b.k1_weight().unwrap();
        for g in Generator::ALL {
            let img = act_tensor(g, &b);
            if let Some(w2) = img.k1_weight() {
                assert_eq!(w2, w + g.k1_weight_shift(), "{g:?} on v{i}⊗w{j}");
            }
        }
    }
}

#[test]
fn kernel_examples() {
    let shape = TensorShape::new(1, 1);
    let k = highest_weight_kernel(&shape, 1);
    assert_eq!(k.len(), 1);
    let expected = tensor(&shape, &[((0, 1), "q^1"), ((1, 0), "-1")]);
    assert!(k[0].ratio_to(&expected).is_some());

    let k0 = highest_weight_kernel(&shape, 0);
    assert_eq!(k0.len(), 1);
    assert!(k0[0].ratio_to(&t11(0, 0)).is_some());

    assert_eq!(highest_weight_kernel(&TensorShape::new(2, 1), 1).len(), 1);
}

#[test]
fn clebsch_gordan_multiplicity_one() {
    for m in 0..=5 {
        for n in 0..=5 {
            let shape = TensorShape::new(m, n);
            for l in 0..=m.min(n) {
                let k = highest_weight_kernel(&shape, l);
                assert_eq!(k.len(), 1, "(m,n,l)=({m},{n},{l})");
                assert!(act_tensor(Generator::E1, &k[0]).is_zero());
            }
        }
    }
}

#[test]
fn tensor_json_round_trip() {
    let shape = TensorShape::new(2, 1);
    let t = tensor(&shape, &[((1, 0), "(q^1)/(q^2 + 1)"), ((0, 1), "-1*x^1 + y^2")]);
    let text = serde_json::to_string(&t).unwrap();
    assert_eq!(
        text,
        r#"{"m":2,"n":1,"coeffs":[{"i":0,"j":1,"value":"-1*x^1 + y^2"},{"i":1,"j":0,"value":"(q^1)/(q^2 + 1)"}]}"#
    );
    let back: TensorJson = serde_json::from_str(&text).unwrap();
    assert_eq!(TensorElement::from_json(&back).unwrap(), t);
}

#[test]
fn q_int_in_action_coefficients() {
    // f^3 v_0 = [3]! v_3 in V_3
    let mut el = v(3, 0);
    for _ in 0..3 {
        el = act_sl2(Sl2Generator::F, &el);
    }
    assert_eq!(el.coeff(3), &q_int(2) * &q_int(3));
}
