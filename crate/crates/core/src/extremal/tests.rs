use super::*;
use crate::repmod::Legs;
use crate::scalars::parse_scalar;

fn s(t: &str) -> Scalar {
    parse_scalar(t).unwrap()
}

fn shapes(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).flat_map(move |m| (1..=m).map(move |n| (m, n)))
}

#[test]
fn alpha_examples() {
    let shape = TensorShape::new(1, 1);
    assert_eq!(
        alpha_direct(&shape, 0, Convention::AsPrinted).unwrap().value,
        s("q^1 + q^-1")
    );
    assert_eq!(alpha_closed(2, 2, 1).unwrap().value, q_factorial(2).unwrap());
}

#[test]
fn degenerate_top_level() {
    for m in 1..5 {
        let shape = TensorShape::new(m, m);
        let o = omega(&shape, m, Convention::AsPrinted).unwrap();
        assert!(o.degenerate && o.value.is_zero());
        let o1 = omega(&shape, m, Convention::UnitLeading).unwrap();
        assert!(!o1.degenerate);
        let k = highest_weight_kernel(&shape, m);
        assert!(o1.value.ratio_to(&k[0]).is_some());
        assert!(phi(&shape, m, Convention::AsPrinted).unwrap().degenerate);
    }
    assert!(matches!(
        alpha_direct(&TensorShape::new(1, 1), 1, Convention::AsPrinted),
        Err(Error::Degenerate(_))
    ));
}

#[test]
fn extremal_vectors_are_killed() {
    for m in 0..=4 {
        for n in 0..=4 {
            let shape = TensorShape::new(m, n);
            for l in 0..=m.min(n) {
                for conv in [Convention::AsPrinted, Convention::UnitLeading] {
                    let o = omega(&shape, l, conv).unwrap().value;
                    let p = phi(&shape, l, conv).unwrap().value;
                    assert!(act_tensor(Generator::E1, &o).is_zero(), "e Ω ({m},{n},{l})");
                    assert!(act_tensor(Generator::F1, &p).is_zero(), "f Φ ({m},{n},{l})");
                    assert_eq!(
                        o.k1_weight().unwrap_or((m + n - 2 * l) as i64),
                        (m + n - 2 * l) as i64
                    );
                }
            }
        }
    }
}

#[test]
fn conventions_differ_by_leading_factor() {
    for (m, n) in shapes(4) {
        let shape = TensorShape::new(m, n);
        for l in 0..=n {
            let a = omega(&shape, l, Convention::AsPrinted).unwrap().value;
            let b = omega(&shape, l, Convention::UnitLeading).unwrap().value;
            let c = q_int((n - l) as i64).checked_div(&q_int(m as i64 + 1)).unwrap();
            assert_eq!(a, b.scale(&c));
            let a = phi(&shape, l, Convention::AsPrinted).unwrap().value;
            let b = phi(&shape, l, Convention::UnitLeading).unwrap().value;
            let c = q_int((m - l) as i64).checked_div(&q_int(n as i64 + 1)).unwrap();
            assert_eq!(a, b.scale(&c));
        }
    }
}

#[test]
fn coproduct_power_matches_repeated_action() {
    for (m, n) in [(2, 1), (3, 2), (3, 3)] {
        let shape = TensorShape::new(m, n);
        for (i, j) in shape.basis() {
            let t = TensorElement::basis(shape.clone(), i, j);
            for k in 0..=m + n {
                let direct = act_word(&GeneratorWord::power(Generator::F1, k), &t);
                assert_eq!(coproduct_f_power(k, &t), direct, "k={k} on v{i}⊗w{j}");
            }
        }
    }
}

#[test]
fn alpha_three_ways_agree() {
    for (m, n) in shapes(4) {
        let shape = TensorShape::new(m, n);
        for l in 0..=n {
            if l == m {
                continue;
            }
            let d = alpha_direct(&shape, l, Convention::AsPrinted).unwrap().value;
            assert_eq!(d, alpha_sum(m, n, l).unwrap().value, "sum ({m},{n},{l})");
            assert_eq!(d, alpha_closed(m, n, l).unwrap().value, "closed ({m},{n},{l})");
        }
    }
}

#[test]
fn alpha_consecutive_ratio() {
    for (m, n) in shapes(6) {
        for l in 1..n {
            let a = alpha_closed(m, n, l).unwrap().value;
            let b = alpha_closed(m, n, l - 1).unwrap().value;
            assert_eq!(a.checked_div(&b).unwrap(), alpha_ratio_formula(m, n, l).unwrap());
        }
    }
}

#[test]
fn alpha_unit_convention_rescales() {
    // f^k Ω_l = α_l Φ_l with both sides rescaled by their leading factors.
    for (m, n) in shapes(4) {
        let shape = TensorShape::new(m, n);
        for l in 0..n {
            let unit = alpha_direct(&shape, l, Convention::UnitLeading).unwrap().value;
            let printed = alpha_closed(m, n, l).unwrap().value;
            let (mi, ni, li) = (m as i64, n as i64, l as i64);
            let k = (&q_int(ni - li) * &q_int(ni + 1))
                .checked_div(&(&q_int(mi + 1) * &q_int(mi - li)))
                .unwrap();
            assert_eq!(&unit * &k, printed);
        }
    }
}

#[test]
fn alpha_domain_errors() {
    assert!(alpha_closed(1, 2, 0).is_err());
    assert!(alpha_closed(2, 0, 0).is_err());
    assert!(alpha_closed(3, 2, 3).is_err());
    assert!(alpha_sum(2, 2, 2).is_err());
    assert!(omega(&TensorShape::new(2, 1), 2, Convention::AsPrinted).is_err());
}

#[test]
fn level_steps_hold() {
    for (m, n) in shapes(4) {
        let shape = TensorShape::new(m, n);
        for l in 1..=n {
            assert!(omega_step_check(&shape, l).unwrap(), "Ω step ({m},{n},{l})");
            assert!(phi_step_check(&shape, l).unwrap(), "Φ step ({m},{n},{l})");
        }
    }
}

#[test]
fn level_steps_are_nontrivial() {
    let shape = TensorShape::new(3, 2);
    let r = omega_step(&shape, 1, Convention::AsPrinted).unwrap();
    assert!(r.holds && !r.lhs.is_zero());
    let r = phi_step(&shape, 1, Convention::AsPrinted).unwrap();
    assert!(r.holds && !r.lhs.is_zero());
}

#[test]
fn level_steps_depend_on_leg_order() {
    let shape = TensorShape::with_legs(3, 2, Legs::LeftY);
    assert!(!omega_step(&shape, 1, Convention::AsPrinted).unwrap().holds);
    assert!(!phi_step(&shape, 1, Convention::AsPrinted).unwrap().holds);
}

#[test]
fn e0_decomposition() {
    for (m, n) in shapes(4) {
        let shape = TensorShape::new(m, n);
        for l in 1..n {
            let d = decompose_e0_omega(&shape, l, Convention::AsPrinted).unwrap();
            assert!(
                d.matches_formula(),
                "({m},{n},{l}): {} vs {}",
                d.c_prev,
                d.c_prev_formula
            );
            // reassemble
            let om = |k| omega_or_kernel(&shape, k, Convention::AsPrinted).unwrap();
            let rebuilt = act_word(&GeneratorWord::power(Generator::F1, 2), &om(l - 1))
                .scale(&d.c_prev)
                .add(&act_tensor(Generator::F1, &om(l)).scale(&d.c_same))
                .add(&om(l + 1).scale(&d.c_next));
            assert_eq!(rebuilt, act_tensor(Generator::E0, &om(l)));
        }
    }
}
