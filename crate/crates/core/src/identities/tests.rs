use super::*;
use crate::scalars::parse_scalar;

fn s(t: &str) -> Scalar {
    parse_scalar(t).unwrap()
}

#[test]
fn binomial_sum_examples() {
    assert_eq!(binomial_sum(2, 1).unwrap(), LaurentPoly::q());
    let r = binomial_sum_check(4, 2).unwrap();
    assert!(r.holds);
    assert_eq!(r.lhs, s("q^4"));
    for m in 1..8 {
        assert_eq!(binomial_sum(m, m).unwrap(), LaurentPoly::one());
    }
    assert!(binomial_sum_check(2, 3).is_err());
    assert!(binomial_sum_check(2, 0).is_err());
}

#[test]
fn binomial_sum_sweep() {
    for m in 1..=12 {
        for l in 1..=m {
            assert!(binomial_sum_check(m, l).unwrap().holds, "({m},{l})");
            assert!(
                binomial_sum_factorial_check(m, l).unwrap().holds,
                "factorial ({m},{l})"
            );
        }
    }
}

#[test]
fn literal_reading_is_not_the_identity() {
    // a bare [0] in the denominator whenever i reaches m - l
    assert!(binomial_sum_bare_bracket(2, 1).is_err());
    let bad = (1..=6)
        .flat_map(|m| (1..=m).map(move |l| (m, l)))
        .filter(|&(m, l)| match binomial_sum_bare_bracket(m, l) {
            Ok(v) => v != Scalar::q_pow((l * (m - l)) as i32),
            Err(_) => true,
        })
        .count();
    assert!(bad > 0);
}

#[test]
fn classical_sum_and_limit() {
    for (m, l) in [(4, 2), (2, 1), (5, 1)] {
        assert!(classical_sum_check(m, l).unwrap().holds);
    }
    for m in 1..=12 {
        for l in 1..=m {
            let c = classical_sum_check(m, l).unwrap();
            assert_eq!(binomial_sum_classical(m, l).unwrap(), c.lhs);
        }
    }
}

#[test]
fn vanishing_sum_examples() {
    assert!(vanishing_sum_check(1, 0).unwrap().holds);
    assert!(vanishing_sum_check(2, 1).unwrap().holds);
    assert!(vanishing_sum_check(2, -1).unwrap().holds);
    assert!(vanishing_sum_check(2, 0).is_err());
    assert_eq!(vanishing_sum_exponents(3), vec![2, 0, -2]);
}

#[test]
fn vanishing_sum_range_matters() {
    for l in 1..=6 {
        let adm = vanishing_sum_exponents(l);
        assert!((-2 * l..=2 * l)
            .filter(|k| !adm.contains(k))
            .any(|k| !vanishing_sum(l, k).is_zero()));
    }
}

#[test]
fn product_expansion_examples() {
    for s in [-3, 0, 5] {
        let r = product_expansion_check(1, s).unwrap();
        assert!(r.holds);
    }
    assert!(product_expansion_check(2, 3).unwrap().holds);
    assert!(product_expansion_check(3, 0).unwrap().holds);
    let r = product_expansion_check(1, 2).unwrap();
    assert_eq!(r.rhs, s("-1*x^1*q^-2 + y^1"));
}

#[test]
fn report_json() {
    let r = binomial_sum_check(2, 1).unwrap();
    assert_eq!(
        serde_json::to_string(&r).unwrap(),
        r#"{"id":"binomial_sum","params":{"l":1,"m":2},"holds":true,"lhs":"q^1","rhs":"q^1"}"#
    );
}
