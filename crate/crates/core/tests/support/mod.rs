#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use qaffine::scalars::{parse_scalar, LaurentPoly, Monomial, Scalar};

pub const SEED: u64 = 20_240_601;

pub fn runner(cases: u32, seed: u64) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &bytes),
    )
}

fn coeff() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, r)| BigRational::new(BigInt::from(p), BigInt::from(r)))
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3, -2i32..=2, -2i32..=2), coeff()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, ((q, x, y), c)| {
            &acc + &LaurentPoly::term(Monomial { x, y, q }, c)
        })
    })
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly(), any::<bool>()).prop_map(|(n, d, frac)| {
        if frac && !d.is_zero() {
            Scalar::new(n, d).unwrap()
        } else {
            Scalar::from_poly(n)
        }
    })
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

/// Field axioms on random triples, plus canonicity of every result.
pub fn field_axioms(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&(scalar(), scalar(), scalar()), |(a, b, c)| {
            check(&a + &b == &b + &a, "add commutes")?;
            check(&a * &b == &b * &a, "mul commutes")?;
            check(&(&a + &b) + &c == &a + &(&b + &c), "add associates")?;
            check(&(&a * &b) * &c == &a * &(&b * &c), "mul associates")?;
            check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributes")?;
            check(&a + &Scalar::zero() == a, "additive identity")?;
            check(&a * &Scalar::one() == a, "multiplicative identity")?;
            check(&(&a - &b) + &b == a, "additive inverse")?;
            if !a.is_zero() {
                check((&a * &a.inv().unwrap()).is_one(), "multiplicative inverse")?;
            }
            for r in [&a + &b, &a * &b, &a - &c] {
                check(r.is_canonical(), "canonical result")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// `parse(print(s)) = s` on random scalars.
pub fn round_trip(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&scalar(), |a| {
            let text = a.to_string();
            let back = parse_scalar(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
            check(back == a, "round trip")?;
            check(back.to_string() == text, "stable text")
        })
        .map_err(|e| e.to_string())
}
