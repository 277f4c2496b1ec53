use qaffine::scalars::{parse_scalar, Monomial, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(rng: &mut ChaCha8Rng) -> Scalar {
    let mut acc = Scalar::zero();
    for _ in 0..rng.gen_range(0..4) {
        let m = Monomial {
            x: rng.gen_range(-2..=2),
            y: rng.gen_range(-2..=2),
            q: rng.gen_range(-3..=3),
        };
        let c = Scalar::from_int(rng.gen_range(-9..=9))
            .checked_div(&Scalar::from_int(rng.gen_range(1..=4)))
            .expect("nonzero denominator");
        acc = &acc + &(&c * &Scalar::monomial(m));
    }
    acc
}

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let n = poly(rng);
    if rng.gen_bool(0.5) {
        let d = poly(rng);
        if !d.is_zero() {
            return n.checked_div(&d).expect("nonzero divisor");
        }
    }
    n
}

/// Field axioms, canonicity and text round trip on `cases` random triples.
pub fn field_axioms(seed: u64, cases: u32) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let (a, b, c) = (scalar(&mut rng), scalar(&mut rng), scalar(&mut rng));
        let fail = |what: &str| Err(format!("case {case}: {what} with a = {a}, b = {b}, c = {c}"));
        if &a + &b != &b + &a || &a * &b != &b * &a {
            return fail("commutativity");
        }
        if &(&a + &b) + &c != &a + &(&b + &c) || &(&a * &b) * &c != &a * &(&b * &c) {
            return fail("associativity");
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            return fail("distributivity");
        }
        if &(&a - &b) + &b != a || (!a.is_zero() && !(&a * &a.inv().unwrap()).is_one()) {
            return fail("inverses");
        }
        if ![&a + &b, &a * &b, &a - &c].iter().all(Scalar::is_canonical) {
            return fail("canonical form");
        }
        match parse_scalar(&a.to_string()) {
            Ok(back) if back == a => {}
            _ => return fail("text round trip"),
        }
    }
    Ok(())
}
