use qaffine::basis::{
    build_delta_basis, build_lambda_basis, determinant_chain, determinant_report_with, failing_j,
    inductive_ratio_of, inductive_sum_check, rank_certify, seed_constant, Normalization,
};
use qaffine::extremal::{
    alpha_closed, alpha_direct, alpha_ratio_formula, alpha_sum, coproduct_f_power, decompose_e0_omega, omega,
    omega_step, phi, phi_step, Convention,
};
use qaffine::identities::{
    binomial_sum_check, binomial_sum_classical, classical_sum_check, product_expansion_check,
    vanishing_sum_check, vanishing_sum_exponents,
};
use qaffine::repmod::{
    act_tensor, check_relations, highest_weight_kernel, Generator, Legs, TensorElement, TensorShape,
};
use qaffine::scalars::{q_factorial, Point};

use crate::random;
use crate::sink::{Job, Record};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Relations,
    Identities,
    Lemmas,
    Alpha,
    Extremal,
    Coproduct,
    Determinant,
    Basis,
    Scalars,
    All,
}

/// Sweep bounds and options. Unset bounds fall back to per-scope defaults.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub max_l: Option<usize>,
    pub norm: Option<Normalization>,
    pub point: Point,
    pub legs: Legs,
    pub seed: u64,
    pub cases: u32,
    pub as_printed: bool,
}

impl SweepConfig {
    fn m(&self, default: usize) -> usize {
        self.max_m.unwrap_or(default)
    }

    fn n(&self, m: usize) -> usize {
        self.max_n.map_or(m, |n| n.min(m))
    }

    fn l(&self, default: usize) -> usize {
        self.max_l.unwrap_or(default)
    }

    /// `(m, n)` with `n <= m`, both bounded.
    fn shapes(&self, default: usize) -> Vec<(usize, usize)> {
        let max = self.m(default);
        (1..=max)
            .flat_map(|m| (1..=self.n(m)).map(move |n| (m, n)))
            .collect()
    }

    fn norms(&self) -> Vec<Normalization> {
        match self.norm {
            Some(n) => vec![n],
            None => vec![Normalization::Unit, Normalization::Paper],
        }
    }

    fn shape(&self, m: usize, n: usize) -> TensorShape {
        TensorShape::with_legs(m, n, self.legs)
    }
}

pub fn jobs(scope: Scope, cfg: &SweepConfig) -> Vec<Job> {
    match scope {
        Scope::Relations => relations(cfg),
        Scope::Identities => identities(cfg),
        Scope::Lemmas => lemmas(cfg),
        Scope::Alpha => alpha(cfg),
        Scope::Extremal => extremal(cfg),
        Scope::Coproduct => coproduct(cfg),
        Scope::Determinant => determinant(cfg),
        Scope::Basis => basis(cfg),
        Scope::Scalars => scalars(cfg),
        Scope::All => [
            Scope::Scalars,
            Scope::Relations,
            Scope::Coproduct,
            Scope::Identities,
            Scope::Extremal,
            Scope::Alpha,
            Scope::Lemmas,
            Scope::Determinant,
            Scope::Basis,
        ]
        .into_iter()
        .flat_map(|s| jobs(s, cfg))
        .collect(),
    }
}

fn mn(r: Record, m: usize, n: usize) -> Record {
    r.param("m", m).param("n", n)
}

fn relations(cfg: &SweepConfig) -> Vec<Job> {
    let max_m = cfg.m(3);
    let max_n = cfg.max_n.unwrap_or(max_m);
    let mut out = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            let shape = cfg.shape(m, n);
            out.push(Job::new("relations", move || {
                let r = check_relations(&shape);
                let rec = mn(Record::new("relations", "defining_relations"), m, n).pass(r.holds());
                let rec = match &r.violation {
                    Some(v) => rec.detail(format!("{} fails on v{}⊗w{}", v.relation, v.basis.0, v.basis.1)),
                    None => rec.detail(format!(
                        "{} relations on {} basis vectors",
                        r.relations_checked, r.basis_vectors
                    )),
                };
                vec![rec.report(&r)]
            }));
        }
    }
    out
}

fn identities(cfg: &SweepConfig) -> Vec<Job> {
    let mut out = Vec::new();
    let max_l = cfg.max_l;
    for m in 1..=cfg.m(20) as i64 {
        out.push(Job::new("identities", move || {
            let top = max_l.map_or(m, |l| (l as i64).min(m));
            (1..=top)
                .map(|l| {
                    let rec = Record::new("identities", "binomial_sum")
                        .param("m", m)
                        .param("l", l);
                    match binomial_sum_check(m, l) {
                        Ok(r) => rec.pass(r.holds).report(&r),
                        Err(e) => rec.error(e),
                    }
                })
                .collect()
        }));
    }
    for m in 1..=cfg.m(30) as i64 {
        out.push(Job::new("identities", move || {
            let top = max_l.map_or(m, |l| (l as i64).min(m));
            (1..=top)
                .map(|l| {
                    let rec = Record::new("identities", "classical_sum")
                        .param("m", m)
                        .param("l", l);
                    let r = match classical_sum_check(m, l) {
                        Ok(r) => r,
                        Err(e) => return rec.error(e),
                    };
                    if !r.holds {
                        return rec.pass(false).report(&r);
                    }
                    if m <= 12 {
                        match binomial_sum_classical(m, l) {
                            Ok(lim) if lim == r.lhs => {}
                            Ok(lim) => {
                                return rec
                                    .pass(false)
                                    .detail(format!("classical limit {lim}"))
                                    .report(&r)
                            }
                            Err(e) => return rec.error(e),
                        }
                    }
                    rec.report(&r)
                })
                .collect()
        }));
    }
    out
}

fn lemmas(cfg: &SweepConfig) -> Vec<Job> {
    let mut out = Vec::new();
    for (m, n) in cfg.shapes(5) {
        let shape = cfg.shape(m, n);
        out.push(Job::new("lemmas", move || {
            let mut recs = Vec::new();
            for l in 1..=n {
                let base = |check| mn(Record::new("lemmas", check), m, n).param("l", l);
                if l < n {
                    recs.push(match omega_step(&shape, l, Convention::AsPrinted) {
                        Ok(r) => base("omega_step").pass(r.holds).report(&r),
                        Err(e) => base("omega_step").error(e),
                    });
                    recs.push(match decompose_e0_omega(&shape, l, Convention::AsPrinted) {
                        Ok(d) => base("e0_omega").pass(d.matches_formula()).report(&d),
                        Err(e) => base("e0_omega").error(e),
                    });
                }
                if l < m {
                    recs.push(match phi_step(&shape, l, Convention::AsPrinted) {
                        Ok(r) => base("phi_step").pass(r.holds).report(&r),
                        Err(e) => base("phi_step").error(e),
                    });
                }
            }
            recs
        }));
    }
    let max31 = cfg.l(12) as i64;
    out.push(Job::new("lemmas", move || {
        (1..=max31)
            .flat_map(|l| vanishing_sum_exponents(l).into_iter().map(move |k| (l, k)))
            .map(|(l, k)| {
                let rec = Record::new("lemmas", "vanishing_sum").param("l", l).param("k", k);
                match vanishing_sum_check(l, k) {
                    Ok(r) => rec.pass(r.holds).report(&r),
                    Err(e) => rec.error(e),
                }
            })
            .collect()
    }));
    let max32 = cfg.l(10) as i64;
    out.push(Job::new("lemmas", move || {
        (1..=max32)
            .flat_map(|l| (-10..=10).map(move |s| (l, s)))
            .map(|(l, s)| {
                let rec = Record::new("lemmas", "product_expansion")
                    .param("l", l)
                    .param("s", s);
                match product_expansion_check(l, s) {
                    Ok(r) => rec.pass(r.holds).report(&r),
                    Err(e) => rec.error(e),
                }
            })
            .collect()
    }));
    out
}

fn alpha(cfg: &SweepConfig) -> Vec<Job> {
    let max_l = cfg.max_l;
    cfg.shapes(5)
        .into_iter()
        .map(|(m, n)| {
            let shape = cfg.shape(m, n);
            Job::new("alpha", move || {
                let top = max_l.map_or(n, |l| (l + 1).min(n));
                (0..top).map(|l| alpha_one(&shape, m, n, l)).collect()
            })
        })
        .collect()
}

fn alpha_one(shape: &TensorShape, m: usize, n: usize, l: usize) -> Record {
    let rec = mn(Record::new("alpha", "alpha"), m, n).param("l", l);
    let run = || -> qaffine::Result<Record> {
        let d = alpha_direct(shape, l, Convention::AsPrinted)?.value;
        let s = alpha_sum(m, n, l)?.value;
        let c = alpha_closed(m, n, l)?;
        if d != s || s != c.value {
            return Ok(rec
                .clone()
                .pass(false)
                .detail(format!("direct {d}, sum {s}, closed {}", c.value)));
        }
        if l >= 1 {
            let prev = alpha_closed(m, n, l - 1)?.value;
            if c.value.checked_div(&prev)? != alpha_ratio_formula(m, n, l)? {
                return Ok(rec.clone().pass(false).detail("ratio α_l/α_(l-1)"));
            }
        }
        Ok(rec.clone().report(&c))
    };
    run().unwrap_or_else(|e| rec.error(e))
}

fn extremal(cfg: &SweepConfig) -> Vec<Job> {
    cfg.shapes(5)
        .into_iter()
        .map(|(m, n)| {
            let shape = cfg.shape(m, n);
            Job::new("extremal", move || {
                let mut recs: Vec<Record> = (0..n)
                    .map(|l| {
                        let rec = mn(Record::new("extremal", "omega_phi"), m, n).param("l", l);
                        match extremal_one(&shape, l) {
                            Ok(None) => rec,
                            Ok(Some(why)) => rec.pass(false).detail(why),
                            Err(e) => rec.error(e),
                        }
                    })
                    .collect();
                let rec = mn(Record::new("extremal", "omega_top_degenerate"), m, n).param("l", n);
                recs.push(match omega(&shape, n, Convention::AsPrinted) {
                    Ok(o) => rec.pass(o.degenerate && o.value.is_zero()),
                    Err(e) => rec.error(e),
                });
                recs
            })
        })
        .collect()
}

fn extremal_one(shape: &TensorShape, l: usize) -> qaffine::Result<Option<String>> {
    let o = omega(shape, l, Convention::AsPrinted)?;
    let p = phi(shape, l, Convention::AsPrinted)?;
    if o.degenerate || p.degenerate {
        return Ok(Some("unexpected degeneracy".into()));
    }
    if !act_tensor(Generator::E1, &o.value).is_zero() {
        return Ok(Some("e Ω ≠ 0".into()));
    }
    if !act_tensor(Generator::F1, &p.value).is_zero() {
        return Ok(Some("f Φ ≠ 0".into()));
    }
    let k = highest_weight_kernel(shape, l);
    if k.len() != 1 || o.value.ratio_to(&k[0]).is_none() {
        return Ok(Some("Ω not proportional to the kernel vector".into()));
    }
    Ok(None)
}

fn coproduct(cfg: &SweepConfig) -> Vec<Job> {
    let max_m = cfg.m(4);
    let max_n = cfg.max_n.unwrap_or(max_m);
    let mut out = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            let shape = cfg.shape(m, n);
            out.push(Job::new("coproduct", move || {
                let rec = mn(Record::new("coproduct", "f_power"), m, n);
                for (i, j) in shape.basis() {
                    let t = TensorElement::basis(shape.clone(), i, j);
                    let mut direct = t.clone();
                    for k in 0..=m + n {
                        if coproduct_f_power(k, &t) != direct {
                            return vec![rec.pass(false).detail(format!("k = {k} on v{i}⊗w{j}"))];
                        }
                        direct = act_tensor(Generator::F1, &direct);
                    }
                }
                vec![rec]
            }));
        }
    }
    out
}

fn determinant(cfg: &SweepConfig) -> Vec<Job> {
    let mut out = Vec::new();
    let as_printed = cfg.as_printed;
    let max_l = cfg.max_l;
    for (m, n) in cfg.shapes(5) {
        for norm in cfg.norms() {
            out.push(Job::new("determinant", move || {
                let top = max_l.map_or(n, |l| (l + 1).min(n));
                let chain = match determinant_chain(m, n, norm) {
                    Ok(c) => c,
                    Err(e) => return vec![mn(Record::new("determinant", "chain"), m, n).error(e)],
                };
                (0..top)
                    .map(|l| determinant_one(m, n, l, norm, &chain, as_printed))
                    .collect()
            }));
        }
    }
    out
}

fn norm_name(norm: Normalization) -> &'static str {
    match norm {
        Normalization::Paper => "paper",
        Normalization::Unit => "unit",
    }
}

fn determinant_one(
    m: usize,
    n: usize,
    l: usize,
    norm: Normalization,
    chain: &[qaffine::scalars::Scalar],
    as_printed: bool,
) -> Record {
    let rec = mn(Record::new("determinant", "det_closed_form"), m, n)
        .param("l", l)
        .param("norm", norm_name(norm));
    let run = || -> qaffine::Result<Record> {
        let r = determinant_report_with(m, n, l, norm, chain[l + 1].clone())?;
        let ratio = inductive_ratio_of(m, n, l, norm, &chain[l + 1], &chain[l])?;
        let f = q_factorial(l as i64 + 1)?;
        let mut problems = Vec::new();
        if !r.structure_matches {
            problems.push("x,y factorization".to_string());
        }
        if !r.factorial_squared {
            problems.push(format!("prefactor {}", r.prefactor));
        }
        if !inductive_sum_check(m, n, l)? {
            problems.push("sum in the inductive constant".into());
        }
        if ratio != &f * &f {
            problems.push(format!("inductive ratio {ratio}"));
        }
        if as_printed {
            if r.prefactor != seed_constant(m, n, l, norm) {
                problems.push("factorial product enters once: no".into());
            }
            if ratio != f {
                problems.push("inductive step with [l+1]!: no".into());
            }
        }
        let rec = rec.clone().report(&r);
        Ok(if problems.is_empty() {
            rec
        } else {
            rec.pass(false).detail(problems.join("; "))
        })
    };
    run().unwrap_or_else(|e| rec.error(e))
}

fn y_at(p: &Point, e: i64) -> Point {
    let pow = num_traits::pow::Pow::pow(&p.q, e as i32);
    Point {
        y: &p.x * pow,
        ..p.clone()
    }
}

fn basis(cfg: &SweepConfig) -> Vec<Job> {
    let mut out = Vec::new();
    let norm = cfg.norm.unwrap_or_default();
    for (m, n) in cfg.shapes(4) {
        for dual in [false, true] {
            let point = cfg.point.clone();
            let as_printed = cfg.as_printed;
            out.push(Job::new("basis", move || {
                basis_one(m, n, dual, norm, &point, as_printed)
            }));
        }
    }
    out
}

fn basis_one(
    m: usize,
    n: usize,
    dual: bool,
    norm: Normalization,
    point: &Point,
    as_printed: bool,
) -> Vec<Record> {
    let check = if dual { "lambda" } else { "delta" };
    let base = || mn(Record::new("basis", check), m, n);
    let vectors = match if dual {
        build_lambda_basis(m, n, norm)
    } else {
        build_delta_basis(m, n, norm)
    } {
        Ok(v) => v,
        Err(e) => return vec![base().error(e)],
    };
    let full = (m + 1) * (n + 1);
    let mut recs = Vec::new();
    let fails = failing_j(m, n, point, dual);
    let rec = base().param("point", point.to_string());
    if !fails.is_empty() {
        recs.push(rec.pass(false).detail(format!(
            "specialization point fails the criterion at j = {fails:?}"
        )));
        return recs;
    }
    recs.push(match rank_certify(&vectors, point) {
        Ok(r) => rec.pass(r == full).detail(format!("rank {r} of {full}")),
        Err(e) => rec.error(e),
    });
    let s = (m + n) as i64;
    for j in 0..n as i64 {
        // Λ degenerates where Δ does; the displayed dual points are checked on request
        let e = if dual && as_printed { s - 2 * j } else { -s + 2 * j };
        let p = y_at(point, e);
        let rec = base().param("j", j).param("point", p.to_string());
        recs.push(match rank_certify(&vectors, &p) {
            Ok(r) => rec
                .pass(r < full)
                .detail(format!("rank {r} of {full} at y = x q^{e}")),
            Err(e) => rec.error(e),
        });
    }
    recs
}

fn scalars(cfg: &SweepConfig) -> Vec<Job> {
    const BATCH: u32 = 100;
    let batches = cfg.cases.div_ceil(BATCH);
    (0..batches)
        .map(|b| {
            let seed = cfg.seed.wrapping_add(b as u64);
            let cases = BATCH.min(cfg.cases - b * BATCH);
            Job::new("scalars", move || {
                let rec = Record::new("scalars", "field_axioms")
                    .param("batch", b)
                    .param("seed", seed)
                    .param("cases", cases);
                match random::field_axioms(seed, cases) {
                    Ok(()) => vec![rec],
                    Err(why) => vec![rec.pass(false).detail(why)],
                }
            })
        })
        .collect()
}
