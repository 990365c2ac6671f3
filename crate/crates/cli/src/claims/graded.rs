use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};
use ufdlab::coeff::{gcd_all, Field};
use ufdlab::constructions::{
    fifth_weights, jacobian_tangent_dim, pham_brieskorn, threefold_family, trinomial_ring, PhamBrieskornCase, Threefold, ThreefoldData, TrinomialData,
};
use ufdlab::groebner::{brute_force_irreducible, Irreducibility};
use ufdlab::poly::VarTable;
use ufdlab::Verdict;

use crate::params::Params;
use crate::runner::{fail, ClaimError, Outcome};

pub(super) fn irreducible(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => irreducible_in::<F>(p))
}

fn irreducible_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let vars = p.vars("variables", &["x", "y"])?;
    let f = p.poly::<F>(&vars, "f")?;
    let bound = p.i64("bound")?;
    Ok(match brute_force_irreducible(&f, bound).map_err(fail)? {
        Irreducibility::Irreducible => Outcome::new(Verdict::Verified, json!({ "f": f.to_string(), "bound": bound, "factor": null })),
        Irreducibility::Reducible(g, h) => Outcome::new(Verdict::Refuted, json!({ "f": f.to_string(), "bound": bound, "factor": [g.to_string(), h.to_string()] })),
    })
}

pub(super) fn pham_brieskorn_claim(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => pham::<F>(p))
}

fn pham<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let exps = p.i64_list("exponents")?;
    let pb = pham_brieskorn::<F>(&exps).map_err(fail)?;
    let case = match pb.case {
        PhamBrieskornCase::Long => "long",
        PhamBrieskornCase::Triple => "triple",
    };
    // every X_i^{a_i} must land in one degree
    let weights: Vec<i64> = pb.ring.grading().map(|g| g.weights().to_vec()).unwrap_or_default();
    let degrees: Vec<i64> = weights.iter().zip(&exps).map(|(w, a)| w * a).collect();
    let mut ok = weights.len() == exps.len() && degrees.windows(2).all(|d| d[0] == d[1]);
    if p.has("expect_case") {
        ok &= p.str("expect_case")? == case;
    }
    let witness = json!({
        "case": case,
        "omega": pb.omega,
        "weights": weights,
        "relation_degree": degrees.first(),
        "ring": pb.ring.to_presentation(),
    });
    Ok(Outcome::new(Verdict::from_bool(ok), witness))
}

pub(super) fn fifth_weights_claim(p: &Params) -> Result<Outcome, ClaimError> {
    let omega = p.i64("omega")?;
    let e = p.i64_list("e")?;
    let w = fifth_weights(omega, &e).map_err(fail)?;
    let n = e.len();
    let check = omega - w.m.iter().zip(&e[..n - 1]).map(|(m, e)| m * e).sum::<i64>();
    let ok = check == w.check && gcd_all(&[BigInt::from(e[n - 1]), BigInt::from(check)]) == BigInt::from(1);
    Ok(Outcome::new(Verdict::from_bool(ok), json!({ "m": w.m, "check": w.check })))
}

pub(super) fn trinomial(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => trinomial_in::<F>(p))
}

fn trinomial_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let data = TrinomialData {
        partition: p.i64_list("partition")?.iter().map(|&n| usize::try_from(n).map_err(|_| ClaimError::Params("partition entries must be non-negative".into()))).collect::<Result<_, _>>()?,
        exponents: p.i64_lists("exponents")?,
        constants: p.scalars::<F>("constants")?,
        names: if p.has("names") { Some(p.str_lists("names")?) } else { None },
    };
    let t = trinomial_ring(&data).map_err(fail)?;
    // recheck each step: T_i^{β_i} has the step degree for i < m, and β_m is coprime to it
    let names = data.names.clone().unwrap_or_else(|| {
        data.partition.iter().enumerate().map(|(i, &k)| (1..=k).map(|j| format!("t{i}_{j}")).collect()).collect()
    });
    let mut ok = true;
    for s in &t.steps {
        let w: BTreeMap<&str, i64> = s.weights.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        for i in 0..s.m {
            let deg: Option<i64> = names[i].iter().zip(&data.exponents[i]).map(|(n, e)| w.get(n.as_str()).map(|d| d * e)).sum();
            ok &= deg == Some(s.degree);
        }
        let mut g: Vec<BigInt> = data.exponents[s.m].iter().map(|&e| BigInt::from(e)).collect();
        g.push(BigInt::from(s.degree));
        ok &= gcd_all(&g) == BigInt::from(1) && s.gcd == 1;
    }
    if let Some(Value::Array(expected)) = p.get("expect_steps") {
        ok &= expected.len() <= t.steps.len();
        for (want, got) in expected.iter().zip(&t.steps) {
            let got = serde_json::to_value(got).map_err(fail)?;
            for (k, v) in want.as_object().ok_or_else(|| ClaimError::Params("expect_steps entries must be objects".into()))? {
                ok &= match k.as_str() {
                    // weights may be given as a name → degree object
                    "weights" if v.is_object() => {
                        let pairs: Vec<(String, i64)> = serde_json::from_value(got["weights"].clone()).map_err(fail)?;
                        let table: BTreeMap<String, i64> = pairs.into_iter().collect();
                        let want: BTreeMap<String, i64> = serde_json::from_value(v.clone()).map_err(fail)?;
                        want == table
                    }
                    _ => got.get(k) == Some(v),
                };
            }
        }
    }
    let witness = json!({ "steps": t.steps, "ring": t.ring.to_presentation() });
    Ok(Outcome::new(Verdict::from_bool(ok), witness))
}

fn threefold<F: Field>(p: &Params, with_kappa: bool) -> Result<(Threefold<F>, ufdlab::poly::Polynomial<F>), ClaimError> {
    let vars = VarTable::new(&["x"]).map_err(fail)?;
    let polys = p.poly_list::<F>(&vars, "p")?;
    let n = polys.len();
    let ones = |key: &str| -> Result<Vec<F>, ClaimError> { if p.has(key) { p.scalars::<F>(key) } else { Ok(vec![F::one(); n]) } };
    let data = ThreefoldData { p: polys, u: ones("u")?, v: ones("v")?, a: p.i64_list("a")?, b: p.i64_list("b")? };
    let key = if with_kappa { "kappa" } else { "q" };
    let q = p.poly::<F>(&vars, key)?;
    let tf = threefold_family(&data, if with_kappa { Some(&q) } else { None }).map_err(fail)?;
    Ok((tf, q))
}

pub(super) fn threefold_jacobian(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => jacobian::<F>(p))
}

fn jacobian<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let (tf, q) = threefold::<F>(p, false)?;
    let t = jacobian_tangent_dim(&tf, &q).map_err(fail)?;
    let n = tf.data.p.len() as u64;
    let mut ok = t.tangent_dim as u64 == p.u64_or("expect_tangent_dim", n + 3)?;
    if p.has("expect_rank") {
        ok &= t.rank as u64 == p.u64("expect_rank")?;
    }
    let witness = json!({ "relations": tf.ring.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>(), "tangent": t });
    Ok(Outcome::new(Verdict::from_bool(ok), witness))
}

pub(super) fn threefold_kappa(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => kappa::<F>(p))
}

fn kappa<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let (tf, _) = threefold::<F>(p, true)?;
    let k = tf.kappa.clone().ok_or_else(|| ClaimError::Rejected("no kappa check was produced".into()))?;
    let verdict = k.verdict.and(Verdict::from_bool(tf.lemma_grading_ok));
    let witness = json!({
        "relations": tf.ring.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "lemma_weights": tf.lemma_weights,
        "lemma_grading_ok": tf.lemma_grading_ok,
        "kappa": k,
    });
    Ok(Outcome::new(verdict, witness))
}
