use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use ufdlab::coeff::{prime_avoid as avoid, Field};
use ufdlab::constructions::{check_condition_p, fourth_extension, lemma_level_check, present_extension, w_chain, PresentedRing};
use ufdlab::groebner::{brute_force_member, ideal_equal, monomials_up_to, saturation, Ideal};
use ufdlab::poly::{Grading, Polynomial, VarTable};
use ufdlab::Verdict;

use super::basis_json;
use crate::params::Params;
use crate::runner::{fail, ClaimError, Outcome};

fn nonzero_scalar<F: Field>(rng: &mut ChaCha8Rng) -> F {
    match F::elements() {
        Some(all) => loop {
            let c = all[rng.gen_range(0..all.len())].clone();
            if !c.is_zero() {
                return c;
            }
        },
        None => F::from_i64([-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)]),
    }
}

/// Up to `terms` random terms of degree `≤ deg`, or exactly `deg` when `homogeneous`.
fn random_poly<F: Field>(vars: &Arc<VarTable>, rng: &mut ChaCha8Rng, deg: i64, terms: usize, homogeneous: bool) -> Polynomial<F> {
    let pool: Vec<_> = monomials_up_to(vars.len(), deg).into_iter().filter(|m| !homogeneous || m.total_degree() == deg).collect();
    loop {
        let k = rng.gen_range(1..=terms);
        let p = Polynomial::from_terms(vars, (0..k).map(|_| (pool[rng.gen_range(0..pool.len())].clone(), nonzero_scalar::<F>(rng)))).expect("monomials come from the table");
        if !p.is_zero() {
            return p;
        }
    }
}

pub(super) fn groebner_soundness(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => soundness::<F>(p))
}

/// Even-numbered ideals have homogeneous generators. For those, a query of
/// degree `≤ bound` is a member iff each homogeneous component has a
/// certificate of degree `≤ bound`, so the oracle decides membership exactly.
/// Odd-numbered ideals are inhomogeneous, where a member may need a larger
/// certificate; such a query is reported as beyond the bound, never as agreement.
fn soundness<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let ideals = p.u64_or("ideals", 20)?;
    let max_vars = p.u64_or("max_vars", 3)?.max(1) as usize;
    let max_gens = p.u64_or("max_gens", 4)?.max(1) as usize;
    let max_degree = p.u64_or("max_degree", 3)?.max(1) as i64;
    let max_terms = p.u64_or("max_terms", 4)?.max(1) as usize;
    let queries = p.u64_or("queries", 100)?;
    let bound = p.u64_or("degree_bound", 6)? as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(p.u64_or("seed", 1)?);
    if bound < max_degree {
        return Err(ClaimError::Params("degree_bound must be at least max_degree".into()));
    }

    let (mut spoly_ok, mut agree, mut members, mut asked, mut beyond, mut wrong) = (true, 0u64, 0u64, 0u64, 0u64, 0u64);
    let mut details = Vec::new();
    for k in 0..ideals {
        let n = rng.gen_range(1..=max_vars);
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let vars = VarTable::new(&names).map_err(fail)?;
        let homogeneous = k % 2 == 0;
        let gens: Vec<Polynomial<F>> = (0..rng.gen_range(1..=max_gens))
            .map(|_| {
                let d = rng.gen_range(1..=max_degree);
                random_poly(&vars, &mut rng, d, max_terms, homogeneous)
            })
            .collect();
        let ideal = Ideal::new(&vars, gens.clone()).map_err(fail)?;
        let gb = ideal.groebner().map_err(fail)?;
        let closed = gb.is_groebner().map_err(fail)?;
        spoly_ok &= closed;

        let count = queries / ideals.max(1) + u64::from(k < queries % ideals.max(1));
        let mut rows = Vec::new();
        for j in 0..count {
            let constructed = j % 2 == 0;
            let f = if constructed {
                // a member with a certificate inside the bound
                loop {
                    let mut f = Polynomial::zero(&vars);
                    for g in &gens {
                        let room = bound - g.total_degree().unwrap_or(0);
                        f = &f + &(&random_poly::<F>(&vars, &mut rng, room, max_terms, false) * g);
                    }
                    if !f.is_zero() {
                        break f;
                    }
                }
            } else {
                random_poly(&vars, &mut rng, bound, max_terms, false)
            };
            let by_basis = gb.contains(&f).map_err(fail)?;
            let by_oracle = brute_force_member(&f, &gens, bound).map_err(fail)?;
            asked += 1;
            members += u64::from(by_basis);
            let outcome = match (by_basis, by_oracle) {
                (a, b) if a == b => {
                    agree += 1;
                    "agree"
                }
                (true, false) if !homogeneous => {
                    beyond += 1;
                    "beyond-bound"
                }
                _ => {
                    wrong += 1;
                    "disagree"
                }
            };
            rows.push(json!({
                "f": f.to_string(),
                "constructed_member": constructed,
                "groebner": by_basis,
                "oracle": by_oracle,
                "outcome": outcome,
            }));
        }
        details.push(json!({
            "variables": names,
            "homogeneous": homogeneous,
            "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "basis": gb.polys().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "s_polynomials_reduce": closed,
            "queries": rows,
        }));
    }
    let verdict = if !spoly_ok || wrong > 0 {
        Verdict::Refuted
    } else if beyond > 0 {
        Verdict::Unknown(bound as u64)
    } else {
        Verdict::Verified
    };
    let witness = json!({
        "field": F::name(),
        "ideals": ideals,
        "queries": asked,
        "agreements": agree,
        "members": members,
        "beyond_bound": beyond,
        "degree_bound": bound,
        "s_polynomials_reduce": spoly_ok,
        "details": details,
    });
    Ok(Outcome::new(verdict, witness))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exhaustive over `a ∈ [-r, r]^arity`, `b, c ∈ [-r, r]` with `c ≠ 0` and `gcd = 1`.
pub(super) fn prime_avoid(p: &Params) -> Result<Outcome, ClaimError> {
    let r = p.u64_or("range", 6)? as i64;
    let arity = p.u64_or("arity", 2)? as usize;
    if r > 20 || arity == 0 || arity > 4 {
        return Err(ClaimError::Params("need 1 ≤ arity ≤ 4 and range ≤ 20".into()));
    }
    let side = (2 * r + 1) as usize;
    let total = side.pow(arity as u32 + 2);
    let (mut cases, mut failures) = (0u64, Vec::new());
    for code in 0..total {
        let mut rest = code;
        let mut v = Vec::with_capacity(arity + 2);
        for _ in 0..arity + 2 {
            v.push((rest % side) as i64 - r);
            rest /= side;
        }
        let (a, b, c) = (&v[..arity], v[arity], v[arity + 1]);
        if c == 0 || v.iter().fold(0i128, |g, &x| gcd(g, x as i128)) != 1 {
            continue;
        }
        cases += 1;
        let big: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
        let ok = match avoid(&big, &BigInt::from(b), &BigInt::from(c)) {
            Ok(m) => {
                let m: Option<Vec<i128>> = m.iter().map(|x| i128::try_from(x).ok()).collect();
                m.is_some_and(|m| {
                    let s = b as i128 + m.iter().zip(a).map(|(mi, &ai)| mi * ai as i128).sum::<i128>();
                    gcd(c as i128, s) == 1
                })
            }
            Err(_) => false,
        };
        if !ok && failures.len() < 10 {
            failures.push(json!({ "a": a, "b": b, "c": c }));
        }
    }
    let verdict = Verdict::from_bool(failures.is_empty());
    Ok(Outcome::new(verdict, json!({ "range": r, "arity": arity, "cases": cases, "failures": failures })))
}

pub(super) fn samuel_kernel(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => kernel::<F>(p))
}

fn kernel<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let vars = p.vars("variables", &["u", "v"])?;
    let (a, b) = (p.poly::<F>(&vars, "a")?, p.poly::<F>(&vars, "b")?);
    let base = PresentedRing::free(&vars, None, "polynomial ring").map_err(fail)?;
    let ext = present_extension(&base, &a, &b).map_err(fail)?;
    // recomputed here rather than trusting the builder's own flag
    let rel = ext.ring.ideal().map_err(fail)?;
    let sat = saturation(&rel, &a.embed(ext.ring.vars()).map_err(fail)?).map_err(fail)?;
    let verdict = if sat.stabilized {
        Verdict::from_bool(ideal_equal(&sat.ideal, &rel).map_err(fail)?).and(ext.kernel)
    } else {
        Verdict::Unknown(sat.steps as u64)
    };
    let witness = json!({
        "relation": ext.ring.relations()[0].to_string(),
        "variable": ext.variable,
        "saturation": basis_json(&sat.ideal)?,
        "saturation_steps": sat.steps,
        "stabilized": sat.stabilized,
    });
    Ok(Outcome::new(verdict, witness))
}

fn graded_base<F: Field>(p: &Params) -> Result<PresentedRing<F>, ClaimError> {
    let vars = p.vars("variables", &[])?;
    let relations = if p.has("relations") { p.poly_list::<F>(&vars, "relations")? } else { Vec::new() };
    let grading = if p.has("weights") { Some(Grading::new(&vars, p.i64_list("weights")?).map_err(fail)?) } else { None };
    PresentedRing::new(&vars, relations, grading, "input").map_err(fail)
}

pub(super) fn samuel_fourth(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => fourth::<F>(p))
}

fn fourth<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let base = graded_base::<F>(p)?;
    let (a, b) = (p.poly::<F>(base.vars(), "a")?, p.poly::<F>(base.vars(), "b")?);
    let ext = fourth_extension(&base, &a, &b, p.i64("n")?).map_err(fail)?;
    let witness = json!({
        "x_degree": ext.x_degree,
        "samuel_kernel": ext.samuel.kernel,
        "ring": ext.ring.to_presentation(),
    });
    Ok(Outcome::new(ext.samuel.kernel, witness))
}

pub(super) fn condition_p(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => condition::<F>(p))
}

fn condition<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let ring = graded_base::<F>(p)?;
    let (a, b) = (p.poly::<F>(ring.vars(), "a")?, p.poly::<F>(ring.vars(), "b")?);
    let factors = if p.has("factors") { p.poly_list::<F>(ring.vars(), "factors")? } else { Vec::new() };
    let r = check_condition_p(&ring, &a, &b, &factors, p.u32_or("level", 3)?).map_err(fail)?;
    let verdict = [&r.clause_i, &r.clause_ii, &r.clause_iii, &r.clause_iv].iter().fold(Verdict::Verified, |v, c| v.and(c.verdict));
    let witness = serde_json::to_value(&r).map_err(fail)?;
    Ok(Outcome::new(verdict, witness).with_note("clause (ii) is only probed by a bounded zero-divisor search, and clause (iv) only in truncation"))
}

pub(super) fn wchain_levels(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => levels::<F>(p))
}

fn levels<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let vars = p.vars("variables", &["u", "v", "w"])?;
    let (b, s, t) = (p.poly::<F>(&vars, "b")?, p.poly::<F>(&vars, "s")?, p.poly::<F>(&vars, "t")?);
    let n = p.u32_or("levels", 5)?;
    let expect = if p.has("expect") { Some(p.str("expect")?) } else { None };
    let expect_j = if p.has("expect_j") { Some(p.str("expect_j")?) } else { None };
    let chain = w_chain(&vars, &b, &s, &t, n).map_err(fail)?;
    let mut ok = chain.nested;
    let mut rows = Vec::new();
    for i in 0..=n as usize {
        let (w, j) = (chain.w(i), chain.j(i));
        let w_ok = match expect {
            None => None,
            Some("bs-power") => Some(Ideal::new(&vars, vec![b.clone(), s.clone()]).and_then(|m| m.pow(i as u32)).map_err(fail)?),
            Some("b-plus-s-power") => Some(Ideal::new(&vars, vec![b.clone(), s.pow(i as u64)]).map_err(fail)?),
            Some(other) => return Err(ClaimError::Params(format!("unknown expectation `{other}`"))),
        }
        .map(|e| ideal_equal(w, &e))
        .transpose()
        .map_err(fail)?;
        let j_ok = match expect_j {
            None => None,
            Some("unit") => Some(j.is_unit().map_err(fail)?),
            Some("w") => Some(ideal_equal(j, w).map_err(fail)?),
            Some(other) => return Err(ClaimError::Params(format!("unknown expectation `{other}` for J"))),
        };
        ok &= w_ok.unwrap_or(true) && j_ok.unwrap_or(true);
        rows.push(json!({ "i": i, "w": basis_json(w)?, "j": basis_json(j)?, "w_matches": w_ok, "j_matches": j_ok }));
    }
    Ok(Outcome::new(Verdict::from_bool(ok), json!({ "nested": chain.nested, "levels": rows })))
}

pub(super) fn wchain_identity(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F5")?, F => identity::<F>(p))
}

fn identity<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let vars = p.vars("variables", &["u", "v"])?;
    let (b, s, t) = (p.poly::<F>(&vars, "b")?, p.poly::<F>(&vars, "s")?, p.poly::<F>(&vars, "t")?);
    let n = p.u32_or("levels", 4)?;
    let check = lemma_level_check(&vars, &b, &s, &t, n).map_err(fail)?;
    let chain = w_chain(&vars, &b, &s, &t, n).map_err(fail)?;
    let rows = check
        .levels
        .iter()
        .enumerate()
        .map(|(i, &m)| Ok(json!({ "i": i, "matches": m, "w": basis_json(chain.w(i))? })))
        .collect::<Result<Vec<Value>, ClaimError>>()?;
    Ok(Outcome::new(check.verdict, json!({ "a": (&s * &t).to_string(), "levels": rows })))
}
