use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use ufdlab::coeff::Field;
use ufdlab::omega::{in_x_omega, normal_form, normal_form_with, x_adic_floor, OmegaMonomial, OmegaPoly, Pivot};
use ufdlab::Verdict;

use crate::params::Params;
use crate::runner::{fail, ClaimError, Outcome};

fn element<F: Field>(p: &Params, key: &str) -> Result<OmegaPoly<F>, ClaimError> {
    OmegaPoly::parse(p.str(key)?).map_err(|e| ClaimError::Params(format!("parameter `{key}`: {e}")))
}

pub(super) fn basis(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => basis_in::<F>(p))
}

fn basis_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let e = element::<F>(p, "element")?;
    let nf = normal_form(&e).map_err(fail)?;
    let value = nf.to_poly().map_err(fail)?;
    // a normal form is fixed by the rewriting and stays in the input degrees
    let mut ok = normal_form(&value).map_err(fail)?.components == nf.components;
    let degrees = e.degrees();
    ok &= nf.components.keys().all(|d| degrees.contains(d));
    if p.has("expect") {
        ok &= value == element::<F>(p, "expect")?;
    }
    let witness = json!({
        "element": e.to_string(),
        "normal_form": value.to_string(),
        "expansion": nf.render(),
        "steps": nf.steps,
    });
    Ok(Outcome::new(Verdict::from_bool(ok), witness))
}

pub(super) fn z_relations(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => z_relations_in::<F>(p))
}

/// `z_i + z_0^{2^i} ∈ xΩ` for `1 ≤ i ≤ in_x_up_to`, `z_i ∉ xΩ` for `0 ≤ i ≤ outside_up_to`.
fn z_relations_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let (inside, outside) = if p.has("i") {
        let i = p.u32("i")?;
        (i, i)
    } else {
        (p.u32_or("in_x_up_to", 3)?, p.u32_or("outside_up_to", 4)?)
    };
    if inside > 5 || outside > 32 {
        return Err(ClaimError::Params("need in_x_up_to ≤ 5 and outside_up_to ≤ 32".into()));
    }
    let mut ok = true;
    let mut rows = Vec::new();
    for i in 1..=inside as usize {
        let z0 = OmegaMonomial::z(0).map_err(fail)?;
        let mut power = OmegaMonomial::one();
        for _ in 0..1u32 << i {
            power = power.mul(&z0).map_err(fail)?;
        }
        let e = OmegaPoly::from_terms([(OmegaMonomial::z(i).map_err(fail)?, F::one()), (power, F::one())]);
        let nf = normal_form(&e).map_err(fail)?;
        let hit = in_x_omega(&e).map_err(fail)?;
        ok &= hit;
        rows.push(json!({ "element": e.to_string(), "in_x_omega": hit, "expansion": nf.render() }));
    }
    for i in 0..=outside as usize {
        let e = OmegaPoly::monomial(OmegaMonomial::z(i).map_err(fail)?, F::one());
        let hit = in_x_omega(&e).map_err(fail)?;
        ok &= !hit;
        rows.push(json!({ "element": e.to_string(), "in_x_omega": hit, "expansion": normal_form(&e).map_err(fail)?.render() }));
    }
    Ok(Outcome::new(Verdict::from_bool(ok), json!({ "checks": rows })))
}

pub(super) fn confluence(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => confluence_in::<F>(p))
}

/// Random monomials `x^r z^e` with `Σ e ≤ max_size`, indices `≤ max_index`,
/// normalized under both pivot rules; the rendered expansions must be identical.
fn confluence_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let count = p.u64_or("count", 100)?;
    let max_size = p.u64_or("max_size", 6)? as u32;
    let max_index = p.u64_or("max_index", 4)? as usize;
    let max_x = p.u64_or("max_x", 3)? as u128;
    if max_size > 12 || max_index > 8 {
        return Err(ClaimError::Params("need max_size ≤ 12 and max_index ≤ 8".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.u64_or("seed", 1)?);
    let (mut agree, mut steps, mut samples, mut mismatches) = (0u64, 0u64, Vec::new(), Vec::new());
    for _ in 0..count {
        let size = rng.gen_range(1..=max_size.max(1));
        let mut e = vec![0u32; max_index + 1];
        for _ in 0..size {
            e[rng.gen_range(0..=max_index)] += 1;
        }
        let m = OmegaMonomial::new(rng.gen_range(0..=max_x), e).map_err(fail)?;
        let degree = m.degree();
        let el = OmegaPoly::monomial(m, F::one());
        let a = normal_form_with(&el, Pivot::Largest).map_err(fail)?;
        let b = normal_form_with(&el, Pivot::Smallest).map_err(fail)?;
        let same = a.render() == b.render() && a.components.keys().all(|&d| d == degree);
        steps += a.steps + b.steps;
        if same {
            agree += 1;
        } else if mismatches.len() < 5 {
            mismatches.push(json!({ "element": el.to_string(), "largest": a.render(), "smallest": b.render() }));
        }
        if samples.len() < 5 {
            samples.push(json!({ "element": el.to_string(), "expansion": a.render() }));
        }
    }
    let witness = json!({ "count": count, "agreements": agree, "rewrite_steps": steps, "samples": samples, "mismatches": mismatches });
    Ok(Outcome::new(Verdict::from_bool(agree == count), witness))
}

pub(super) fn x_adic(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => x_adic_in::<F>(p))
}

fn x_adic_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let e = element::<F>(p, "element")?;
    let m = x_adic_floor(&e).map_err(fail)?;
    let ok = if p.has("expect") { m == p.u64("expect")? as u128 } else { true };
    let witness = json!({ "element": e.to_string(), "floor": m as u64, "expansion": normal_form(&e).map_err(fail)?.render() });
    Ok(Outcome::new(Verdict::from_bool(ok), witness))
}
