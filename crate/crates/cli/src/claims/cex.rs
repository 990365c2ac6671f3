use num_bigint::BigInt;
use serde_json::{json, Value};
use ufdlab::coeff::Field;
use ufdlab::counterexample::{coordinate_checks, CexError, m_order_certificate, s_sequence, substitution_identity, x_order_certificate_bprime, OrderCert};
use ufdlab::Verdict;

use super::big_json;
use crate::params::Params;
use crate::runner::{fail, ClaimError, Outcome};

const EXTERNAL: &str = "unique factorization of the localized ring rests on an external construction; only the finite membership facts are checked";

/// `[n]` for `{n}`, `0..=up_to` for `{up_to}`.
fn range(p: &Params) -> Result<Vec<u32>, ClaimError> {
    match (p.has("n"), p.has("up_to")) {
        (true, false) => Ok(vec![p.u32("n")?]),
        (false, true) => Ok((0..=p.u32("up_to")?).collect()),
        _ => Err(ClaimError::Params("give exactly one of `n` and `up_to`".into())),
    }
}

pub(super) fn sseq(p: &Params) -> Result<Outcome, ClaimError> {
    let n = p.u64("n")? as usize;
    if n > 40 {
        return Err(ClaimError::Params("need n ≤ 40".into()));
    }
    let s = s_sequence(n);
    // direct products, independent of the running product in the library
    let mut ok = (1..=n).all(|k| {
        let direct = match k {
            1 => BigInt::from(2),
            2 => BigInt::from(3),
            _ => BigInt::from(k) * (1..=k - 2).map(|i| s.get(i).clone()).product::<BigInt>(),
        };
        &direct == s.get(k)
    });
    if p.has("expect") {
        let want: Vec<Value> = p.get("expect").and_then(Value::as_array).cloned().unwrap_or_default();
        ok &= want == s.values().iter().map(big_json).collect::<Vec<_>>();
    }
    Ok(Outcome::new(Verdict::from_bool(ok), json!({ "values": s.values().iter().map(big_json).collect::<Vec<_>>() })))
}

fn certificates(p: &Params, field: String, make: fn(u32) -> Result<OrderCert, CexError>) -> Result<Outcome, ClaimError> {
    let mut verdict = Verdict::Verified;
    let mut certs = Vec::new();
    for n in range(p)? {
        let c = make(n).map_err(fail)?;
        // the log is replayed independently of how the certificate was produced
        verdict = verdict.and(c.verdict).and(Verdict::from_bool(c.recheck()));
        certs.push(serde_json::to_value(&c).map_err(fail)?);
    }
    Ok(Outcome::new(verdict, json!({ "field": field, "certificates": certs })).with_note(EXTERNAL))
}

pub(super) fn m_order(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => certificates(p, F::name(), m_order_certificate::<F>))
}

pub(super) fn x_order(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => certificates(p, F::name(), x_order_certificate_bprime::<F>))
}

pub(super) fn coords(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("QQ")?, F => coords_in::<F>(p))
}

fn coords_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let mut verdict = Verdict::Verified;
    let mut rows = Vec::new();
    for n in range(p)? {
        let c = coordinate_checks::<F>(n).map_err(fail)?;
        verdict = verdict.and(c.verdict);
        rows.push(serde_json::to_value(&c).map_err(fail)?);
    }
    Ok(Outcome::new(verdict, json!({ "checks": rows })).with_note(EXTERNAL))
}

pub(super) fn identity(p: &Params) -> Result<Outcome, ClaimError> {
    with_field!(p.field("F32003")?, F => identity_in::<F>(p))
}

fn identity_in<F: Field>(p: &Params) -> Result<Outcome, ClaimError> {
    let depth = p.u32("depth")?;
    let ok = substitution_identity::<F>(depth).map_err(fail)?;
    let mut out = Outcome::new(Verdict::from_bool(ok), json!({ "depth": depth, "field": F::name(), "reproduces_z0": ok }));
    if F::elements().is_some() {
        out = out.with_note("checked over a prime field; the counterexample itself lives in characteristic zero");
    }
    Ok(out)
}
