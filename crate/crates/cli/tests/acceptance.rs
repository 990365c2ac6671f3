//! Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
//!
//! Criteria 1-9 are checked directly against the library; criterion 10 runs
//! the fixture suite through the binary and validates its JSON output.
//! A criterion listed in `KNOWN_UNATTAINABLE` is expected to fail; the process
//! exits nonzero on any other failure, or if a known failure starts passing.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::{json, Value};
use ufdlab::coeff::{prime_avoid, Fp};
use ufdlab::constructions::{
    jacobian_tangent_dim, pham_brieskorn, threefold_family, trinomial_ring, w_chain, PhamBrieskornCase, ThreefoldData, TrinomialData,
};
use ufdlab::counterexample::{coordinate_checks, expand_z0, expand_z0_bprime, m_order_certificate, s_sequence, x_order_certificate_bprime};
use ufdlab::groebner::{brute_force_irreducible, elim_ideal_named, ideal_equal, saturation, Ideal, Irreducibility};
use ufdlab::omega::{in_x_omega, normal_form, OmegaPoly};
use ufdlab::poly::{Polynomial, VarTable};
use ufdlab::{Verdict, F5, Q};
use ufdlab_cli::{run_claim, Status};

type Check = Result<(), String>;

const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    4,
    "for t = 1 the chain is W_i = J_i = (u, v)^i, not (u) + (v^i) with J_i = (1); that shape needs t in every bA + s^iA, e.g. t = u",
)];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn fixture(criterion: u32) -> Vec<(String, Value)> {
    let fixtures = ufdlab_cli::suite::load("acceptance").expect("fixtures parse");
    let f = fixtures.into_iter().find(|f| f.criterion == criterion).expect("fixture present");
    f.items.into_iter().map(|i| (i.claim, i.params)).collect()
}

fn c1() -> Check {
    let (id, params) = fixture(1).remove(0);
    ensure(params["ideals"] == 20 && params["queries"] == 100 && params["degree_bound"] == 6 && params["field"] == "F5", || "fixture drifted".into())?;
    let r = run_claim(&id, &params).map_err(e)?;
    let w = &r.witness;
    ensure(r.status == Status::Verified, || format!("status {:?}", r.status))?;
    ensure(w["s_polynomials_reduce"] == true && w["agreements"] == 100 && w["queries"] == 100, || format!("summary {}", w["agreements"]))?;
    for d in w["details"].as_array().unwrap() {
        let vars = d["variables"].as_array().unwrap().len();
        let gens = d["generators"].as_array().unwrap();
        ensure((1..=3).contains(&vars) && (1..=4).contains(&gens.len()), || "ideal shape out of range".into())?;
    }
    Ok(())
}

fn c2() -> Check {
        let mut cases = 0;
    for a1 in -6..=6i64 {
        for a2 in -6..=6i64 {
            for b in -6..=6i64 {
                for c in -6..=6i64 {
                    if c == 0 || gcd(gcd(a1, a2), gcd(b, c)) != 1 {
                        continue;
                    }
                    cases += 1;
                    let m = prime_avoid(&[BigInt::from(a1), BigInt::from(a2)], &BigInt::from(b), &BigInt::from(c)).map_err(e)?;
                    let m: Vec<i64> = m.iter().map(|x| i64::try_from(x).unwrap()).collect();
                    ensure(gcd(c, b + m[0] * a1 + m[1] * a2) == 1, || format!("({a1}, {a2}, {b}, {c}) gave {m:?}"))?;
                }
            }
        }
    }
    ensure(cases > 0, || "no cases".into())
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn c3() -> Check {
    let vars = VarTable::new(&["u", "v", "X"]).map_err(e)?;
    let i = Ideal::<F5>::parse(&vars, &["u*X - v"]).map_err(e)?;
    let u = Polynomial::parse(&vars, "u").map_err(e)?;
    let sat = saturation(&i, &u).map_err(e)?;
    ensure(sat.stabilized && ideal_equal(&sat.ideal, &i).map_err(e)?, || "saturation differs".into())
}

fn c4() -> Check {
    let r = VarTable::new(&["u", "v", "w"]).map_err(e)?;
    let p = |s: &str| Polynomial::<F5>::parse(&r, s).unwrap();
    let chain = w_chain(&r, &p("u"), &p("v"), &p("w"), 5).map_err(e)?;
    let m = Ideal::<F5>::parse(&r, &["u", "v"]).map_err(e)?;
    for i in 0..=5 {
        ensure(ideal_equal(chain.w(i), &m.pow(i as u32).map_err(e)?).map_err(e)?, || format!("(u,v,w): W_{i} ≠ (u,v)^{i}"))?;
    }
    let chain = w_chain(&r, &p("u"), &p("v"), &p("1"), 5).map_err(e)?;
    for i in 0..=5 {
        let want = Ideal::new(&r, vec![p("u"), p("v").pow(i as u64)]).map_err(e)?;
        ensure(ideal_equal(chain.w(i), &want).map_err(e)?, || format!("(u,v,1): W_{i} ≠ (u) + (v^{i})"))?;
        ensure(chain.j(i).is_unit().map_err(e)?, || format!("(u,v,1): J_{i} ≠ (1)"))?;
    }
    Ok(())
}

fn c5() -> Check {
    let r = VarTable::new(&["u", "v"]).map_err(e)?;
    let p = |s: &str| Polynomial::<F5>::parse(&r, s).unwrap();
    let chain = w_chain(&r, &p("u + v"), &p("u"), &p("v"), 4).map_err(e)?;
    let big = VarTable::new(&["u", "v", "X"]).map_err(e)?;
    for i in 0..=4u32 {
        let si = format!("u^{i}");
        let lhs = elim_ideal_named(&Ideal::<F5>::parse(&big, &[si.as_str(), "u*v*X - u - v"]).map_err(e)?, &["u", "v"]).map_err(e)?;
        let lhs = lhs.embed(&r).map_err(e)?;
        ensure(ideal_equal(&lhs, chain.w(i as usize)).map_err(e)?, || format!("level {i} differs"))?;
    }
    Ok(())
}

fn c6() -> Check {
    let nf = normal_form(&OmegaPoly::<Q>::parse("z0^2").map_err(e)?).map_err(e)?;
    ensure(nf.to_poly().map_err(e)? == OmegaPoly::parse("-z1 - x^2*z2").map_err(e)?, || format!("normal form {}", nf.render()))?;
    for i in 1..=3u32 {
        let s = format!("z{i} + z0^{}", 1u32 << i);
        ensure(in_x_omega(&OmegaPoly::<Q>::parse(&s).map_err(e)?).map_err(e)?, || format!("{s} not in xΩ"))?;
    }
    for i in 0..=4 {
        ensure(!in_x_omega(&OmegaPoly::<Q>::parse(&format!("z{i}")).map_err(e)?).map_err(e)?, || format!("z{i} in xΩ"))?;
    }
    let (id, params) = fixture(6).into_iter().find(|(id, _)| id == "omega.confluence").unwrap();
    ensure(params["count"] == 100 && params["max_size"] == 6 && params["max_index"] == 4, || "fixture drifted".into())?;
    let r = run_claim(&id, &params).map_err(e)?;
    ensure(r.status == Status::Verified && r.witness["agreements"] == 100, || "pivot rules disagree".into())
}

fn c7() -> Check {
    for n in 0..=10u32 {
        let c = m_order_certificate::<Q>(n).map_err(e)?;
        ensure(c.verdict == Verdict::Verified && c.recheck() && c.log.iter().all(|s| s.increment == 1), || format!("m-order {n}"))?;
        let b = x_order_certificate_bprime::<Q>(n).map_err(e)?;
        ensure(b.verdict == Verdict::Verified && b.recheck(), || format!("x-order {n}"))?;
    }
    for n in 0..=3u32 {
        let x = expand_z0::<Q>(n).map_err(e)?;
        let low = x.poly.terms().any(|(m, _)| m.exponent(0) + m.exponent(1) < n as i64);
        ensure(!low, || format!("expand_z0({n}) has a term of (x, y)-degree below {n}"))?;
        let c = coordinate_checks::<Q>(n).map_err(e)?;
        ensure(c.automorphism_image && c.modulo_x && c.modulo_y, || format!("coordinates at n = {n}"))?;
    }
    for n in 0..=2u32 {
        let x = expand_z0_bprime::<Q>(n).map_err(e)?;
        let xn = Polynomial::var_index(x.poly.vars(), 0).pow(n as u64);
        ensure(x.poly.exact_div(&xn).is_some(), || format!("z0 / x^{n} is not a polynomial in B'"))?;
    }
    let s: Vec<BigInt> = s_sequence(5).values().to_vec();
    ensure(s == [2, 3, 6, 24, 180].map(BigInt::from), || format!("s-sequence {s:?}"))
}

fn c8() -> Check {
    let x = VarTable::new(&["x"]).map_err(e)?;
    let px = Polynomial::<F5>::parse(&x, "x").map_err(e)?;
    let data = |a: i64| ThreefoldData { p: vec![px.clone()], u: vec![Fp::new(1)], v: vec![Fp::new(1)], a: vec![a], b: vec![3] };
    let t = jacobian_tangent_dim(&threefold_family(&data(2), None).map_err(e)?, &px).map_err(e)?;
    ensure(t.rank == 0 && t.tangent_dim == 4, || format!("rank {}, tangent {}", t.rank, t.tangent_dim))?;
    let rejected = threefold_family(&data(1), None).map_err(e).and_then(|tf| jacobian_tangent_dim(&tf, &px).map_err(e));
    ensure(rejected.is_err(), || "a_1 = 1 accepted".into())
}

fn c9() -> Check {
    let mori = TrinomialData::<Q> {
        partition: vec![1, 1, 1],
        exponents: vec![vec![2], vec![3], vec![5]],
        constants: vec![Q::from_integer(1.into())],
        names: Some(vec![vec!["x".into()], vec!["y".into()], vec!["z".into()]]),
    };
    let t = trinomial_ring(&mori).map_err(e)?;
    let s = &t.steps[0];
    ensure(s.weights == [("x".to_string(), 3), ("y".to_string(), 2)] && s.degree == 6 && s.gcd == 1, || format!("{s:?}"))?;
    ensure(pham_brieskorn::<Q>(&[2, 2, 3]).is_err(), || "(2,2,3) accepted".into())?;
    ensure(pham_brieskorn::<Q>(&[2, 3, 4, 5]).map_err(e)?.case == PhamBrieskornCase::Long, || "(2,3,4,5) not case (1)".into())?;
    let v = VarTable::new(&["x", "y"]).map_err(e)?;
    let f = Polynomial::<F5>::parse(&v, "x^2 + y^3").map_err(e)?;
    ensure(matches!(brute_force_irreducible(&f, 2).map_err(e)?, Irreducibility::Irreducible), || "x^2 + y^3 factors".into())
}

fn c10() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_ufdlab")).args(["claim", "run-all", "--suite", "acceptance"]).output().map_err(e)?;
    ensure(out.status.code() == Some(0), || format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(e)?;
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).map_err(e)?;
    let validator = jsonschema::validator_for(&schema).map_err(e)?;
    let errors: Vec<String> = validator.iter_errors(&report).map(|err| err.to_string()).collect();
    ensure(errors.is_empty(), || errors.join("; "))?;
    let criteria: Vec<u64> = report["items"].as_array().unwrap().iter().filter_map(|i| i["criterion"].as_u64()).collect();
    ensure((1..=9).all(|c| criteria.contains(&c)), || format!("criteria covered: {criteria:?}"))?;
    ensure(report["items"].as_array().unwrap().iter().all(|i| i["status"] == json!("verified")), || "a suite item is not verified".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Check); 10] = [
        (1, "Groebner soundness", 10_000, c1),
        (2, "prime avoidance", 5_000, c2),
        (3, "Samuel kernel", 1_000, c3),
        (4, "W-chain shapes", 5_000, c4),
        (5, "level-wise elimination", 10_000, c5),
        (6, "Omega suite", 20_000, c6),
        (7, "counterexample certificates", 30_000, c7),
        (8, "Jacobian", 1_000, c8),
        (9, "trinomial and Pham-Brieskorn", 10_000, c9),
        (10, "CLI end-to-end", 120_000, c10),
    ];
    let mut unexpected = 0;
    for (n, name, limit_ms, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| ensure(elapsed <= Duration::from_millis(limit_ms), || format!("took {} ms, limit {limit_ms} ms", elapsed.as_millis())));
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        match (&result, known) {
            (Ok(()), None) => println!("criterion {n:>2} PASS {name} ({} ms)", elapsed.as_millis()),
            (Ok(()), Some(_)) => {
                unexpected += 1;
                println!("criterion {n:>2} PASS {name} ({} ms), but it is listed as unattainable", elapsed.as_millis());
            }
            (Err(msg), None) => {
                unexpected += 1;
                println!("criterion {n:>2} FAIL {name} ({} ms): {msg}", elapsed.as_millis());
            }
            (Err(msg), Some(why)) => println!("criterion {n:>2} FAIL {name} ({} ms): {msg} [known: {why}]", elapsed.as_millis()),
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
