use serde::Serialize;

use crate::coeff::Field;
use crate::groebner::{ideal_equal, monomials_up_to, Ideal};
use crate::poly::{Monomial, Polynomial};
use crate::verdict::Verdict;

use super::{coprimality_witness, ConstructionError, PresentedRing};

/// Candidate elements examined per prime in the zero-divisor search.
pub const ZERO_DIVISOR_CANDIDATE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub verdict: Verdict,
    /// Set when only a finite truncation of the clause was examined.
    pub truncated: bool,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ClauseReport {
    fn new(verdict: Verdict, truncated: bool, note: impl Into<String>, witness: Option<String>) -> Self {
        ClauseReport { verdict, truncated, note: note.into(), witness }
    }
}

/// Clause-by-clause outcome of the four-part condition on a pair `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionPReport {
    pub clause_i: ClauseReport,
    pub clause_ii: ClauseReport,
    pub clause_iii: ClauseReport,
    pub clause_iv: ClauseReport,
    /// One representative per associate class of supplied primes `p` with `pA + bA ≠ A`.
    pub relevant_primes: Vec<String>,
    pub level: u32,
}

impl ConditionPReport {
    pub fn overall(&self) -> Verdict {
        self.clause_i.verdict.and(self.clause_ii.verdict).and(self.clause_iii.verdict).and(self.clause_iv.verdict)
    }
}

/// Checks the four clauses for `(A, (a, b))` with `A = ring`.
///
/// `factors` is the caller's prime factorization of `a` (with multiplicity);
/// its product must generate the same ideal as `a`. Primality of the factors
/// is trusted, not verified. Clause (ii) is a bounded zero-divisor search and
/// clause (iv) a truncation at level `level`.
pub fn check_condition_p<F: Field>(
    ring: &PresentedRing<F>,
    a: &Polynomial<F>,
    b: &Polynomial<F>,
    factors: &[Polynomial<F>],
    level: u32,
) -> Result<ConditionPReport, ConstructionError> {
    let vars = ring.vars();
    let rel = ring.ideal()?;
    let (a, b) = (a.embed(vars)?, b.embed(vars)?);
    let factors = factors.iter().map(|p| p.embed(vars)).collect::<Result<Vec<_>, _>>()?;
    if rel.contains(&a)? || rel.contains(&b)? {
        return Err(ConstructionError::Hypothesis("a and b must be nonzero".into()));
    }
    if level == 0 {
        return Err(ConstructionError::Invalid("level must be at least 1".into()));
    }
    let product = factors.iter().fold(Polynomial::one(vars), |acc, p| &acc * p);
    if !ideal_equal(&rel.with_gens(&[product])?, &rel.with_gens(&[a.clone()])?)? {
        return Err(ConstructionError::Hypothesis("the product of the supplied factors is not an associate of a".into()));
    }

    let clause_i = match coprimality_witness(ring, &a, &b)? {
        Some(w) => ClauseReport::new(Verdict::Refuted, false, "a and b are not relatively prime", Some(w.to_string())),
        None => ClauseReport::new(
            Verdict::Verified,
            false,
            "a and b are relatively prime and the supplied factors multiply to an associate of a",
            Some(format!("{} factor(s)", factors.len())),
        ),
    };

    // P(A, (a, b)) up to associates
    let mut primes: Vec<Polynomial<F>> = Vec::new();
    for p in &factors {
        if rel.with_gens(&[p.clone(), b.clone()])?.is_unit()? {
            continue;
        }
        let mut fresh = true;
        for q in &primes {
            if ideal_equal(&rel.with_gens(&[p.clone()])?, &rel.with_gens(&[q.clone()])?)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            primes.push(p.clone());
        }
    }

    let clause_iii = if primes.len() <= 1 {
        ClauseReport::new(Verdict::Verified, false, "vacuous: there are no non-associate pairs", None)
    } else {
        let mut found = None;
        'outer: for p in &primes {
            let pb = rel.with_gens(&[p.clone(), b.clone()])?;
            for q in &primes {
                if q != p && pb.contains(q)? {
                    found = Some(format!("{q} ∈ ({p}) + ({b})"));
                    break 'outer;
                }
            }
        }
        match found {
            Some(w) => ClauseReport::new(Verdict::Refuted, false, "a prime lies in pA + bA for another prime p", Some(w)),
            None => ClauseReport::new(Verdict::Verified, false, "q ∉ pA + bA for every non-associate pair", None),
        }
    };

    let clause_ii = if primes.is_empty() {
        ClauseReport::new(Verdict::Verified, false, "vacuous: no relevant primes", None)
    } else {
        let mut witness = None;
        for p in &primes {
            let ideal = rel.with_gens(&[p.clone(), b.clone()])?;
            if let Some((f, g)) = zero_divisor_search(&ideal, level)? {
                witness = Some(format!("({f})*({g}) ∈ ({p}) + ({b}) with neither factor in it"));
                break;
            }
        }
        match witness {
            Some(w) => ClauseReport::new(Verdict::Refuted, false, "pA + bA is not prime", Some(w)),
            None => ClauseReport::new(
                Verdict::Unknown(level as u64),
                true,
                format!("no zero divisor among candidates up to degree {level}; primality of the supplied factors is trusted"),
                None,
            ),
        }
    };

    let clause_iv = if primes.is_empty() {
        ClauseReport::new(Verdict::Verified, false, "vacuous: no relevant primes", None)
    } else {
        let mut escapes = Vec::new();
        let mut stuck = None;
        'primes: for p in &primes {
            let base = Ideal::new(vars, vec![p.clone(), b.clone()])?;
            for t in [p, &b] {
                let mut escaped = false;
                for l in 2..=level.max(2) {
                    let power = base.pow(l)?.sum(&rel)?;
                    if !power.contains(t)? {
                        escapes.push(format!("{t} ∉ (({p}) + ({b}))^{l}"));
                        escaped = true;
                        break;
                    }
                }
                if !escaped {
                    stuck = Some(t.to_string());
                    break 'primes;
                }
            }
        }
        match stuck {
            Some(t) => ClauseReport::new(
                Verdict::Unknown(level as u64),
                true,
                format!("test element {t} stays in every power up to level {level}"),
                None,
            ),
            None => ClauseReport::new(
                Verdict::Verified,
                true,
                format!("every test element leaves the powers by level {}", level.max(2)),
                Some(escapes.join("; ")),
            ),
        }
    };

    Ok(ConditionPReport {
        clause_i,
        clause_ii,
        clause_iii,
        clause_iv,
        relevant_primes: primes.iter().map(|p| p.to_string()).collect(),
        level,
    })
}

/// A pair of elements outside `ideal` whose product lies in it, searched among
/// standard monomials of degree `1..=deg` and their sums and differences.
fn zero_divisor_search<F: Field>(ideal: &Ideal<F>, deg: u32) -> Result<Option<(Polynomial<F>, Polynomial<F>)>, ConstructionError> {
    let vars = ideal.vars();
    let gb = ideal.groebner()?;
    let leads = gb.leading_monomials();
    let standard: Vec<Monomial> = monomials_up_to(vars.len(), deg as i64)
        .into_iter()
        .filter(|m| !m.is_one() && !leads.iter().any(|l| l.divides(m)))
        .take(ZERO_DIVISOR_CANDIDATE_CAP)
        .collect();
    let mut cands: Vec<Polynomial<F>> = standard.iter().map(|m| Polynomial::term(vars, m.clone(), F::one())).collect::<Result<_, _>>()?;
    'fill: for i in 0..standard.len() {
        for j in i + 1..standard.len() {
            if cands.len() >= ZERO_DIVISOR_CANDIDATE_CAP {
                break 'fill;
            }
            let (x, y) = (&cands[i], &cands[j]);
            let (s, d) = (x + y, x - y);
            cands.push(s);
            cands.push(d);
        }
    }
    cands.truncate(ZERO_DIVISOR_CANDIDATE_CAP);
    for i in 0..cands.len() {
        for j in i..cands.len() {
            if gb.reduce(&(&cands[i] * &cands[j]))?.is_zero() {
                return Ok(Some((cands[i].clone(), cands[j].clone())));
            }
        }
    }
    Ok(None)
}
