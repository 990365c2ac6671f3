//! Independent oracles: membership by linear algebra over monomials and
//! irreducibility by exhaustive factor search.

use std::collections::HashMap;

use crate::coeff::Field;
use crate::linalg::solve_augmented;
use crate::poly::{Monomial, Polynomial};

use super::GroebnerError;

/// Hard cap on candidate evaluations in [`brute_force_irreducible`].
pub const IRREDUCIBLE_CANDIDATE_CAP: u64 = 10_000_000;

/// All monomials in `n` variables of total degree at most `d`, in increasing
/// graded reverse lexicographic order.
pub fn monomials_up_to(n: usize, d: i64) -> Vec<Monomial> {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(0, d, &mut vec![0; n], &mut out);
    }
    out.sort();
    out
}

/// Cofactors `h` with `f = Σ h_i g_i` and `deg(h_i g_i) ≤ deg_bound`, if any.
pub fn brute_force_member_witness<F: Field>(
    f: &Polynomial<F>,
    gens: &[Polynomial<F>],
    deg_bound: i64,
) -> Result<Option<Vec<Polynomial<F>>>, GroebnerError> {
    let vars = f.vars();
    if vars.any_invertible() {
        return Err(GroebnerError::Laurent);
    }
    if f.total_degree().unwrap_or(0) > deg_bound {
        return Err(GroebnerError::Precondition(format!("degree bound {deg_bound} is below deg f")));
    }
    let gens = gens.iter().map(|g| g.embed(vars)).collect::<Result<Vec<_>, _>>()?;
    // one unknown per (generator, multiplier monomial)
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if let Some(dg) = g.total_degree() {
            for m in monomials_up_to(vars.len(), deg_bound - dg) {
                columns.push((i, m));
            }
        }
    }
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut entries: Vec<Vec<(usize, F)>> = Vec::new();
    let row = |m: Monomial, row_of: &mut HashMap<Monomial, usize>, entries: &mut Vec<Vec<(usize, F)>>| {
        let n = row_of.len();
        *row_of.entry(m).or_insert_with(|| {
            entries.push(Vec::new());
            n
        })
    };
    for (col, (i, mult)) in columns.iter().enumerate() {
        for (m, c) in gens[*i].terms() {
            let r = row(m.mul(mult), &mut row_of, &mut entries);
            entries[r].push((col, c.clone()));
        }
    }
    let mut rhs: Vec<(usize, F)> = Vec::new();
    for (m, c) in f.terms() {
        let r = row(m.clone(), &mut row_of, &mut entries);
        rhs.push((r, c.clone()));
    }
    let ncols = columns.len();
    let mut dense: Vec<Vec<F>> = entries
        .iter()
        .map(|e| {
            let mut v = vec![F::zero(); ncols + 1];
            for (c, x) in e {
                v[*c] += x.clone();
            }
            v
        })
        .collect();
    for (r, c) in rhs {
        dense[r][ncols] = c;
    }
    let Some(x) = solve_augmented(dense, ncols) else { return Ok(None) };
    let mut cof = vec![Polynomial::zero(vars); gens.len()];
    for ((i, m), c) in columns.into_iter().zip(x) {
        if !c.is_zero() {
            cof[i] = &cof[i] + &Polynomial::term(vars, m, c)?;
        }
    }
    Ok(Some(cof))
}

/// True when `f = Σ h_i g_i` with every product of degree at most `deg_bound`.
///
/// A `false` answer only rules out representations within the bound.
pub fn brute_force_member<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>], deg_bound: i64) -> Result<bool, GroebnerError> {
    Ok(brute_force_member_witness(f, gens, deg_bound)?.is_some())
}

/// Outcome of the exhaustive factor search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility<F> {
    Irreducible,
    Reducible(Polynomial<F>, Polynomial<F>),
}

/// Exhaustive search for a factorization `f = g h` with `g` non-constant of
/// total degree at most `max_deg`.
///
/// Candidates `g` are monic in the canonical order with leading monomial
/// dividing that of `f`. The answer is complete once
/// `max_deg ≥ ⌊deg f / 2⌋`, which is required.
pub fn brute_force_irreducible<F: Field>(f: &Polynomial<F>, max_deg: i64) -> Result<Irreducibility<F>, GroebnerError> {
    let elems = F::elements().ok_or_else(|| GroebnerError::Precondition("coefficient field must be a small prime field".into()))?;
    let vars = f.vars();
    if vars.any_invertible() {
        return Err(GroebnerError::Laurent);
    }
    let deg = f.total_degree().ok_or(GroebnerError::ZeroArgument("irreducibility of zero"))?;
    if deg == 0 {
        return Err(GroebnerError::Precondition("constants are units".into()));
    }
    if max_deg < deg / 2 {
        return Err(GroebnerError::Precondition(format!("factor-degree bound {max_deg} is below ⌊deg f / 2⌋ = {}", deg / 2)));
    }
    let (lm_f, _) = f.leading_term().expect("nonzero");
    let support = monomials_up_to(vars.len(), max_deg);
    let q = elems.len() as u64;
    let mut plan = Vec::new();
    let mut total: u64 = 0;
    for (k, lead) in support.iter().enumerate() {
        if lead.is_one() || !lead.divides(lm_f) {
            continue;
        }
        let count = q.checked_pow(k as u32).unwrap_or(u64::MAX);
        total = total.saturating_add(count);
        if total > IRREDUCIBLE_CANDIDATE_CAP {
            return Err(GroebnerError::TooLarge(format!("more than {IRREDUCIBLE_CANDIDATE_CAP} factor candidates")));
        }
        plan.push(k);
    }
    for k in plan {
        let lower = &support[..k];
        let mut digits = vec![0usize; k];
        loop {
            let terms = std::iter::once((support[k].clone(), F::one()))
                .chain(lower.iter().zip(&digits).filter(|(_, &d)| d != 0).map(|(m, &d)| (m.clone(), elems[d].clone())));
            let g = Polynomial::from_terms(vars, terms)?;
            if let Some(h) = f.exact_div(&g) {
                if h.as_constant().is_none() {
                    return Ok(Irreducibility::Reducible(g, h));
                }
            }
            // next coefficient vector in base q
            let mut i = 0;
            while i < k {
                digits[i] += 1;
                if digits[i] < elems.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    Ok(Irreducibility::Irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    use crate::poly::VarTable;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(2, 0), vec![Monomial::one(2)]);
        assert!(monomials_up_to(2, -1).is_empty());
    }

    #[test]
    fn membership_examples() {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let p = |s: &str| Polynomial::<Fp<5>>::parse(&r, s).unwrap();
        assert!(brute_force_member(&p("x^2"), &[p("x")], 2).unwrap());
        assert!(!brute_force_member(&p("1"), &[p("x"), p("y")], 5).unwrap());
        let w = brute_force_member_witness(&p("x^2*y + y^3"), &[p("x^2 + y^2"), p("x")], 3).unwrap().unwrap();
        assert_eq!(&(&w[0] * &p("x^2 + y^2")) + &(&w[1] * &p("x")), p("x^2*y + y^3"));
    }

    #[test]
    fn irreducibility_examples() {
        let r = VarTable::new(&["x", "y", "z"]).unwrap();
        let p5 = |s: &str| Polynomial::<Fp<5>>::parse(&r, s).unwrap();
        assert_eq!(brute_force_irreducible(&p5("x^2 + y^3"), 2).unwrap(), Irreducibility::Irreducible);
        match brute_force_irreducible(&p5("x^2 - y^2"), 1).unwrap() {
            Irreducibility::Reducible(g, h) => assert_eq!(&g * &h, p5("x^2 - y^2")),
            other => panic!("expected a factorization, got {other:?}"),
        }
        let p2 = |s: &str| Polynomial::<Fp<2>>::parse(&r, s).unwrap();
        assert_eq!(brute_force_irreducible(&p2("x^2 + y^3 + z^5"), 2).unwrap(), Irreducibility::Irreducible);
        // x^2 + y^2 = (x + y)^2 in characteristic two
        assert!(matches!(brute_force_irreducible(&p2("x^2 + y^2"), 1).unwrap(), Irreducibility::Reducible(..)));
        assert!(brute_force_irreducible(&p5("x^2 + y^3"), 0).is_err());
        let q = VarTable::new(&["x"]).unwrap();
        let rat = Polynomial::<num_rational::BigRational>::parse(&q, "x^2 + 1").unwrap();
        assert!(matches!(brute_force_irreducible(&rat, 1), Err(GroebnerError::Precondition(_))));
    }
}
