use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::coeff::Field;
use crate::poly::{Polynomial, VarTable};

use super::{buchberger, GroebnerBasis, GroebnerError, MonomialOrder};

/// Ideal given by generators, with a lazily computed Gröbner basis for the
/// graded reverse lexicographic order.
///
/// The cached basis is written at most once; concurrent readers of a computed
/// ideal are safe.
#[derive(Clone, Debug)]
pub struct Ideal<F> {
    vars: Arc<VarTable>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; every generator is re-expressed over `vars`.
    pub fn new(vars: &Arc<VarTable>, gens: Vec<Polynomial<F>>) -> Result<Self, GroebnerError> {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.embed(vars)).collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal { vars: vars.clone(), gens, gb: OnceLock::new() })
    }

    pub fn parse(vars: &Arc<VarTable>, gens: &[&str]) -> Result<Self, GroebnerError> {
        let gens = gens.iter().map(|s| Polynomial::parse(vars, s)).collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, gens)
    }

    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Ideal { vars: vars.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(vars: &Arc<VarTable>) -> Self {
        Ideal { vars: vars.clone(), gens: vec![Polynomial::one(vars)], gb: OnceLock::new() }
    }

    pub fn principal(f: &Polynomial<F>) -> Self {
        Ideal { vars: f.vars().clone(), gens: if f.is_zero() { vec![] } else { vec![f.clone()] }, gb: OnceLock::new() }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// The cached graded reverse lexicographic basis.
    pub fn groebner(&self) -> Result<&GroebnerBasis<F>, GroebnerError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.vars, &self.gens, &MonomialOrder::DegRevLex)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("basis just stored"))
    }

    pub fn groebner_with(&self, ord: &MonomialOrder) -> Result<GroebnerBasis<F>, GroebnerError> {
        if *ord == MonomialOrder::DegRevLex {
            return self.groebner().cloned();
        }
        buchberger(&self.vars, &self.gens, ord)
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        self.groebner()?.reduce(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        self.groebner()?.contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool, GroebnerError> {
        Ok(self.groebner()?.is_unit_ideal())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.vars, gens)
    }

    pub fn with_gens(&self, extra: &[Polynomial<F>]) -> Result<Ideal<F>, GroebnerError> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.vars, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * &b.embed(&self.vars)?);
            }
        }
        Ideal::new(&self.vars, gens)
    }

    /// `self^k`, with generators reduced to a minimal monomial-style list when possible.
    pub fn pow(&self, k: u32) -> Result<Ideal<F>, GroebnerError> {
        let mut acc = Ideal::unit(&self.vars);
        for _ in 0..k {
            acc = acc.product(self)?;
            acc.gens.sort_by(|a, b| b.leading_term().map(|t| t.0).cmp(&a.leading_term().map(|t| t.0)));
            acc.gens.dedup();
        }
        Ok(acc)
    }

    /// `f * self`.
    pub fn scale(&self, f: &Polynomial<F>) -> Result<Ideal<F>, GroebnerError> {
        let f = f.embed(&self.vars)?;
        Ideal::new(&self.vars, self.gens.iter().map(|g| &f * g).collect())
    }

    pub fn embed(&self, vars: &Arc<VarTable>) -> Result<Ideal<F>, GroebnerError> {
        Ideal::new(vars, self.gens.clone())
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Equality by mutual reduction of generators to zero.
pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool, GroebnerError> {
    let j = j.embed(i.vars())?;
    Ok(i.contains_ideal(&j)? && j.contains_ideal(i)?)
}

/// Equality tested with bases for `ord`; useful when one order makes the
/// generators a basis already.
pub fn ideal_equal_with<F: Field>(i: &Ideal<F>, j: &Ideal<F>, ord: &MonomialOrder) -> Result<bool, GroebnerError> {
    let j = j.embed(i.vars())?;
    let (gi, gj) = (i.groebner_with(ord)?, j.groebner_with(ord)?);
    for g in j.gens() {
        if !gi.contains(g)? {
            return Ok(false);
        }
    }
    for g in i.gens() {
        if !gj.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ∩ k[keep]`, computed with an elimination order on the discarded variables.
///
/// The result lives over the same table as `I`.
pub fn elim_ideal<F: Field>(i: &Ideal<F>, keep: &[usize]) -> Result<Ideal<F>, GroebnerError> {
    let n = i.vars().len();
    let drop: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
    if drop.is_empty() {
        return Ok(i.clone());
    }
    let gb = i.groebner_with(&MonomialOrder::Elimination(drop.clone()))?;
    let gens = gb.polys().into_iter().filter(|g| !drop.iter().any(|&v| g.uses_variable(v))).collect();
    Ideal::new(i.vars(), gens)
}

/// Like [`elim_ideal`], naming the kept variables.
pub fn elim_ideal_named<F: Field>(i: &Ideal<F>, keep: &[&str]) -> Result<Ideal<F>, GroebnerError> {
    let idx = keep.iter().map(|n| i.vars().require(n)).collect::<Result<Vec<_>, _>>()?;
    elim_ideal(i, &idx)
}

/// `I ∩ J` via a tag variable `t`: eliminate `t` from `t I + (1 - t) J`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    let vars = i.vars();
    let tag = vars.fresh_name("tag");
    let big = vars.prepended(&[tag.as_str()])?;
    let t = Polynomial::var_index(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(&t * &g.embed(&big)?);
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.embed(vars)?.embed(&big)?);
    }
    let keep: Vec<usize> = (1..big.len()).collect();
    let e = elim_ideal(&Ideal::new(&big, gens)?, &keep)?;
    Ideal::new(vars, e.gens().iter().map(|g| g.embed(vars)).collect::<Result<Vec<_>, _>>()?)
}

/// `(I : t) = { x : t x ∈ I }`, as `(I ∩ (t)) / t`.
pub fn ideal_quotient<F: Field>(i: &Ideal<F>, t: &Polynomial<F>) -> Result<Ideal<F>, GroebnerError> {
    if t.is_zero() {
        return Err(GroebnerError::ZeroArgument("quotient by zero"));
    }
    let t = t.embed(i.vars())?;
    let meet = intersect(i, &Ideal::principal(&t))?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for g in meet.gens() {
        gens.push(g.exact_div(&t).ok_or_else(|| GroebnerError::Internal("intersection generator not divisible by t".into()))?);
    }
    Ideal::new(i.vars(), gens)
}

/// Outcome of iterated quotients `I, (I : f), ((I : f) : f), ...`.
#[derive(Clone, Debug)]
pub struct Saturation<F> {
    pub ideal: Ideal<F>,
    /// Number of quotient steps taken.
    pub steps: u32,
    /// False when the iteration cap was reached before stabilization.
    pub stabilized: bool,
}

pub const SATURATION_CAP: u32 = 32;

/// `(I : f^∞)` by iterating [`ideal_quotient`] until two consecutive ideals agree.
pub fn saturation<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Saturation<F>, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroArgument("saturation by zero"));
    }
    let mut cur = i.clone();
    for step in 1..=SATURATION_CAP {
        let next = ideal_quotient(&cur, f)?;
        // cur ⊆ next always holds, so one inclusion decides equality
        if cur.contains_ideal(&next)? {
            return Ok(Saturation { ideal: cur, steps: step, stabilized: true });
        }
        cur = next;
    }
    Ok(Saturation { ideal: cur, steps: SATURATION_CAP, stabilized: false })
}
