use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Field;

use super::{Monomial, PolyError, VarTable};

/// Sparse (optionally Laurent) polynomial over a coefficient field.
///
/// Terms are kept in a map keyed by monomial with no zero coefficients, so
/// equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F> {
    vars: Arc<VarTable>,
    pub(super) terms: BTreeMap<Monomial, F>,
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) {
    assert!(Arc::ptr_eq(a, b) || a == b, "polynomials over different variable tables: [{a}] vs [{b}]");
}

impl<F: Field> Polynomial<F> {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarTable>, c: F) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, F::one())
    }

    pub fn from_i64(vars: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(vars, F::from_i64(c))
    }

    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var_index(vars, vars.require(name)?))
    }

    pub fn var_index(vars: &Arc<VarTable>, i: usize) -> Self {
        Self::monomial_unchecked(vars, Monomial::var(vars.len(), i, 1), F::one())
    }

    pub(crate) fn monomial_unchecked(vars: &Arc<VarTable>, m: Monomial, c: F) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Single term `c * m`, checking the exponent vector against the table.
    pub fn term(vars: &Arc<VarTable>, m: Monomial, c: F) -> Result<Self, PolyError> {
        check_monomial(vars, &m)?;
        Ok(Self::monomial_unchecked(vars, m, c))
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(vars: &Arc<VarTable>, terms: I) -> Result<Self, PolyError> {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            check_monomial(vars, &m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(vars: &Arc<VarTable>, terms: BTreeMap<Monomial, F>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value when the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms in canonical (descending graded reverse lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Leading term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }

    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) != 0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(Monomial::has_negative)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Normalizes the canonical leading coefficient to one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// True for a nonzero single term whose variables are all invertible.
    pub fn is_unit_monomial(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let m = self.terms.keys().next().unwrap();
        m.support().all(|i| self.vars.is_invertible(i))
    }

    /// Inverse of a unit monomial.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit_monomial() {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial_unchecked(&self.vars, m.inverse(), c.inv()?))
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e != 0 {
                let mut m2 = m.clone();
                m2.0[var] -= 1;
                out.add_term(m2, c.clone() * F::from_i64(e));
            }
        }
        out
    }

    /// Re-expresses the polynomial over another table by variable name.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Self, PolyError> {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return Ok(Polynomial { vars: target.clone(), terms: self.terms.clone() });
        }
        let mut pos = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            pos.push(target.index_of(name));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = Monomial::one(target.len());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = pos[i].ok_or_else(|| PolyError::UnknownVariable(self.vars.name(i).to_string()))?;
                m2.0[j] = e;
            }
            check_monomial(target, &m2)?;
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// Exact division by a nonzero polynomial without negative exponents.
    ///
    /// Returns `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        same_table(&self.vars, &d.vars);
        let (lm, lc) = d.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let q = m.div(lm)?;
            let qc = c.clone() * lc_inv.clone();
            rem = &rem - &d.mul_term(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

pub(crate) fn check_monomial(vars: &VarTable, m: &Monomial) -> Result<(), PolyError> {
    if m.nvars() != vars.len() {
        return Err(PolyError::ArityMismatch { expected: vars.len(), found: m.nvars() });
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        if e < 0 && !vars.is_invertible(i) {
            return Err(PolyError::NegativeExponent(vars.name(i).to_string()));
        }
    }
    Ok(())
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        same_table(&self.vars, &rhs.vars);
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        same_table(&self.vars, &rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        same_table(&self.vars, &rhs.vars);
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    use num_traits::Zero;
    type P = Polynomial<Fp<5>>;

    fn ring() -> Arc<VarTable> {
        VarTable::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn arithmetic() {
        let r = ring();
        let x = P::var(&r, "x").unwrap();
        let y = P::var(&r, "y").unwrap();
        let p = &(&x + &y) * &(&x - &y);
        let q = &(&x * &x) - &(&y * &y);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!(x.pow(5).len(), 1);
        // (x + y)^5 = x^5 + y^5 in characteristic 5
        assert_eq!((&x + &y).pow(5), &x.pow(5) + &y.pow(5));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = P::var(&r, "x").unwrap();
        let y = P::var(&r, "y").unwrap();
        let p = &(&x + &y) * &(&x * &y);
        assert_eq!(p.exact_div(&(&x + &y)).unwrap(), &x * &y);
        assert!(p.exact_div(&(&x - &y)).is_none());
    }

    #[test]
    fn negative_exponent_needs_invertible() {
        let r = ring();
        let m = Monomial::from_exponents(&[-1, 0]);
        assert_eq!(P::term(&r, m.clone(), Fp::new(1)).unwrap_err(), PolyError::NegativeExponent("x".into()));
        let t = VarTable::with_flags(vec![("x".into(), true), ("y".into(), false)]).unwrap();
        let p = P::term(&t, m, Fp::new(2)).unwrap();
        assert!(p.is_unit_monomial());
        assert_eq!(&p * &p.unit_inverse().unwrap(), P::one(&t));
    }

    #[test]
    fn derivative_and_embed() {
        let r = ring();
        let x = P::var(&r, "x").unwrap();
        let y = P::var(&r, "y").unwrap();
        let p = &x.pow(3) * &y;
        assert_eq!(p.derivative(0), (&x.pow(2) * &y).scale(&Fp::new(3)));
        let big = VarTable::new(&["y", "z", "x"]).unwrap();
        let e = p.embed(&big).unwrap();
        assert_eq!(e.total_degree(), Some(4));
        assert!(e.uses_variable(2) && !e.uses_variable(1));
        assert!(p.embed(&VarTable::new(&["x"]).unwrap()).is_err());
        assert!(Fp::<5>::zero().is_zero());
    }
}
