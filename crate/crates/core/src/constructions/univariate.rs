//! Dense polynomials in one variable, enough for gcd-style tests in `k[x]`
//! and arithmetic in `k[x]/(q)`.

use std::sync::Arc;

use crate::coeff::Field;
use crate::poly::{Polynomial, VarTable};

/// Coefficients from degree 0 upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Uni<F>(Vec<F>);

impl<F: Field> Uni<F> {
    pub(crate) fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Uni(c)
    }

    pub(crate) fn zero() -> Self {
        Uni(Vec::new())
    }

    /// Reads `p` as a polynomial in variable `var`; `None` if another variable
    /// or a negative exponent occurs.
    pub(crate) fn from_poly(p: &Polynomial<F>, var: usize) -> Option<Self> {
        let mut c: Vec<F> = Vec::new();
        for (m, x) in p.terms() {
            if m.support().any(|i| i != var) {
                return None;
            }
            let e = usize::try_from(m.exponent(var)).ok()?;
            if c.len() <= e {
                c.resize(e + 1, F::zero());
            }
            c[e] += x.clone();
        }
        Some(Uni::new(c))
    }

    pub(crate) fn to_poly(&self, vars: &Arc<VarTable>, var: usize) -> Polynomial<F> {
        let x = Polynomial::var_index(vars, var);
        self.0.iter().enumerate().rev().fold(Polynomial::zero(vars), |acc, (i, c)| &acc + &x.pow(i as u64).scale(c))
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Uni::zero();
        }
        let mut c = vec![F::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a.clone() * b.clone();
            }
        }
        Uni::new(c)
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let get = |v: &Vec<F>, i: usize| v.get(i).cloned().unwrap_or_else(F::zero);
        Uni::new((0..n).map(|i| get(&self.0, i) - get(&o.0, i)).collect())
    }

    pub(crate) fn pow(&self, k: u32) -> Self {
        let mut acc = Uni::new(vec![F::one()]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub(crate) fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        let mut q = vec![F::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r[r.len() - 1].clone() * lead_inv.clone();
            for (i, x) in d.0.iter().enumerate() {
                r[k + i] -= c.clone() * x.clone();
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Uni::new(q), Uni::new(r))
    }

    pub(crate) fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// `d | self`.
    pub(crate) fn divisible_by(&self, d: &Self) -> bool {
        self.rem(d).is_zero()
    }

    /// Inverse modulo `q`, `None` when `gcd(self, q) ≠ 1`.
    pub(crate) fn inverse_mod(&self, q: &Self) -> Option<Self> {
        // invariant: s * self ≡ r (mod q)
        let (mut r0, mut r1) = (q.clone(), self.rem(q));
        let (mut s0, mut s1) = (Uni::zero(), Uni::new(vec![F::one()]));
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1);
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.0[0].inv()?;
        Some(s0.mul(&Uni::new(vec![c])).rem(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type U = Uni<Fp<7>>;

    fn u(s: &str) -> U {
        let r = VarTable::new(&["x"]).unwrap();
        Uni::from_poly(&Polynomial::parse(&r, s).unwrap(), 0).unwrap()
    }

    #[test]
    fn division_and_inverse() {
        let (q, r) = u("x^3 + 2*x + 1").div_rem(&u("x + 1"));
        assert_eq!(q.mul(&u("x + 1")).sub(&r.mul(&u("-1"))), u("x^3 + 2*x + 1"));
        assert!(u("x^2 - 1").divisible_by(&u("x - 1")));
        let m = u("x^2 + 1");
        let inv = u("x + 2").inverse_mod(&m).unwrap();
        assert_eq!(inv.mul(&u("x + 2")).rem(&m), u("1"));
        assert!(u("x - 1").inverse_mod(&u("x^2 - 1")).is_none());
        let r = VarTable::new(&["x", "y"]).unwrap();
        assert!(Uni::<Fp<7>>::from_poly(&Polynomial::parse(&r, "x*y").unwrap(), 0).is_none());
    }
}
