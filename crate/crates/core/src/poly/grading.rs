use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeff::Field;

use super::{Monomial, PolyError, Polynomial, VarTable};

/// Integer weights, one per variable of a table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    vars: Arc<VarTable>,
    weights: Vec<i64>,
}

/// Weighted degree of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    Homogeneous(i64),
    NonHomogeneous,
}

impl Grading {
    pub fn new(vars: &Arc<VarTable>, weights: Vec<i64>) -> Result<Self, PolyError> {
        if weights.len() != vars.len() {
            return Err(PolyError::GradingLength { expected: vars.len(), found: weights.len() });
        }
        Ok(Grading { vars: vars.clone(), weights })
    }

    /// Weights given by name; every variable must be named.
    pub fn from_named(vars: &Arc<VarTable>, named: &[(&str, i64)]) -> Result<Self, PolyError> {
        let mut weights = vec![None; vars.len()];
        for (name, w) in named {
            weights[vars.require(name)?] = Some(*w);
        }
        let found = weights.iter().filter(|w| w.is_some()).count();
        if found != vars.len() {
            return Err(PolyError::GradingLength { expected: vars.len(), found });
        }
        Ok(Grading { vars: vars.clone(), weights: weights.into_iter().map(Option::unwrap).collect() })
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.exponents().iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Scales every weight by `c`.
    pub fn scaled(&self, c: i64) -> Self {
        Grading { vars: self.vars.clone(), weights: self.weights.iter().map(|w| w * c).collect() }
    }

    /// The same weights over a table with extra trailing variables.
    pub fn extended(&self, vars: &Arc<VarTable>, extra: &[i64]) -> Result<Self, PolyError> {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(extra);
        Grading::new(vars, weights)
    }

    pub fn degree_of<F: Field>(&self, p: &Polynomial<F>) -> Result<Degree, PolyError> {
        let mut degs = p.terms().map(|(m, _)| self.monomial_degree(m));
        let first = degs.next().ok_or(PolyError::DegreeOfZero)?;
        if degs.all(|d| d == first) {
            Ok(Degree::Homogeneous(first))
        } else {
            Ok(Degree::NonHomogeneous)
        }
    }

    /// Degree of a homogeneous nonzero polynomial.
    pub fn homogeneous_degree<F: Field>(&self, p: &Polynomial<F>) -> Result<i64, PolyError> {
        match self.degree_of(p)? {
            Degree::Homogeneous(d) => Ok(d),
            Degree::NonHomogeneous => Err(PolyError::NotHomogeneous),
        }
    }

    pub fn homogeneous_components<F: Field>(&self, p: &Polynomial<F>) -> BTreeMap<i64, Polynomial<F>> {
        let mut parts: BTreeMap<i64, BTreeMap<Monomial, F>> = BTreeMap::new();
        for (m, c) in p.terms() {
            parts.entry(self.monomial_degree(m)).or_default().insert(m.clone(), c.clone());
        }
        parts.into_iter().map(|(d, t)| (d, Polynomial::from_map_unchecked(p.vars(), t))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type P = Polynomial<Fp<5>>;

    #[test]
    fn degrees() {
        let r = VarTable::new(&["X1", "X2"]).unwrap();
        let g = Grading::new(&r, vec![3, 2]).unwrap();
        let p = P::parse(&r, "X1^2 + X2^3").unwrap();
        assert_eq!(g.degree_of(&p).unwrap(), Degree::Homogeneous(6));
        assert_eq!(g.degree_of(&P::zero(&r)), Err(PolyError::DegreeOfZero));
        let h = Grading::new(&r, vec![1, 1]).unwrap();
        let q = P::parse(&r, "X1 + X2^2").unwrap();
        assert_eq!(h.degree_of(&q).unwrap(), Degree::NonHomogeneous);
        let comps = h.homogeneous_components(&q);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&1], P::parse(&r, "X1").unwrap());
        assert!(h.homogeneous_components(&P::zero(&r)).is_empty());
    }

    #[test]
    fn omega_weights() {
        let r = VarTable::new(&["x", "z0", "z1", "z2"]).unwrap();
        let g = Grading::new(&r, vec![-1, 1, 2, 4]).unwrap();
        assert_eq!(g.degree_of(&P::parse(&r, "x*z1").unwrap()).unwrap(), Degree::Homogeneous(1));
        let comps = g.homogeneous_components(&P::parse(&r, "z0^2 + x*z2").unwrap());
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn named_weights_must_cover() {
        let r = VarTable::new(&["x", "y"]).unwrap();
        assert!(Grading::from_named(&r, &[("x", 1)]).is_err());
        assert_eq!(Grading::from_named(&r, &[("y", 2), ("x", 1)]).unwrap().weights(), &[1, 2]);
    }
}
