use std::sync::Arc;

use crate::coeff::Field;

use super::{PolyError, Polynomial, VarTable};

/// Substitution homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap<F> {
    source: Arc<VarTable>,
    target: Arc<VarTable>,
    images: Vec<Polynomial<F>>,
}

impl<F: Field> RingMap<F> {
    /// Images are listed in source-variable order.
    ///
    /// An invertible source variable must map to a unit monomial.
    pub fn new(source: &Arc<VarTable>, target: &Arc<VarTable>, images: Vec<Polynomial<F>>) -> Result<Self, PolyError> {
        if images.len() != source.len() {
            return Err(PolyError::ArityMismatch { expected: source.len(), found: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if img.vars() != target {
                return Err(PolyError::UnknownVariable(format!("image of `{}` lives over another table", source.name(i))));
            }
            if source.is_invertible(i) && !img.is_unit_monomial() {
                return Err(PolyError::NonInvertibleImage(source.name(i).to_string()));
            }
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    /// Identity on every variable except the listed ones.
    pub fn with_overrides(vars: &Arc<VarTable>, overrides: Vec<(&str, Polynomial<F>)>) -> Result<Self, PolyError> {
        let mut images: Vec<Polynomial<F>> = (0..vars.len()).map(|i| Polynomial::var_index(vars, i)).collect();
        for (name, img) in overrides {
            images[vars.require(name)?] = img;
        }
        Self::new(vars, vars, images)
    }

    pub fn source(&self) -> &Arc<VarTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VarTable> {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Polynomial<F> {
        &self.images[i]
    }

    pub fn apply(&self, p: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
        let p = p.embed(&self.source)?;
        let n = self.source.len();
        // powers[i] caches (nonnegative power, image^power)
        let mut cache: Vec<Vec<(i64, Polynomial<F>)>> = vec![Vec::new(); n];
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            let mut acc = Polynomial::constant(&self.target, c.clone());
            for i in m.support() {
                let e = m.exponent(i);
                let base = if e < 0 {
                    self.images[i].unit_inverse().ok_or_else(|| PolyError::NonInvertibleImage(self.source.name(i).to_string()))?
                } else {
                    self.images[i].clone()
                };
                let pw = match cache[i].iter().find(|(k, _)| *k == e) {
                    Some((_, q)) => q.clone(),
                    None => {
                        let q = base.pow(e.unsigned_abs());
                        cache[i].push((e, q.clone()));
                        q
                    }
                };
                acc = &acc * &pw;
            }
            for (m, c) in acc.terms {
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// `self` after `first`: `x ↦ self(first(x))`.
    pub fn compose_after(&self, first: &RingMap<F>) -> Result<RingMap<F>, PolyError> {
        let images = first.images.iter().map(|img| self.apply(img)).collect::<Result<Vec<_>, _>>()?;
        RingMap::new(&first.source, &self.target, images)
    }
}
