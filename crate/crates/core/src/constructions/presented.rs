use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::Field;
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{Degree, Grading, PolyError, Polynomial, VarTable};

use super::ConstructionError;

/// `k[vars] / (relations)`, optionally graded.
///
/// Relations are nonzero, and homogeneous whenever a grading is attached.
#[derive(Clone, Debug)]
pub struct PresentedRing<F> {
    vars: Arc<VarTable>,
    relations: Vec<Polynomial<F>>,
    grading: Option<Grading>,
    provenance: String,
    metadata: BTreeMap<String, String>,
}

impl<F: Field> PresentedRing<F> {
    pub fn new(
        vars: &Arc<VarTable>,
        relations: Vec<Polynomial<F>>,
        grading: Option<Grading>,
        provenance: impl Into<String>,
    ) -> Result<Self, ConstructionError> {
        let relations = relations.iter().map(|r| r.embed(vars)).collect::<Result<Vec<_>, _>>()?;
        if relations.iter().any(Polynomial::is_zero) {
            return Err(ConstructionError::ZeroRelation);
        }
        let grading = match grading {
            Some(g) => {
                if g.vars().names() != vars.names() {
                    return Err(ConstructionError::Invalid("grading is over a different variable table".into()));
                }
                Some(Grading::new(vars, g.weights().to_vec())?)
            }
            None => None,
        };
        if let Some(g) = &grading {
            for r in &relations {
                if g.degree_of(r)? == Degree::NonHomogeneous {
                    return Err(ConstructionError::InhomogeneousRelation(r.to_string()));
                }
            }
        }
        Ok(PresentedRing { vars: vars.clone(), relations, grading, provenance: provenance.into(), metadata: BTreeMap::new() })
    }

    /// The polynomial ring itself.
    pub fn free(vars: &Arc<VarTable>, grading: Option<Grading>, provenance: impl Into<String>) -> Result<Self, ConstructionError> {
        Self::new(vars, Vec::new(), grading, provenance)
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    /// The defining ideal in the ambient polynomial ring.
    pub fn ideal(&self) -> Result<Ideal<F>, GroebnerError> {
        Ideal::new(&self.vars, self.relations.clone())
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial<F>, PolyError> {
        Polynomial::parse(&self.vars, s)
    }

    pub fn to_presentation(&self) -> Presentation {
        let variables = (0..self.vars.len())
            .map(|i| VariableSpec {
                name: self.vars.name(i).to_string(),
                weight: self.grading.as_ref().map(|g| g.weight(i)),
                invertible: self.vars.is_invertible(i),
            })
            .collect();
        Presentation {
            field: F::name(),
            variables,
            relations: self.relations.iter().map(|r| r.to_string()).collect(),
            provenance: self.provenance.clone(),
            metadata: self.metadata.clone(),
        }
    }

    /// Inverse of [`to_presentation`](Self::to_presentation); the field name must match `F`.
    pub fn from_presentation(p: &Presentation) -> Result<Self, ConstructionError> {
        if p.field != F::name() {
            return Err(ConstructionError::Invalid(format!("presentation is over {}, expected {}", p.field, F::name())));
        }
        let vars = VarTable::with_flags(p.variables.iter().map(|v| (v.name.clone(), v.invertible)).collect())?;
        let weights: Option<Vec<i64>> = p.variables.iter().map(|v| v.weight).collect();
        if weights.is_none() && p.variables.iter().any(|v| v.weight.is_some()) {
            return Err(ConstructionError::Invalid("weights must be given for all variables or none".into()));
        }
        let grading = weights.filter(|_| !p.variables.is_empty()).map(|w| Grading::new(&vars, w)).transpose()?;
        let relations = p.relations.iter().map(|r| Polynomial::parse(&vars, r)).collect::<Result<Vec<_>, _>>()?;
        let mut ring = Self::new(&vars, relations, grading, p.provenance.clone())?;
        ring.metadata = p.metadata.clone();
        Ok(ring)
    }

    /// Line-oriented presentation, easy to translate into other algebra systems.
    pub fn cas_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", F::name());
        let _ = writeln!(out, "variables {}", self.vars.names().join(" "));
        let inv: Vec<&str> = (0..self.vars.len()).filter(|&i| self.vars.is_invertible(i)).map(|i| self.vars.name(i)).collect();
        if !inv.is_empty() {
            let _ = writeln!(out, "invertible {}", inv.join(" "));
        }
        if let Some(g) = &self.grading {
            let w: Vec<String> = g.weights().iter().map(i64::to_string).collect();
            let _ = writeln!(out, "weights {}", w.join(" "));
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {r}");
        }
        if !self.provenance.is_empty() {
            let _ = writeln!(out, "provenance {}", self.provenance);
        }
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "meta {k} = {v}");
        }
        out
    }
}

/// Serializable mirror of a [`PresentedRing`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub field: String,
    pub variables: Vec<VariableSpec>,
    pub relations: Vec<String>,
    #[serde(default)]
    pub provenance: String,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
    #[serde(default)]
    pub invertible: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type R = PresentedRing<Fp<5>>;

    #[test]
    fn graded_relations_must_be_homogeneous() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let g = Grading::new(&v, vec![1, 1]).unwrap();
        let bad = Polynomial::parse(&v, "x + y^2").unwrap();
        assert!(matches!(R::new(&v, vec![bad.clone()], Some(g.clone()), ""), Err(ConstructionError::InhomogeneousRelation(_))));
        assert!(R::new(&v, vec![bad], None, "").is_ok());
        assert!(matches!(R::new(&v, vec![Polynomial::zero(&v)], None, ""), Err(ConstructionError::ZeroRelation)));
    }

    #[test]
    fn presentation_round_trip() {
        let v = VarTable::with_flags(vec![("t".into(), false), ("U".into(), true)]).unwrap();
        let g = Grading::new(&v, vec![1, 0]).unwrap();
        let r = R::new(&v, vec![Polynomial::parse(&v, "t^2*U^-1 - t^2").unwrap()], Some(g), "test").unwrap().with_metadata("k", "v");
        let p = r.to_presentation();
        let back = R::from_presentation(&p).unwrap();
        assert_eq!(back.to_presentation(), p);
        assert!(PresentedRing::<Fp<7>>::from_presentation(&p).is_err());
    }

    #[test]
    fn cas_text_of_free_ring() {
        let v = VarTable::new(&["u", "v"]).unwrap();
        assert_eq!(R::free(&v, None, "").unwrap().cas_text(), "field F5\nvariables u v\n");
    }
}
