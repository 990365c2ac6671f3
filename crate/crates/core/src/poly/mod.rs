//! Sparse multivariate and Laurent polynomials, gradings and ring maps.

mod gadgets;
mod grading;
mod map;
mod monomial;
mod polynomial;
mod text;
mod vars;

pub use gadgets::{degree_unit, laurent_iso, phi_theta, DegreeUnit, LaurentIso};
pub use grading::{Degree, Grading};
pub use map::RingMap;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use vars::VarTable;

pub(crate) use monomial::grevlex_cmp;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("degree of zero")]
    DegreeOfZero,
    #[error("non-invertible image of `{0}`")]
    NonInvertibleImage(String),
    #[error("negative exponent on non-invertible variable `{0}`")]
    NegativeExponent(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("bad variable name `{0}`")]
    BadVariableName(String),
    #[error("exponent vector has {found} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("trivial grading")]
    TrivialGrading,
    #[error("exponents not coprime")]
    NotCoprime,
    #[error("unit is not an invertible monomial")]
    UnitNotInvertible,
    #[error("unit is not of degree zero")]
    UnitNotDegreeZero,
    #[error("grading has {found} weights, ring has {expected} variables")]
    GradingLength { expected: usize, found: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Coeff(#[from] crate::coeff::CoeffError),
}
