//! Presented rings for every family of graded constructions, together with
//! checkers for the hypotheses each construction needs.
//!
//! Nothing here decides primality or unique factorization. Builders verify
//! the finitely checkable hypotheses and proof steps, and bounded searches
//! report a [`Verdict`](crate::Verdict) that may be unknown.

mod condition_p;
mod extension;
mod graded;
mod presented;
mod threefold;
mod trinomial;
mod univariate;
mod wchain;

pub use condition_p::{check_condition_p, ClauseReport, ConditionPReport, ZERO_DIVISOR_CANDIDATE_CAP};
pub use extension::{coprimality_witness, fourth_extension, present_extension, relatively_prime, Extension, FourthExtension};
pub use graded::{fifth_weights, pham_brieskorn, radical_extension, FifthWeights, PhamBrieskorn, PhamBrieskornCase};
pub use presented::{Presentation, PresentedRing, VariableSpec};
pub use threefold::{jacobian_tangent_dim, threefold_family, KappaCheck, Tangent, Threefold, ThreefoldData};
pub use trinomial::{trinomial_ring, TrinomialData, TrinomialRing, TrinomialStep};
pub use wchain::{lemma_level_check, w_chain, LevelCheck, WChain, W_CHAIN_CAP};

use crate::coeff::CoeffError;
use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    /// A hypothesis of the construction fails; the message names it.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("not relatively prime: {element} lies in (a) ∩ (b) but not in (ab)")]
    NotRelativelyPrime { element: String },
    #[error("relation `{0}` is not homogeneous for the grading")]
    InhomogeneousRelation(String),
    #[error("zero relation")]
    ZeroRelation,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("level {requested} exceeds the cap {cap}")]
    Cap { requested: u32, cap: u32 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
