//! Buchberger-based ideal arithmetic: bases, normal forms, elimination,
//! intersection, quotients and saturation, plus brute-force oracles.

mod brute;
mod buchberger;
mod caps;
mod ideal;
mod order;

pub use brute::{
    brute_force_irreducible, brute_force_member, brute_force_member_witness, monomials_up_to, Irreducibility,
    IRREDUCIBLE_CANDIDATE_CAP,
};
pub use buchberger::{buchberger, reduce, GroebnerBasis};
pub use caps::Caps;
pub use ideal::{
    elim_ideal, elim_ideal_named, ideal_equal, ideal_equal_with, ideal_quotient, intersect, saturation, Ideal, Saturation, SATURATION_CAP,
};
pub use order::MonomialOrder;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("saturate the unit first")]
    Laurent,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("{0}")]
    ZeroArgument(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
