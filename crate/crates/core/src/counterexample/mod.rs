//! The ring `B = k[x, y][Z_0, Z_1, …] / (x Z_{i+1} + y^{s(i+1)-1} Z_i^{s(i+1)} - Z_{i-1})_{i ≥ 1}`
//! and the finite facts behind `z_0 ∈ ⋂ 𝔪^n` and `z_0 ∈ ⋂ x^n B'` with
//! `B' = B[T]/(xT - y)`.
//!
//! Exact expansions are only feasible at small depth because `s` grows
//! superexponentially; deeper claims use order certificates, which track
//! the guaranteed order of every term through the rewriting
//! `z_{i-1} = x z_{i+1} + y^{s(i+1)-1} z_i^{s(i+1)}`.

mod certificate;
mod coords;
mod expand;
mod sseq;

pub use certificate::{m_order_certificate, x_order_certificate_bprime, ExactCheck, OrderCert, OrderIdeal, RoundLog, CERTIFICATE_CAP};
pub use coords::{coordinate_checks, CoordinateChecks, COORDINATE_CAP};
pub use expand::{expand_z0, expand_z0_bprime, substitution_identity, Expansion, EXPAND_CAP, EXPAND_BPRIME_CAP, IDENTITY_CAP};
pub use sseq::{s_sequence, SSeq};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CexError {
    #[error("instance too large: {what} {requested} exceeds the cap of {cap}")]
    Cap { what: &'static str, requested: u32, cap: u32 },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error(transparent)]
    Groebner(#[from] crate::groebner::GroebnerError),
}

pub(crate) fn check_cap(what: &'static str, requested: u32, cap: u32) -> Result<(), CexError> {
    if requested > cap {
        Err(CexError::Cap { what, requested, cap })
    } else {
        Ok(())
    }
}
