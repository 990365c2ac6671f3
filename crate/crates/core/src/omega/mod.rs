//! The ℤ-graded ring Ω = k[x, z_0, z_1, …] / (x^{2^i} z_{i+1} + z_i + z_{i-1}^2)_{i ≥ 1}
//! with `deg x = -1` and `deg z_i = 2^i`, as a rewriting system.
//!
//! Every element has a unique expansion on the basis `x^m F_n`, where `F_n`
//! is the squarefree product of the `z_i` indexed by the binary digits of `n`.
//! [`normal_form`] computes that expansion by repeatedly replacing
//! `z_m^2` with `-(x^{2^{m+1}} z_{m+2} + z_{m+1})`.

mod element;
mod rewrite;

pub use element::{sigma, OmegaMonomial, OmegaPoly};
pub use rewrite::{in_x_omega, normal_form, normal_form_with, x_adic_floor, BasisEntry, BasisExpansion, NormalForm, Pivot};

/// Largest admissible `z` index plus one.
pub const OMEGA_INDEX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("z index {0} exceeds the cap of {OMEGA_INDEX_CAP}")]
    IndexCap(usize),
    #[error("sigma is defined on d ≥ 0, got {0}")]
    NegativeDegree(i128),
    #[error("zero has infinite order")]
    ZeroOrder,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}
