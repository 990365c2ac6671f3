//! Exact commutative algebra for graded rings and unique factorization checks.
//!
//! The layers build on each other: [`coeff`] supplies exact fields and
//! integer lemmas, [`poly`] sparse (Laurent) polynomials, [`groebner`] ideal
//! arithmetic, [`constructions`] presented rings and hypothesis checkers,
//! [`omega`] a rewriting normal form for a non-noetherian graded ring, and
//! [`counterexample`] order certificates over `k[x, y]`.
//!
//! Everything is generic over [`coeff::Field`]; the aliases below fix the
//! usual coefficient choices.

pub mod coeff;
pub mod constructions;
pub mod counterexample;
pub mod groebner;
mod linalg;
pub mod omega;
pub mod poly;
pub mod verdict;

pub use verdict::Verdict;

/// The rationals.
pub type Q = num_rational::BigRational;
pub type F2 = coeff::Fp<2>;
pub type F3 = coeff::Fp<3>;
pub type F5 = coeff::Fp<5>;
pub type F7 = coeff::Fp<7>;
pub type F11 = coeff::Fp<11>;
pub type F101 = coeff::Fp<101>;
pub type F32003 = coeff::Fp<32003>;

pub type PolyQ = poly::Polynomial<Q>;
pub type PolyF5 = poly::Polynomial<F5>;
pub type IdealQ = groebner::Ideal<Q>;
pub type IdealF5 = groebner::Ideal<F5>;
