//! Exact integers, rationals and prime fields.

mod field;
mod integer;

pub use field::{parse_field_name, Field, Fp};
pub use integer::{binomial, gcd_all, gcd_bezout, is_prime_u64, lcm_all, prime_avoid};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("gcd of zero list")]
    GcdOfZeroList,
    #[error("hypothesis of prime avoidance fails")]
    PrimeAvoidHypothesis,
    #[error("bad coefficient literal `{0}`")]
    BadLiteral(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown field `{0}` (expected QQ or Fp with p prime)")]
    UnknownField(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
}
