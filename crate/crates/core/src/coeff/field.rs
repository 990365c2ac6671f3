//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integer::is_prime_u64;
use super::CoeffError;

/// An exact coefficient field.
///
/// Implemented by [`BigRational`] (characteristic zero) and by [`Fp`] for a
/// prime modulus fixed at compile time.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Field characteristic, 0 for the rationals.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_int(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    /// Short name used in reports and exported presentations ("QQ", "F5").
    fn name() -> String;

    /// Parses an integer or `num/den` literal.
    fn parse_literal(s: &str) -> Result<Self, CoeffError> {
        let bad = || CoeffError::BadLiteral(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                let d = Self::from_int(&d);
                let inv = d.inv().ok_or(CoeffError::DivisionByZero)?;
                Ok(Self::from_int(&n) * inv)
            }
            None => Ok(Self::from_int(&BigInt::from_str(s.trim()).map_err(|_| bad())?)),
        }
    }

    /// Every element of the field when it is finite.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    /// Splits off a printable sign: `(true, -self)` when the element prints as negative.
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert. Panics on `0^(-k)`.
    fn pow_i64(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow_u64(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow_u64(e.unsigned_abs())
        }
    }
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn name() -> String {
        "QQ".to_string()
    }

    fn sign_split(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }
}

/// Residue class modulo the prime `P`.
///
/// Primality of `P` is checked at compile time whenever the type is used to
/// build an element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const MODULUS_IS_PRIME: () = assert!(is_prime_u64(P), "prime field modulus must be prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::MODULUS_IS_PRIME;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(v: u128) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::MODULUS_IS_PRIME;
        Fp((v % P as u128) as u64)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::reduce(1)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp::reduce(self.0 as u128 + rhs.0 as u128)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp::reduce(self.0 as u128 + P as u128 - rhs.0 as u128)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp::reduce(self.0 as u128 * rhs.0 as u128)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp::reduce(P as u128 - self.0 as u128)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        let r = (self.0 as i128).extended_gcd(&(P as i128));
        Some(Fp(r.x.rem_euclid(P as i128) as u64))
    }

    fn from_int(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Fp::reduce(r.to_u128().expect("residue fits"))
    }

    fn name() -> String {
        format!("F{P}")
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(|v| Fp::reduce(v as u128)).collect())
    }
}

/// Parses a field name such as `QQ`, `Q` or `F5` into its characteristic (0 for
/// the rationals), checking primality of the modulus.
pub fn parse_field_name(name: &str) -> Result<u64, CoeffError> {
    let n = name.trim();
    if n == "QQ" || n == "Q" {
        return Ok(0);
    }
    let digits = n
        .strip_prefix('F')
        .or_else(|| n.strip_prefix("GF"))
        .ok_or_else(|| CoeffError::UnknownField(n.to_string()))?;
    let p: u64 = digits.parse().map_err(|_| CoeffError::UnknownField(n.to_string()))?;
    if p > 1_000_000 {
        return Err(CoeffError::ModulusTooLarge(p));
    }
    if !is_prime_u64(p) {
        return Err(CoeffError::NotPrime(p));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type F7 = Fp<7>;
    type Q = BigRational;

    #[test]
    fn prime_field_basics() {
        assert_eq!(F7::new(-1), F7::new(6));
        assert_eq!(F7::new(3).inv(), Some(F7::new(5)));
        assert_eq!(F7::new(0).inv(), None);
        assert_eq!(F7::new(2) / F7::new(4), F7::new(4));
        assert_eq!(F7::from_int(&BigInt::from(-15)), F7::new(6));
        assert_eq!(F7::name(), "F7");
        assert_eq!(F7::elements().unwrap().len(), 7);
    }

    #[test]
    fn literals() {
        assert_eq!(F7::parse_literal("1/2").unwrap(), F7::new(4));
        assert_eq!(Q::parse_literal("-3/6").unwrap(), Q::new((-1).into(), 2.into()));
        assert!(F7::parse_literal("1/7").is_err());
        assert!(Q::parse_literal("x").is_err());
    }

    #[test]
    fn field_names() {
        assert_eq!(parse_field_name("F5").unwrap(), 5);
        assert_eq!(parse_field_name("QQ").unwrap(), 0);
        assert_eq!(parse_field_name("F6"), Err(CoeffError::NotPrime(6)));
        assert!(parse_field_name("R").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(F7::new(3).pow_u64(6), F7::one());
        assert_eq!(Q::from_i64(2).pow_i64(-2), Q::new(1.into(), 4.into()));
    }

    fn rational() -> impl Strategy<Value = Q> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Q::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0i64..101, b in 0i64..101, c in 0i64..101) {
            let (a, b, c) = (Fp::<101>::new(a), Fp::<101>::new(b), Fp::<101>::new(c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + (-a), Fp::zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), Fp::one());
            }
        }

        #[test]
        fn rational_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Q::one());
            }
            // lowest terms with positive denominator
            let s = a.clone() * b.clone();
            prop_assert!(s.denom().is_positive());
            prop_assert!(s.numer().gcd(s.denom()).is_one());
        }
    }
}
