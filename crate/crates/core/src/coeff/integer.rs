//! Extended Euclid, prime avoidance and small-integer helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::CoeffError;

/// Extended Euclid on two integers: returns `(g, s, t)` with `s*a + t*b = g`.
///
/// The sign of `g` is not normalized here.
fn ext_gcd<T: Integer + Signed + Clone>(a: &T, b: &T) -> (T, T, T) {
    if b.is_zero() {
        return (a.clone(), T::one(), T::zero());
    }
    let (q, r) = a.div_rem(b);
    let (g, x, y) = ext_gcd(b, &r);
    let t = x - q * y.clone();
    (g, y, t)
}

/// Greatest common divisor of a list together with Bezout coefficients.
///
/// Returns `g >= 0` and `coeffs` with `sum(coeffs[i] * values[i]) == g`. The
/// coefficients are built by folding the pairwise extended Euclid over the
/// list from left to right, so the output is deterministic.
pub fn gcd_bezout<T: Integer + Signed + Clone>(values: &[T]) -> Result<(T, Vec<T>), CoeffError> {
    if values.iter().all(|v| v.is_zero()) {
        return Err(CoeffError::GcdOfZeroList);
    }
    let first = &values[0];
    let mut g = first.abs();
    let mut coeffs = vec![if first.is_negative() { -T::one() } else if first.is_zero() { T::zero() } else { T::one() }];
    for v in &values[1..] {
        let (h, s, t) = ext_gcd(&g, v);
        for c in coeffs.iter_mut() {
            *c = c.clone() * s.clone();
        }
        coeffs.push(t);
        g = h;
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -c.clone();
        }
    }
    Ok((g, coeffs))
}

/// gcd of a list, zero for an empty or all-zero list.
pub fn gcd_all<T: Integer + Signed + Clone>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.gcd(v))
}

pub fn lcm_all<T: Integer + Signed + Clone>(values: &[T]) -> T {
    values.iter().fold(T::one(), |acc, v| acc.lcm(v))
}

/// Finds `m` with `gcd(c, b + sum(m[i] * a[i])) == 1`.
///
/// Writes `d = gcd(a)` as `sum(e[i] * a[i])` and scans `t = 0, 1, ..., |c|`
/// for the first `t` with `gcd(c, b + t*d) == 1`; the answer is `m[i] = t*e[i]`.
/// A prime dividing both `c` and `d` cannot divide `b` under the hypothesis,
/// and a prime not dividing `d` sees every residue within `|c|` steps, so the
/// scan always succeeds when `gcd(a, b, c) == 1`.
pub fn prime_avoid(a: &[BigInt], b: &BigInt, c: &BigInt) -> Result<Vec<BigInt>, CoeffError> {
    let mut all: Vec<BigInt> = a.to_vec();
    all.push(b.clone());
    all.push(c.clone());
    if !gcd_all(&all).is_one() {
        return Err(CoeffError::PrimeAvoidHypothesis);
    }
    if c.abs().is_one() {
        return Ok(vec![BigInt::zero(); a.len()]);
    }
    let (d, e) = if a.iter().all(|v| v.is_zero()) {
        (BigInt::zero(), vec![BigInt::zero(); a.len()])
    } else {
        gcd_bezout(a)?
    };
    let limit = c.abs();
    let mut t = BigInt::zero();
    while t <= limit {
        let candidate = b + &t * &d;
        if c.gcd(&candidate).is_one() {
            return Ok(e.iter().map(|ei| &t * ei).collect());
        }
        t += 1;
    }
    // unreachable under the gcd hypothesis
    Err(CoeffError::PrimeAvoidHypothesis)
}

/// Trial-division primality test for desk-scale moduli.
pub const fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
