use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::CexError;

/// `s(1) = 2`, `s(2) = 3`, `s(n) = n ∏_{i ≤ n-2} s(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSeq {
    values: Vec<BigInt>,
}

impl SSeq {
    /// `s(1), …, s(n)`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `s(i)` for `1 ≤ i ≤ len`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `s(i)` as an exponent.
    pub(crate) fn exponent(&self, i: usize) -> Result<u64, CexError> {
        self.get(i).to_u64().ok_or_else(|| CexError::Invalid(format!("s({i}) does not fit an exponent")))
    }
}

/// Exact values `s(1..=n)`; `n = 0` gives the empty sequence.
pub fn s_sequence(n: usize) -> SSeq {
    let mut values: Vec<BigInt> = Vec::with_capacity(n);
    // running product s(1)⋯s(k-2)
    let mut prefix = BigInt::from(1);
    for k in 1..=n {
        let v = match k {
            1 => BigInt::from(2),
            2 => BigInt::from(3),
            _ => {
                prefix *= &values[k - 3];
                BigInt::from(k) * &prefix
            }
        };
        values.push(v);
    }
    SSeq { values }
}
