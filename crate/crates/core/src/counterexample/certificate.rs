use std::collections::BTreeMap;

use serde::Serialize;

use crate::coeff::Field;
use crate::poly::Polynomial;
use crate::verdict::Verdict;

use super::{check_cap, expand_z0, expand_z0_bprime, CexError, EXPAND_BPRIME_CAP, EXPAND_CAP};

/// Largest order accepted by the certificates.
pub const CERTIFICATE_CAP: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderIdeal {
    /// `𝔪 = xB + yB`.
    M,
    /// `x B'` with `B' = B[T]/(xT - y)`.
    XBprime,
}

/// One rewriting round: every `(index, order)` class is replaced by
/// `(index + 2, order + 1)` and `(index + 1, order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundLog {
    pub round: u32,
    /// Indices of the `z`s rewritten in this round.
    pub rewritten: Vec<usize>,
    /// Order gained by every term in this round.
    pub increment: u32,
}

/// Exact low-depth comparison against a full expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactCheck {
    pub depth: u32,
    pub terms: usize,
    pub min_order: i64,
    pub ok: bool,
}

/// Certificate that `z_0` lies in the `n`-th power of an ideal: `z_0` is a sum
/// of terms `c · z_i`, each with coefficient `c` of guaranteed order at least `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCert {
    pub target: String,
    pub ideal: OrderIdeal,
    pub claimed: u32,
    pub log: Vec<RoundLog>,
    /// Final `(index, order, number of terms)` classes.
    pub leaves: Vec<(usize, u32, u128)>,
    pub min_order: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactCheck>,
    pub verdict: Verdict,
}

impl OrderCert {
    /// Re-derives the leaves from the log and checks every claimed bound.
    pub fn recheck(&self) -> bool {
        let mut state: BTreeMap<(usize, u32), u128> = BTreeMap::from([((0, 0), 1)]);
        for (r, step) in self.log.iter().enumerate() {
            if step.round != r as u32 + 1 || step.increment != 1 {
                return false;
            }
            let idx: Vec<usize> = state.keys().map(|&(i, _)| i).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
            if idx != step.rewritten {
                return false;
            }
            state = advance(&state);
        }
        let leaves: Vec<(usize, u32, u128)> = state.iter().map(|(&(i, k), &c)| (i, k, c)).collect();
        let min = leaves.iter().map(|l| l.1).min().unwrap_or(0);
        leaves == self.leaves && min == self.min_order && min >= self.claimed && self.exact.as_ref().is_none_or(|e| e.ok)
    }
}

fn advance(state: &BTreeMap<(usize, u32), u128>) -> BTreeMap<(usize, u32), u128> {
    let mut next = BTreeMap::new();
    for (&(i, k), &c) in state {
        *next.entry((i + 2, k + 1)).or_insert(0) += c;
        *next.entry((i + 1, k + 1)).or_insert(0) += c;
    }
    next
}

fn certificate(n: u32, ideal: OrderIdeal, exact: Option<ExactCheck>) -> Result<OrderCert, CexError> {
    check_cap("order", n, CERTIFICATE_CAP)?;
    let mut state: BTreeMap<(usize, u32), u128> = BTreeMap::from([((0, 0), 1)]);
    let mut log = Vec::with_capacity(n as usize);
    for round in 1..=n {
        let rewritten: Vec<usize> = state.keys().map(|&(i, _)| i).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let next = advance(&state);
        let before = state.keys().map(|k| k.1).min().unwrap_or(0);
        let after = next.keys().map(|k| k.1).min().unwrap_or(0);
        log.push(RoundLog { round, rewritten, increment: after - before });
        state = next;
    }
    let leaves: Vec<(usize, u32, u128)> = state.iter().map(|(&(i, k), &c)| (i, k, c)).collect();
    let min_order = leaves.iter().map(|l| l.1).min().unwrap_or(0);
    let ok = min_order >= n && exact.as_ref().is_none_or(|e| e.ok);
    Ok(OrderCert {
        target: "z0".into(),
        ideal,
        claimed: n,
        log,
        leaves,
        min_order,
        exact,
        verdict: Verdict::from_bool(ok),
    })
}

/// `z_0 ∈ 𝔪^n`, using `z_{i-1} ∈ 𝔪 z_i + 𝔪 z_{i+1}`; for `n ≤ 3` the
/// exact expansion is scanned as well.
pub fn m_order_certificate<F: Field>(n: u32) -> Result<OrderCert, CexError> {
    check_cap("order", n, CERTIFICATE_CAP)?;
    let exact = if n <= EXPAND_CAP {
        let e = expand_z0::<F>(n)?;
        Some(ExactCheck { depth: n, terms: e.poly.len(), min_order: e.min_order, ok: e.min_order >= n as i64 })
    } else {
        None
    };
    certificate(n, OrderIdeal::M, exact)
}

/// `z_0 ∈ x^n B'`, using `z_{i-1} = x (z_{i+1} + x^{s-2} T^{s-1} z_i^s)` with
/// `s ≥ 2`; for `n ≤ 2` the exact expansion is divided by `x^n`.
pub fn x_order_certificate_bprime<F: Field>(n: u32) -> Result<OrderCert, CexError> {
    check_cap("order", n, CERTIFICATE_CAP)?;
    let exact = if n <= EXPAND_BPRIME_CAP {
        let e = expand_z0_bprime::<F>(n)?;
        let xn = Polynomial::var_index(e.poly.vars(), 0).pow(n as u64);
        let ok = e.poly.exact_div(&xn).is_some_and(|q| &q * &xn == e.poly);
        Some(ExactCheck { depth: n, terms: e.poly.len(), min_order: e.min_order, ok })
    } else {
        None
    };
    certificate(n, OrderIdeal::XBprime, exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn trivial_and_small() {
        let c = m_order_certificate::<Q>(0).unwrap();
        assert!(c.log.is_empty());
        assert_eq!(c.verdict, Verdict::Verified);
        let c = m_order_certificate::<Q>(1).unwrap();
        assert_eq!(c.log.len(), 1);
        assert_eq!(c.leaves, vec![(1, 1, 1), (2, 1, 1)]);
        assert!(c.exact.as_ref().unwrap().ok);
    }

    #[test]
    fn ten_rounds() {
        for n in 0..=10 {
            let c = m_order_certificate::<Q>(n).unwrap();
            assert_eq!(c.verdict, Verdict::Verified);
            assert!(c.log.iter().all(|s| s.increment == 1));
            assert!(c.leaves.iter().all(|l| l.1 >= n));
            // the number of terms doubles each round
            assert_eq!(c.leaves.iter().map(|l| l.2).sum::<u128>(), 1u128 << n);
            assert!(c.recheck());
            let b = x_order_certificate_bprime::<Q>(n).unwrap();
            assert_eq!(b.verdict, Verdict::Verified);
            assert!(b.recheck());
        }
        assert!(m_order_certificate::<Q>(CERTIFICATE_CAP + 1).is_err());
        assert!(m_order_certificate::<Q>(CERTIFICATE_CAP).is_ok());
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let mut c = m_order_certificate::<Q>(4).unwrap();
        c.claimed = 5;
        assert!(!c.recheck());
        let mut c = m_order_certificate::<Q>(4).unwrap();
        c.leaves[0].1 += 1;
        assert!(!c.recheck());
    }
}
