use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{binomial, Field};
use crate::groebner::Caps;

use super::{sigma, OmegaError, OmegaMonomial, OmegaPoly};

/// Which `z_m` with `e_m ≥ 2` is rewritten first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pivot {
    #[default]
    Largest,
    Smallest,
}

/// One coordinate `coeff · x^m F_n` with `n - m` equal to the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry<F> {
    pub m: u128,
    pub n: u128,
    pub coeff: F,
}

/// Coordinates of a homogeneous element on `{x^m F_n : n - m = d}`, by increasing `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion<F> {
    pub degree: i128,
    pub entries: Vec<BasisEntry<F>>,
}

impl<F: Field> BasisExpansion<F> {
    /// The element `Σ coeff · x^m F_n`.
    pub fn to_poly(&self) -> Result<OmegaPoly<F>, OmegaError> {
        let mut p = OmegaPoly::zero();
        for t in &self.entries {
            p.add_term(OmegaMonomial::x_pow(t.m).mul(&sigma(t.n as i128)?)?, t.coeff.clone());
        }
        Ok(p)
    }

    pub fn min_m(&self) -> Option<u128> {
        self.entries.first().map(|t| t.m)
    }
}

impl<F: Field> fmt::Display for BasisExpansion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.degree)?;
        for t in &self.entries {
            write!(f, " ({}, {}, {})", t.m, t.n, t.coeff)?;
        }
        Ok(())
    }
}

/// Normal form of an element, one expansion per nonzero homogeneous component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<F> {
    pub components: BTreeMap<i128, BasisExpansion<F>>,
    /// Number of rewrite steps applied.
    pub steps: u64,
}

impl<F: Field> NormalForm<F> {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn to_poly(&self) -> Result<OmegaPoly<F>, OmegaError> {
        let mut p = OmegaPoly::zero();
        for e in self.components.values() {
            p = p.add(&e.to_poly()?);
        }
        Ok(p)
    }

    /// Smallest `x`-exponent over all coordinates.
    pub fn min_m(&self) -> Option<u128> {
        self.components.values().filter_map(BasisExpansion::min_m).min()
    }

    /// Stable text rendering used to compare normal forms byte for byte.
    pub fn render(&self) -> String {
        self.components.values().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
    }
}

pub fn normal_form<F: Field>(p: &OmegaPoly<F>) -> Result<NormalForm<F>, OmegaError> {
    normal_form_with(p, Pivot::Largest)
}

/// Rewrites with `z_m^{2a+b} = z_m^b (-1)^a Σ_k C(a,k) x^{2^{m+1}k} z_{m+2}^k z_{m+1}^{a-k}`
/// until every monomial is squarefree in the `z`s. Each step lowers `Σ e_i`.
pub fn normal_form_with<F: Field>(p: &OmegaPoly<F>, pivot: Pivot) -> Result<NormalForm<F>, OmegaError> {
    let caps = Caps::current();
    let step_cap = (caps.max_terms as u64).saturating_mul(100);
    let mut work: BTreeMap<OmegaMonomial, F> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut done: BTreeMap<(i128, u128), F> = BTreeMap::new();
    let mut steps = 0u64;
    while let Some((mono, c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        let e = mono.z_exponents();
        let eligible = e.iter().enumerate().filter(|(_, &k)| k >= 2).map(|(i, _)| i);
        let m = match pivot {
            Pivot::Largest => eligible.last(),
            Pivot::Smallest => eligible.into_iter().next(),
        };
        let Some(m) = m else {
            let slot = done.entry((mono.degree(), mono.x_exponent())).or_insert_with(F::zero);
            *slot += c;
            continue;
        };
        steps += 1;
        if steps > step_cap || work.len() > caps.max_terms {
            return Err(OmegaError::TooLarge(format!("normal form exceeded {step_cap} steps or {} pending terms", caps.max_terms)));
        }
        if m + 2 >= super::OMEGA_INDEX_CAP {
            return Err(OmegaError::IndexCap(m + 2));
        }
        let (a, b) = (e[m] / 2, e[m] % 2);
        let mut rest = e.to_vec();
        rest[m] = b;
        rest.resize(rest.len().max(m + 3), 0);
        let shift = 1u128 << (m + 1);
        let sign = if a % 2 == 1 { -c } else { c };
        for k in 0..=a {
            let coeff = sign.clone() * F::from_int(&binomial(a as u64, k as u64));
            if coeff.is_zero() {
                continue;
            }
            let mut ek = rest.clone();
            ek[m + 1] += a - k;
            ek[m + 2] += k;
            let r = shift
                .checked_mul(k as u128)
                .and_then(|v| v.checked_add(mono.x_exponent()))
                .ok_or_else(|| OmegaError::TooLarge("x exponent overflow".into()))?;
            let next = OmegaMonomial::new(r, ek)?;
            let slot = work.entry(next).or_insert_with(F::zero);
            *slot += coeff;
        }
    }
    let mut components: BTreeMap<i128, BasisExpansion<F>> = BTreeMap::new();
    for ((d, m), c) in done {
        if c.is_zero() {
            continue;
        }
        let n = u128::try_from(d + m as i128).map_err(|_| OmegaError::TooLarge("basis index out of range".into()))?;
        let exp = components.entry(d).or_insert_with(|| BasisExpansion { degree: d, entries: Vec::new() });
        debug_assert!(exp.entries.last().is_none_or(|t| t.m < m));
        exp.entries.push(BasisEntry { m, n, coeff: c });
    }
    Ok(NormalForm { components, steps })
}

/// `p ∈ xΩ`: every basis coordinate carries a factor `x`.
pub fn in_x_omega<F: Field>(p: &OmegaPoly<F>) -> Result<bool, OmegaError> {
    Ok(normal_form(p)?.min_m().is_none_or(|m| m >= 1))
}

/// The largest `m` with `p ∈ x^m Ω`; then `p ∉ x^{m+1} Ω`.
pub fn x_adic_floor<F: Field>(p: &OmegaPoly<F>) -> Result<u128, OmegaError> {
    normal_form(p)?.min_m().ok_or(OmegaError::ZeroOrder)
}
