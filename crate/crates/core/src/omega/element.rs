use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Field;
use crate::poly::{Polynomial, VarTable};

use super::{OmegaError, OMEGA_INDEX_CAP};

/// `x^r ∏ z_i^{e_i}`; `e` never ends in a zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaMonomial {
    r: u128,
    e: Vec<u32>,
}

impl OmegaMonomial {
    pub fn one() -> Self {
        OmegaMonomial { r: 0, e: Vec::new() }
    }

    pub fn new(r: u128, mut e: Vec<u32>) -> Result<Self, OmegaError> {
        while e.last() == Some(&0) {
            e.pop();
        }
        if e.len() > OMEGA_INDEX_CAP {
            return Err(OmegaError::IndexCap(e.len() - 1));
        }
        Ok(OmegaMonomial { r, e })
    }

    pub fn x_pow(r: u128) -> Self {
        OmegaMonomial { r, e: Vec::new() }
    }

    pub fn z(i: usize) -> Result<Self, OmegaError> {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        OmegaMonomial::new(0, e)
    }

    pub fn x_exponent(&self) -> u128 {
        self.r
    }

    pub fn z_exponent(&self, i: usize) -> u32 {
        self.e.get(i).copied().unwrap_or(0)
    }

    pub fn z_exponents(&self) -> &[u32] {
        &self.e
    }

    /// `Σ e_i`, the termination measure of the rewriting.
    pub fn size(&self) -> u64 {
        self.e.iter().map(|&k| k as u64).sum()
    }

    /// `-r + Σ e_i 2^i`.
    pub fn degree(&self) -> i128 {
        let z: i128 = self.e.iter().enumerate().map(|(i, &k)| (k as i128) << i).sum();
        z - self.r as i128
    }

    pub fn is_squarefree(&self) -> bool {
        self.e.iter().all(|&k| k <= 1)
    }

    /// `n` with `F_n` equal to the `z` part; meaningful for squarefree monomials.
    pub fn binary_index(&self) -> u128 {
        self.e.iter().enumerate().filter(|(_, &k)| k == 1).map(|(i, _)| 1u128 << i).sum()
    }

    pub fn mul(&self, o: &Self) -> Result<Self, OmegaError> {
        let n = self.e.len().max(o.e.len());
        let e = (0..n).map(|i| self.z_exponent(i) + o.z_exponent(i)).collect();
        let r = self.r.checked_add(o.r).ok_or_else(|| OmegaError::TooLarge("x exponent overflow".into()))?;
        OmegaMonomial::new(r, e)
    }
}

impl fmt::Display for OmegaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.r {
            0 => {}
            1 => parts.push("x".to_string()),
            r => parts.push(format!("x^{r}")),
        }
        for (i, &k) in self.e.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(format!("z{i}")),
                k => parts.push(format!("z{i}^{k}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `F_d`: the product of `z_i` over the binary digits `d_i = 1` of `d`.
pub fn sigma(d: i128) -> Result<OmegaMonomial, OmegaError> {
    if d < 0 {
        return Err(OmegaError::NegativeDegree(d));
    }
    let d = d as u128;
    let len = 128 - d.leading_zeros() as usize;
    OmegaMonomial::new(0, (0..len).map(|i| ((d >> i) & 1) as u32).collect())
}

/// A formal polynomial in `x, z_0, z_1, …`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPoly<F> {
    terms: BTreeMap<OmegaMonomial, F>,
}

impl<F: Field> OmegaPoly<F> {
    pub fn zero() -> Self {
        OmegaPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(m: OmegaMonomial, c: F) -> Self {
        let mut p = OmegaPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (OmegaMonomial, F)>) -> Self {
        let mut p = OmegaPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: OmegaMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OmegaMonomial, &F)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        OmegaPoly::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, OmegaError> {
        let mut p = OmegaPoly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                p.add_term(m.mul(n)?, a.clone() * b.clone());
            }
        }
        Ok(p)
    }

    /// Degrees of the terms, each listed once in increasing order.
    pub fn degrees(&self) -> Vec<i128> {
        let mut d: Vec<i128> = self.terms.keys().map(OmegaMonomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Reads the usual polynomial syntax over the names `x, z0, z1, …`.
    pub fn parse(s: &str) -> Result<Self, OmegaError> {
        let mut top: Option<usize> = None;
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let id = &s[start..i];
                if id == "x" {
                    continue;
                }
                let idx = id
                    .strip_prefix('z')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| OmegaError::Parse(format!("unknown variable `{id}` (expected x or z<i>)")))?;
                if idx >= OMEGA_INDEX_CAP {
                    return Err(OmegaError::IndexCap(idx));
                }
                top = Some(top.map_or(idx, |t| t.max(idx)));
            } else {
                i += 1;
            }
        }
        let mut names = vec!["x".to_string()];
        names.extend((0..top.map_or(0, |t| t + 1)).map(|k| format!("z{k}")));
        let vars = VarTable::new(&names)?;
        let p = Polynomial::<F>::parse(&vars, s)?;
        let mut out = OmegaPoly::zero();
        for (m, c) in p.terms() {
            let ex = m.exponents();
            let e = ex[1..].iter().map(|&k| k as u32).collect();
            out.add_term(OmegaMonomial::new(ex[0] as u128, e)?, c.clone());
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for OmegaPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = c.sign_split();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == OmegaMonomial::one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type P = OmegaPoly<Fp<5>>;

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(0).unwrap(), OmegaMonomial::one());
        assert_eq!(sigma(5).unwrap(), OmegaMonomial::new(0, vec![1, 0, 1]).unwrap());
        for k in 0..10 {
            assert_eq!(sigma(1 << k).unwrap(), OmegaMonomial::z(k).unwrap());
        }
        assert!(sigma(-1).is_err());
        assert_eq!(sigma(u64::MAX as i128).unwrap().size(), 64);
    }

    #[test]
    fn sigma_is_injective_and_graded() {
        let mut seen = std::collections::BTreeSet::new();
        for d in 0..512 {
            let s = sigma(d).unwrap();
            assert_eq!(s.degree(), d);
            assert!(s.is_squarefree());
            assert_eq!(s.binary_index() as i128, d);
            assert!(seen.insert(s));
        }
    }

    #[test]
    fn parse_and_print() {
        let p = P::parse("z1 + z0^2 - 2*x^3*z2").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.degrees(), vec![1, 2]);
        assert_eq!(P::parse(&p.to_string()).unwrap(), p);
        assert!(P::parse("y + z0").is_err());
        assert!(P::parse("z64").is_err());
        assert_eq!(P::parse("3").unwrap().to_string(), "3");
    }
}
