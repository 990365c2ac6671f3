//! Graded-ring gadgets: the twisting automorphism, the Laurent isomorphism
//! and the degree unit of a graded localization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::coeff::{gcd_bezout, Field};

use super::{Grading, Monomial, PolyError, Polynomial, RingMap, VarTable};

/// Multiplies each homogeneous component of degree `i` by `unit^(d*i)`.
///
/// `unit` must be an invertible monomial of degree zero; then
/// `phi_theta(g, unit, -d, phi_theta(g, unit, d, p)) == p`.
pub fn phi_theta<F: Field>(g: &Grading, unit: &Polynomial<F>, d: i64, p: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
    if !unit.is_unit_monomial() {
        return Err(PolyError::UnitNotInvertible);
    }
    let unit = unit.embed(g.vars())?;
    if g.degree_of(&unit)? != super::Degree::Homogeneous(0) {
        return Err(PolyError::UnitNotDegreeZero);
    }
    let p = p.embed(g.vars())?;
    let inverse = unit.unit_inverse().ok_or(PolyError::UnitNotInvertible)?;
    let mut out = Polynomial::zero(g.vars());
    for (deg, comp) in g.homogeneous_components(&p) {
        let k = d * deg;
        let factor = if k >= 0 { unit.pow(k as u64) } else { inverse.pow(k.unsigned_abs()) };
        out = &out + &(&comp * &factor);
    }
    Ok(out)
}

/// Mutually inverse maps between `k[x^±1, y^±1]/(x^a y^b - λ)` and `k[z^±1]`.
#[derive(Clone, Debug)]
pub struct LaurentIso<F> {
    /// Bezout pair with `a*m + b*n = 1`.
    pub m: i64,
    pub n: i64,
    /// `z ↦ x^n y^-m`.
    pub fwd: RingMap<F>,
    /// `x ↦ λ^m z^b`, `y ↦ λ^n z^-a`.
    pub inv: RingMap<F>,
}

/// Builds the Laurent isomorphism for coprime `a, b > 0` and `λ ≠ 0`.
///
/// The Bezout coefficient `m` is normalized into `[0, b)` and then moved to
/// `m - b` when that is strictly smaller in absolute value.
pub fn laurent_iso<F: Field>(a: i64, b: i64, lambda: &F) -> Result<LaurentIso<F>, PolyError> {
    if a <= 0 || b <= 0 || a.gcd(&b) != 1 {
        return Err(PolyError::NotCoprime);
    }
    let lambda_inv = lambda.inv().ok_or(crate::coeff::CoeffError::DivisionByZero)?;
    let (_, c) = gcd_bezout(&[BigInt::from(a), BigInt::from(b)])?;
    let mut m = c[0].mod_floor(&BigInt::from(b)).to_i64().expect("small Bezout coefficient");
    if (m - b).abs() < m.abs() {
        m -= b;
    }
    let n = (1 - a * m) / b;
    debug_assert_eq!(a * m + b * n, 1);

    let xy = VarTable::with_flags(vec![("x".into(), true), ("y".into(), true)])?;
    let z = VarTable::with_flags(vec![("z".into(), true)])?;
    let lam = |e: i64| if e >= 0 { lambda.pow_u64(e as u64) } else { lambda_inv.pow_u64(e.unsigned_abs()) };

    let fwd = RingMap::new(&z, &xy, vec![Polynomial::term(&xy, Monomial::from_exponents(&[n, -m]), F::one())?])?;
    let inv = RingMap::new(
        &xy,
        &z,
        vec![
            Polynomial::term(&z, Monomial::from_exponents(&[b]), lam(m))?,
            Polynomial::term(&z, Monomial::from_exponents(&[-a]), lam(n))?,
        ],
    )?;
    Ok(LaurentIso { m, n, fwd, inv })
}

/// Data of a graded localization unit: `d` generates the group of weights,
/// `w = a/b` has degree `d`, and `f = α a b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeUnit {
    pub d: i64,
    pub a: Monomial,
    pub b: Monomial,
    pub f: Monomial,
    pub w: Monomial,
}

/// Computes the degree unit for a free polynomial carrier.
///
/// The Bezout coefficients on the variable weights split into positive parts
/// (exponents of `a`) and negative parts (exponents of `b`).
pub fn degree_unit(g: &Grading, alpha: &Monomial) -> Result<DegreeUnit, PolyError> {
    if g.is_trivial() {
        return Err(PolyError::TrivialGrading);
    }
    if alpha.nvars() != g.vars().len() {
        return Err(PolyError::ArityMismatch { expected: g.vars().len(), found: alpha.nvars() });
    }
    let weights: Vec<BigInt> = g.weights().iter().map(|&w| BigInt::from(w)).collect();
    let (d, coeffs) = gcd_bezout(&weights)?;
    let coeffs: Vec<i64> = coeffs.iter().map(|c| c.to_i64().expect("small Bezout coefficient")).collect();
    // zero weights contribute nothing and are kept out of a and b
    let pos: Vec<i64> = coeffs.iter().zip(g.weights()).map(|(&c, &w)| if w != 0 && c > 0 { c } else { 0 }).collect();
    let neg: Vec<i64> = coeffs.iter().zip(g.weights()).map(|(&c, &w)| if w != 0 && c < 0 { -c } else { 0 }).collect();
    let a = Monomial::from_exponents(&pos);
    let b = Monomial::from_exponents(&neg);
    let d = d.to_i64().expect("small gcd");
    debug_assert_eq!(g.monomial_degree(&a) - g.monomial_degree(&b), d);
    Ok(DegreeUnit { d, f: alpha.mul(&a).mul(&b), w: a.div_laurent(&b), a, b })
}
