use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::coeff::{gcd_all, lcm_all, prime_avoid, Field};
use crate::poly::{Degree, Grading, Polynomial, VarTable};

use super::{ConstructionError, PresentedRing};

/// `A[Z] / (Z^c - F)` with the induced grading: the weights of `A` are
/// multiplied by `c` and `Z` gets degree `ω = deg F`.
///
/// Requires a graded base, `F` homogeneous and `gcd(c, ω) = 1`.
pub fn radical_extension<F: Field>(base: &PresentedRing<F>, f: &Polynomial<F>, c: i64) -> Result<PresentedRing<F>, ConstructionError> {
    let name = base.vars().fresh_name("Z");
    radical_extension_named(base, f, c, &name)
}

fn radical_extension_named<F: Field>(
    base: &PresentedRing<F>,
    f: &Polynomial<F>,
    c: i64,
    name: &str,
) -> Result<PresentedRing<F>, ConstructionError> {
    let g = base.grading().ok_or_else(|| ConstructionError::Hypothesis("the base ring must be graded".into()))?;
    if c <= 0 {
        return Err(ConstructionError::Hypothesis("c must be positive".into()));
    }
    if f.is_zero() {
        return Err(ConstructionError::Hypothesis("F must be nonzero".into()));
    }
    let f = f.embed(base.vars())?;
    let omega = match g.degree_of(&f)? {
        Degree::Homogeneous(d) => d,
        Degree::NonHomogeneous => return Err(ConstructionError::Hypothesis("F not homogeneous".into())),
    };
    let common = c.gcd(&omega);
    if common != 1 {
        return Err(ConstructionError::Hypothesis(format!("gcd(c, deg F) = {common} ≠ 1")));
    }
    let vars = base.vars().extended(&[name])?;
    let grading = g.scaled(c).extended(&vars, &[omega])?;
    let z = Polynomial::var_index(&vars, vars.len() - 1);
    let mut relations = base.relations().to_vec();
    relations.push(&z.pow(c as u64) - &f.embed(&vars)?);
    Ok(PresentedRing::new(&vars, relations, Some(grading), "radical-extension")?.with_metadata("deg Z", omega.to_string()))
}

/// Which hypothesis of the Pham–Brieskorn statement holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhamBrieskornCase {
    /// `n ≥ 4` and `gcd(a_n, a_1⋯a_{n-1}) = 1`.
    Long,
    /// `n = 3` with pairwise coprime exponents.
    Triple,
}

#[derive(Clone, Debug)]
pub struct PhamBrieskorn<F> {
    pub ring: PresentedRing<F>,
    pub case: PhamBrieskornCase,
    /// `lcm(a_1, …, a_{n-1})`, the degree of `F` before rescaling.
    pub omega: i64,
    /// `F = -(X_1^{a_1} + … + X_{n-1}^{a_{n-1}})` over the first `n - 1` variables.
    pub f: Polynomial<F>,
}

/// `k[X_1, …, X_n] / (X_1^{a_1} + … + X_n^{a_n})` built as a radical
/// extension of `k[X_1, …, X_{n-1}]` with weights `ω / a_i`.
pub fn pham_brieskorn<F: Field>(exponents: &[i64]) -> Result<PhamBrieskorn<F>, ConstructionError> {
    let n = exponents.len();
    if n < 3 {
        return Err(ConstructionError::Hypothesis(format!("need at least three exponents, got {n}")));
    }
    if exponents.iter().any(|&a| a < 1) {
        return Err(ConstructionError::Hypothesis("exponents must be positive".into()));
    }
    let last = exponents[n - 1];
    let case = if n >= 4 {
        let g = exponents[..n - 1].iter().fold(1i64, |acc, a| acc * a.gcd(&last).max(1));
        if g != 1 {
            return Err(ConstructionError::Hypothesis(format!("case (1) fails: gcd(a_n, a_1⋯a_(n-1)) = {g} ≠ 1")));
        }
        PhamBrieskornCase::Long
    } else {
        for i in 0..3 {
            for j in i + 1..3 {
                if exponents[i].gcd(&exponents[j]) != 1 {
                    return Err(ConstructionError::Hypothesis(format!(
                        "case (2) fails: a_{} = {} and a_{} = {} are not relatively prime",
                        i + 1,
                        exponents[i],
                        j + 1,
                        exponents[j]
                    )));
                }
            }
        }
        PhamBrieskornCase::Triple
    };
    let names: Vec<String> = (1..n).map(|i| format!("X{i}")).collect();
    let vars = VarTable::new(&names)?;
    let omega = lcm_all(&exponents[..n - 1]);
    let grading = Grading::new(&vars, exponents[..n - 1].iter().map(|a| omega / a).collect())?;
    let mut f = Polynomial::zero(&vars);
    for (i, &a) in exponents[..n - 1].iter().enumerate() {
        f = &f - &Polynomial::var_index(&vars, i).pow(a as u64);
    }
    let base = PresentedRing::free(&vars, Some(grading), "pham-brieskorn")?;
    let ring = radical_extension_named(&base, &f, last, &format!("X{n}"))?;
    let exps: Vec<String> = exponents.iter().map(i64::to_string).collect();
    let ring = ring.with_metadata("exponents", exps.join(","));
    Ok(PhamBrieskorn { ring, case, omega, f })
}

/// Weights for the auxiliary variables `Z_1, …, Z_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FifthWeights {
    pub m: Vec<i64>,
    /// `ω - (m_1 e_1 + … + m_{n-1} e_{n-1})`, coprime to `e_n`.
    pub check: i64,
}

/// Integers `m_i` with `gcd(e_n, ω - Σ m_i e_i) = 1`, found by prime avoidance.
pub fn fifth_weights(omega: i64, e: &[i64]) -> Result<FifthWeights, ConstructionError> {
    if e.is_empty() || e.iter().any(|&x| x < 1) {
        return Err(ConstructionError::Hypothesis("exponents e_i must be positive and nonempty".into()));
    }
    let mut all = e.to_vec();
    all.push(omega);
    let g = gcd_all(&all);
    if g != 1 {
        return Err(ConstructionError::Hypothesis(format!("gcd(e_1, …, e_n, ω) = {g} ≠ 1")));
    }
    let n = e.len();
    let a: Vec<BigInt> = e[..n - 1].iter().map(|&x| BigInt::from(x)).collect();
    let shift = prime_avoid(&a, &BigInt::from(omega), &BigInt::from(e[n - 1]))?;
    let m = shift
        .iter()
        .map(|x| (-x).to_i64().ok_or_else(|| ConstructionError::Invalid("weight out of range".into())))
        .collect::<Result<Vec<_>, _>>()?;
    let check = omega - m.iter().zip(e).map(|(m, e)| m * e).sum::<i64>();
    debug_assert_eq!(check.gcd(&e[n - 1]), 1);
    Ok(FifthWeights { m, check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type R = PresentedRing<Fp<5>>;

    #[test]
    fn radical_extension_grading() {
        let v = VarTable::new(&["X1", "X2"]).unwrap();
        let a = R::free(&v, Some(Grading::new(&v, vec![3, 2]).unwrap()), "").unwrap();
        let f = a.parse_poly("-X1^2 - X2^3").unwrap();
        let b = radical_extension(&a, &f, 5).unwrap();
        assert_eq!(b.grading().unwrap().weights(), &[15, 10, 6]);
        assert_eq!(b.relations()[0], b.parse_poly("Z^5 + X1^2 + X2^3").unwrap());
        let b1 = radical_extension(&a, &f, 1).unwrap();
        assert_eq!(b1.relations()[0], b1.parse_poly("Z + X1^2 + X2^3").unwrap());
        let err = radical_extension(&a, &f, 3).unwrap_err();
        assert!(err.to_string().contains("gcd(c, deg F)"));
        let v = VarTable::new(&["x", "y"]).unwrap();
        let a = R::free(&v, Some(Grading::new(&v, vec![1, 1]).unwrap()), "").unwrap();
        let err = radical_extension(&a, &a.parse_poly("x + y^2").unwrap(), 2).unwrap_err();
        assert!(err.to_string().contains("F not homogeneous"));
    }

    #[test]
    fn pham_brieskorn_cases() {
        let pb = pham_brieskorn::<Fp<5>>(&[2, 3, 5]).unwrap();
        assert_eq!(pb.case, PhamBrieskornCase::Triple);
        assert_eq!(pb.ring.grading().unwrap().weights(), &[15, 10, 6]);
        assert_eq!(pb.ring.relations()[0], pb.ring.parse_poly("X1^2 + X2^3 + X3^5").unwrap());
        assert!(pham_brieskorn::<Fp<5>>(&[2, 2, 3]).unwrap_err().to_string().contains("case (2)"));
        assert_eq!(pham_brieskorn::<Fp<5>>(&[2, 3, 4, 5]).unwrap().case, PhamBrieskornCase::Long);
        assert!(pham_brieskorn::<Fp<5>>(&[2, 3, 4, 6]).unwrap_err().to_string().contains("case (1)"));
        assert!(pham_brieskorn::<Fp<5>>(&[2, 3]).is_err());
    }

    #[test]
    fn fifth_weight_selection() {
        let w = fifth_weights(6, &[2, 3]).unwrap();
        assert_eq!(w.m.len(), 1);
        assert_eq!(w.check, 6 - 2 * w.m[0]);
        assert_eq!(w.check.gcd(&3), 1);
        assert_eq!(fifth_weights(5, &[2]).unwrap(), FifthWeights { m: vec![], check: 5 });
        assert!(fifth_weights(4, &[2, 2]).is_err());
    }
}
