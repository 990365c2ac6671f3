use num_integer::Integer;
use serde::Serialize;

use crate::coeff::{gcd_all, gcd_bezout, Field};
use crate::poly::{Degree, Grading, Monomial, Polynomial, VarTable};

use super::{ConstructionError, PresentedRing};

/// Partition `n = n_0 + … + n_r`, exponent vectors `β_i` and constants
/// `λ_2, …, λ_r` for the trinomial relations
/// `T_0^{β_0} + λ_i T_1^{β_1} + T_i^{β_i}`, `2 ≤ i ≤ r`.
#[derive(Clone, Debug)]
pub struct TrinomialData<F> {
    pub partition: Vec<usize>,
    pub exponents: Vec<Vec<i64>>,
    pub constants: Vec<F>,
    /// Optional variable names per block; defaults to `t{i}_{j}`.
    pub names: Option<Vec<Vec<String>>>,
}

/// Grading used at induction step `m`: every `T_i^{β_i}`, `i < m`, has
/// degree `d_0⋯d_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinomialStep {
    pub m: usize,
    pub weights: Vec<(String, i64)>,
    pub degree: i64,
    /// `gcd(β_m entries, degree)`, which must be 1.
    pub gcd: i64,
}

#[derive(Clone, Debug)]
pub struct TrinomialRing<F> {
    pub ring: PresentedRing<F>,
    pub steps: Vec<TrinomialStep>,
}

pub fn trinomial_ring<F: Field>(data: &TrinomialData<F>) -> Result<TrinomialRing<F>, ConstructionError> {
    let hyp = |s: String| Err(ConstructionError::Hypothesis(s));
    let part = &data.partition;
    if part.len() < 3 {
        return hyp(format!("partition: need r ≥ 2 blocks beyond the first, got {} block(s)", part.len()));
    }
    if part.iter().any(|&k| k == 0) {
        return hyp("partition: every block must be nonempty".into());
    }
    let r = part.len() - 1;
    if data.exponents.len() != r + 1 {
        return hyp(format!("partition: expected {} exponent vectors, got {}", r + 1, data.exponents.len()));
    }
    for (i, (beta, &k)) in data.exponents.iter().zip(part).enumerate() {
        if beta.len() != k {
            return hyp(format!("partition: β_{i} has {} entries but block {i} has {k} variables", beta.len()));
        }
        if beta.iter().any(|&e| e < 1) {
            return hyp(format!("exponents: β_{i} has a non-positive entry"));
        }
    }
    let d: Vec<i64> = data.exponents.iter().map(|b| gcd_all(b)).collect();
    for i in 0..=r {
        for j in i + 1..=r {
            if d[i].gcd(&d[j]) != 1 {
                return hyp(format!("exponents: d_{i} = {} and d_{j} = {} are not pairwise relatively prime", d[i], d[j]));
            }
        }
    }
    if data.constants.len() != r - 1 {
        return hyp(format!("constants: expected {} constants λ_2..λ_r, got {}", r - 1, data.constants.len()));
    }
    for (i, c) in data.constants.iter().enumerate() {
        if c.is_zero() {
            return hyp(format!("constants: λ_{} is zero", i + 2));
        }
        if data.constants[..i].contains(c) {
            return hyp(format!("constants: λ_{} repeats an earlier value", i + 2));
        }
    }

    let names: Vec<Vec<String>> = match &data.names {
        Some(n) => {
            if n.len() != r + 1 || n.iter().zip(part).any(|(b, &k)| b.len() != k) {
                return Err(ConstructionError::Invalid("variable names do not match the partition".into()));
            }
            n.clone()
        }
        None => part.iter().enumerate().map(|(i, &k)| (1..=k).map(|j| format!("t{i}_{j}")).collect()).collect(),
    };
    let flat: Vec<&String> = names.iter().flatten().collect();
    let vars = VarTable::new(&flat)?;
    let offsets: Vec<usize> = part.iter().scan(0, |acc, &k| {
        let o = *acc;
        *acc += k;
        Some(o)
    }).collect();
    let block = |i: usize| -> Monomial {
        let mut e = vec![0; vars.len()];
        e[offsets[i]..offsets[i] + part[i]].copy_from_slice(&data.exponents[i]);
        Monomial::from_exponents(&e)
    };
    let mono = |i: usize| Polynomial::term(&vars, block(i), F::one());
    let mut relations = Vec::with_capacity(r - 1);
    for i in 2..=r {
        let t1 = mono(1)?.scale(&data.constants[i - 2]);
        relations.push(&(&mono(0)? + &t1) + &mono(i)?);
    }

    let mut steps = Vec::with_capacity(r - 1);
    for m in 2..=r {
        let mut weights = vec![0i64; vars.len()];
        let degree: i64 = d[..m].iter().product();
        for i in 0..m {
            let (_, coeffs) = gcd_bezout(&data.exponents[i])?;
            let cofactor = degree / d[i];
            for (j, c) in coeffs.iter().enumerate() {
                weights[offsets[i] + j] = c * cofactor;
            }
        }
        let g = Grading::new(&vars, weights.clone())?;
        for i in 0..m {
            if g.degree_of(&mono(i)?)? != Degree::Homogeneous(degree) {
                return Err(ConstructionError::Invalid(format!("step {m}: T_{i}^β_{i} does not have degree {degree}")));
            }
        }
        let mut entries = data.exponents[m].clone();
        entries.push(degree);
        let gcd = gcd_all(&entries);
        if gcd != 1 {
            return Err(ConstructionError::Invalid(format!("step {m}: gcd(β_{m}, {degree}) = {gcd}")));
        }
        let weights = (0..offsets[m]).map(|v| (vars.name(v).to_string(), weights[v])).collect();
        steps.push(TrinomialStep { m, weights, degree, gcd });
    }

    let echo = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let ring = PresentedRing::new(&vars, relations, None, "trinomial")?
        .with_metadata("partition", part.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .with_metadata("exponents", data.exponents.iter().map(|b| format!("({})", echo(b))).collect::<Vec<_>>().join(","))
        .with_metadata("constants", data.constants.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
    Ok(TrinomialRing { ring, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    use proptest::prelude::*;

    type D = TrinomialData<Fp<7>>;

    fn mori() -> D {
        D {
            partition: vec![1, 1, 1],
            exponents: vec![vec![2], vec![3], vec![5]],
            constants: vec![Fp::new(1)],
            names: Some(vec![vec!["x".into()], vec!["y".into()], vec!["z".into()]]),
        }
    }

    #[test]
    fn mori_surface() {
        let t = trinomial_ring(&mori()).unwrap();
        assert_eq!(t.ring.relations()[0], t.ring.parse_poly("x^2 + y^3 + z^5").unwrap());
        let s = &t.steps[0];
        assert_eq!(s.weights, vec![("x".to_string(), 3), ("y".to_string(), 2)]);
        assert_eq!((s.degree, s.gcd), (6, 1));
    }

    #[test]
    fn non_coprime_gcds_rejected() {
        let mut d = mori();
        d.exponents = vec![vec![2], vec![4], vec![3]];
        let err = trinomial_ring(&d).unwrap_err().to_string();
        assert!(err.contains("exponents") && err.contains("pairwise relatively prime"));
    }

    #[test]
    fn wide_first_block() {
        let d = D { partition: vec![2, 1, 1], exponents: vec![vec![2, 3], vec![5], vec![7]], constants: vec![Fp::new(2)], names: None };
        let t = trinomial_ring(&d).unwrap();
        let s = &t.steps[0];
        // d_0 = 1 = -1*2 + 1*3, cofactor d_1 = 5
        assert_eq!(s.weights[0], ("t0_1".to_string(), -5));
        assert_eq!(s.weights[1], ("t0_2".to_string(), 5));
        assert_eq!(s.degree, 5);
    }

    #[test]
    fn constants_checked() {
        let mut d = D { partition: vec![1, 1, 1, 1], exponents: vec![vec![2], vec![3], vec![5], vec![7]], constants: vec![Fp::new(1), Fp::new(1)], names: None };
        assert!(trinomial_ring(&d).unwrap_err().to_string().contains("constants"));
        d.constants = vec![Fp::new(1), Fp::new(0)];
        assert!(trinomial_ring(&d).is_err());
        d.constants = vec![Fp::new(1), Fp::new(3)];
        let t = trinomial_ring(&d).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert_eq!(t.steps[1].degree, 30);
        d.partition = vec![1, 1];
        assert!(trinomial_ring(&d).unwrap_err().to_string().contains("partition"));
    }

    fn accepts(part: &[usize], exps: &[Vec<i64>], consts: &[u64]) -> bool {
        let r = part.len() as i64 - 1;
        if r < 2 || part.iter().any(|&k| k == 0) || exps.len() != part.len() {
            return false;
        }
        if exps.iter().zip(part).any(|(b, &k)| b.len() != k || b.iter().any(|&e| e < 1)) {
            return false;
        }
        let d: Vec<i64> = exps.iter().map(|b| b.iter().fold(0, |g, &e| num_integer::gcd(g, e))).collect();
        for i in 0..d.len() {
            for j in 0..i {
                if num_integer::gcd(d[i], d[j]) != 1 {
                    return false;
                }
            }
        }
        let c: Vec<u64> = consts.iter().map(|c| c % 7).collect();
        c.len() as i64 == r - 1 && c.iter().all(|&x| x != 0) && (0..c.len()).all(|i| !c[..i].contains(&c[i]))
    }

    fn data_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<Vec<i64>>, Vec<u64>)> {
        prop::collection::vec(0usize..3, 2..5).prop_flat_map(|part| {
            let exps: Vec<_> = part.iter().map(|&k| prop::collection::vec(0i64..9, k..=k)).collect();
            let consts = prop::collection::vec(0u64..7, part.len().saturating_sub(2)..part.len());
            (Just(part), exps, consts)
        })
    }

    proptest! {
        #[test]
        fn accepts_exactly_valid_data((part, raw, consts) in data_strategy()) {
            let d = D { partition: part.clone(), exponents: raw.clone(), constants: consts.iter().map(|&c| Fp::new(c as i64)).collect(), names: None };
            prop_assert_eq!(trinomial_ring(&d).is_ok(), accepts(&part, &raw, &consts));
        }
    }
}
