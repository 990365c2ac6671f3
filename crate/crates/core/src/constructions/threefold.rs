use num_integer::Integer;
use serde::Serialize;

use crate::coeff::Field;
use crate::groebner::{ideal_equal, Ideal};
use crate::poly::{Degree, Grading, Polynomial, VarTable};
use crate::verdict::Verdict;

use super::univariate::Uni;
use super::{ConstructionError, PresentedRing};

/// Parameters of `k[x][z_0, …, z_{n+1}] / (p_i z_{i+1} + u_i z_i^{a_i} + v_i z_{i-1}^{b_i})`.
///
/// Each `p_i` is a polynomial in the single variable `x` (over any table).
#[derive(Clone, Debug)]
pub struct ThreefoldData<F> {
    pub p: Vec<Polynomial<F>>,
    pub u: Vec<F>,
    pub v: Vec<F>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

/// Outcome of reducing modulo a prime `κ` of `k[x]` dividing every `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaCheck {
    pub kappa: String,
    /// `(κ) + (relations) = (κ) + (u_i z_i^{a_i} + v_i z_{i-1}^{b_i})`.
    pub quotient_shape: bool,
    /// `z_n` is not in the reduced ideal.
    pub z_n_outside: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct Threefold<F> {
    pub ring: PresentedRing<F>,
    pub data: ThreefoldData<F>,
    /// For each `k = 1..=n`, weights of `z_0..z_{k-1}` making the first `k - 1`
    /// binomial relations homogeneous with `deg z_{k-1}^{b_k} = b_1⋯b_k`.
    pub lemma_weights: Vec<Vec<i64>>,
    pub lemma_grading_ok: bool,
    pub kappa: Option<KappaCheck>,
}

fn univariate<F: Field>(p: &Polynomial<F>, what: &str) -> Result<Uni<F>, ConstructionError> {
    let x = p.vars().index_of("x");
    let u = match x {
        Some(i) => Uni::from_poly(p, i),
        None if p.as_constant().is_some() => Some(Uni::new(vec![p.as_constant().unwrap()])),
        None => None,
    };
    u.ok_or_else(|| ConstructionError::Hypothesis(format!("{what} must be a polynomial in x alone")))
}

pub fn threefold_family<F: Field>(data: &ThreefoldData<F>, kappa: Option<&Polynomial<F>>) -> Result<Threefold<F>, ConstructionError> {
    let n = data.p.len();
    if n == 0 {
        return Err(ConstructionError::Invalid("need at least one relation".into()));
    }
    if [data.u.len(), data.v.len(), data.a.len(), data.b.len()].iter().any(|&l| l != n) {
        return Err(ConstructionError::Invalid("p, u, v, a, b must have equal lengths".into()));
    }
    if data.u.iter().chain(&data.v).any(|c| c.is_zero()) {
        return Err(ConstructionError::Hypothesis("u_i and v_i must be units".into()));
    }
    if data.a.iter().chain(&data.b).any(|&e| e < 1) {
        return Err(ConstructionError::Hypothesis("exponents a_i, b_i must be positive".into()));
    }
    for i in 0..n {
        for j in 0..=i {
            let g = data.a[i].gcd(&data.b[j]);
            if g != 1 {
                return Err(ConstructionError::Hypothesis(format!(
                    "gcd(a_{0}, b_1⋯b_{0}) ≠ 1 (a_{0} = {1} shares {2} with b_{3} = {4})",
                    i + 1,
                    data.a[i],
                    g,
                    j + 1,
                    data.b[j]
                )));
            }
        }
    }
    let ps = data.p.iter().enumerate().map(|(i, p)| univariate(p, &format!("p_{}", i + 1))).collect::<Result<Vec<_>, _>>()?;
    if ps.iter().any(Uni::is_zero) {
        return Err(ConstructionError::Hypothesis("p_i must be nonzero".into()));
    }
    // same prime factors: p_i | p_j^M with M the largest degree
    let m = ps.iter().filter_map(Uni::degree).max().unwrap_or(0) as u32;
    for i in 0..n {
        for j in 0..n {
            if i != j && !ps[j].pow(m.max(1)).divisible_by(&ps[i]) {
                return Err(ConstructionError::Hypothesis(format!("p_{} and p_{} do not have the same prime factors", i + 1, j + 1)));
            }
        }
    }

    let mut names = vec!["x".to_string()];
    names.extend((0..n + 2).map(|i| format!("z{i}")));
    let vars = VarTable::new(&names)?;
    let z = |i: usize| Polynomial::var_index(&vars, i + 1);
    let mut relations = Vec::with_capacity(n);
    let mut binomials = Vec::with_capacity(n);
    for i in 1..=n {
        let bin = &z(i).pow(data.a[i - 1] as u64).scale(&data.u[i - 1]) + &z(i - 1).pow(data.b[i - 1] as u64).scale(&data.v[i - 1]);
        relations.push(&(&data.p[i - 1].embed(&vars)? * &z(i + 1)) + &bin);
        binomials.push(bin);
    }
    let ring = PresentedRing::new(&vars, relations, None, "threefold")?;

    let mut lemma_weights = Vec::with_capacity(n);
    let mut lemma_grading_ok = true;
    for k in 1..=n {
        // weight of z_i in R_{k-1}: b_1⋯b_i · a_{i+1}⋯a_{k-1}
        let w: Vec<i64> = (0..k)
            .map(|i| data.b[..i].iter().product::<i64>() * data.a[i..k - 1].iter().product::<i64>())
            .collect();
        let mut full = vec![0; vars.len()];
        full[1..=k].copy_from_slice(&w);
        let g = Grading::new(&vars, full)?;
        for bin in &binomials[..k - 1] {
            lemma_grading_ok &= matches!(g.degree_of(bin)?, Degree::Homogeneous(_));
        }
        let top = z(k - 1).pow(data.b[k - 1] as u64);
        lemma_grading_ok &= g.degree_of(&top)? == Degree::Homogeneous(data.b[..k].iter().product());
        lemma_weights.push(w);
    }

    let kappa = match kappa {
        None => None,
        Some(kp) => {
            let ku = univariate(kp, "κ")?;
            if ku.degree().unwrap_or(0) == 0 {
                return Err(ConstructionError::Hypothesis("κ must be a non-constant polynomial in x".into()));
            }
            if let Some(i) = ps.iter().position(|p| !p.divisible_by(&ku)) {
                return Err(ConstructionError::Hypothesis(format!("κ does not divide p_{}", i + 1)));
            }
            let k = kp.embed(&vars)?;
            let upstairs = ring.ideal()?.with_gens(&[k.clone()])?;
            let mut gens = binomials.clone();
            gens.push(k.clone());
            let reduced = Ideal::new(&vars, gens)?;
            let quotient_shape = ideal_equal(&upstairs, &reduced)?;
            let z_n_outside = !reduced.contains(&z(n))?;
            Some(KappaCheck {
                kappa: k.to_string(),
                quotient_shape,
                z_n_outside,
                verdict: Verdict::from_bool(quotient_shape && z_n_outside),
            })
        }
    };

    Ok(Threefold { ring, data: data.clone(), lemma_weights, lemma_grading_ok, kappa })
}

/// Jacobian rank at the maximal ideal `(q, z_0, …, z_{n+1})` and the
/// resulting tangent dimension `(n + 3) - rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tangent {
    pub rank: usize,
    pub tangent_dim: usize,
    /// Entries of the evaluated matrix, as residues modulo `q`.
    pub matrix: Vec<Vec<String>>,
}

/// Requires `a_i, b_i ≥ 2`, every `p_i` non-constant and `q` a prime of
/// `k[x]` dividing every `p_i`.
pub fn jacobian_tangent_dim<F: Field>(tf: &Threefold<F>, q: &Polynomial<F>) -> Result<Tangent, ConstructionError> {
    let d = &tf.data;
    if let Some(i) = d.a.iter().zip(&d.b).position(|(&a, &b)| a < 2 || b < 2) {
        return Err(ConstructionError::Hypothesis(format!("a_{0} ≥ 2 and b_{0} ≥ 2 required", i + 1)));
    }
    let ps = d.p.iter().map(|p| univariate(p, "p_i")).collect::<Result<Vec<_>, _>>()?;
    if ps.iter().any(|p| p.degree().unwrap_or(0) == 0) {
        return Err(ConstructionError::Hypothesis("every p_i must be non-constant".into()));
    }
    let qu = univariate(q, "q")?;
    if qu.degree().unwrap_or(0) == 0 {
        return Err(ConstructionError::Hypothesis("q must be non-constant".into()));
    }
    if let Some(i) = ps.iter().position(|p| !p.divisible_by(&qu)) {
        return Err(ConstructionError::Hypothesis(format!("q does not divide p_{}", i + 1)));
    }
    let vars = tf.ring.vars();
    let nvars = vars.len();
    // evaluate at z = 0, then reduce modulo q
    let eval = |e: &Polynomial<F>| -> Uni<F> {
        let kept = Polynomial::from_terms(vars, e.terms().filter(|(m, _)| m.support().all(|i| i == 0)).map(|(m, c)| (m.clone(), c.clone())))
            .expect("sub-polynomial of a valid polynomial");
        Uni::from_poly(&kept, 0).expect("only x remains").rem(&qu)
    };
    let mut rows: Vec<Vec<Uni<F>>> = tf.ring.relations().iter().map(|f| (0..nvars).map(|j| eval(&f.derivative(j))).collect()).collect();
    let matrix = rows.iter().map(|r| r.iter().map(|e| residue_string(e, vars)).collect()).collect();
    let rank = rank_mod(&mut rows, &qu)?;
    Ok(Tangent { rank, tangent_dim: nvars - rank, matrix })
}

fn residue_string<F: Field>(e: &Uni<F>, vars: &std::sync::Arc<VarTable>) -> String {
    let x = VarTable::new(&[vars.name(0)]).expect("valid name");
    e.to_poly(&x, 0).to_string()
}

/// Rank over the field `k[x]/(q)`.
fn rank_mod<F: Field>(rows: &mut [Vec<Uni<F>>], q: &Uni<F>) -> Result<usize, ConstructionError> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse_mod(q).ok_or_else(|| ConstructionError::Hypothesis("q must be prime in k[x]".into()))?;
        let pivot: Vec<Uni<F>> = rows[r].iter().map(|e| e.mul(&inv).rem(q)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for k in 0..ncols {
                    row[k] = row[k].sub(&factor.mul(&pivot[k])).rem(q);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type P = Polynomial<Fp<5>>;

    fn px(s: &str) -> P {
        P::parse(&VarTable::new(&["x"]).unwrap(), s).unwrap()
    }

    fn data(p: &[&str], a: &[i64], b: &[i64]) -> ThreefoldData<Fp<5>> {
        let n = p.len();
        ThreefoldData { p: p.iter().map(|s| px(s)).collect(), u: vec![Fp::new(1); n], v: vec![Fp::new(1); n], a: a.to_vec(), b: b.to_vec() }
    }

    #[test]
    fn single_relation() {
        let tf = threefold_family(&data(&["x"], &[2], &[3]), Some(&px("x"))).unwrap();
        assert_eq!(tf.ring.relations()[0], tf.ring.parse_poly("x*z2 + z1^2 + z0^3").unwrap());
        let k = tf.kappa.as_ref().unwrap();
        assert!(k.quotient_shape && k.z_n_outside);
        assert!(tf.lemma_grading_ok);
        let t = jacobian_tangent_dim(&tf, &px("x")).unwrap();
        assert_eq!((t.rank, t.tangent_dim), (0, 4));
    }

    #[test]
    fn two_relations() {
        let tf = threefold_family(&data(&["x", "x"], &[2, 5], &[3, 2]), Some(&px("x"))).unwrap();
        assert_eq!(tf.kappa.as_ref().unwrap().verdict, Verdict::Verified);
        assert_eq!(tf.lemma_weights[1], vec![2, 3]);
        assert!(tf.lemma_grading_ok);
        let t = jacobian_tangent_dim(&tf, &px("x")).unwrap();
        assert_eq!((t.rank, t.tangent_dim), (0, 5));
    }

    #[test]
    fn hypotheses() {
        assert!(threefold_family(&data(&["x"], &[2], &[2]), None).is_err());
        assert!(threefold_family(&data(&["x", "x^2"], &[2, 5], &[3, 2]), None).is_ok());
        let err = threefold_family(&data(&["x", "x + 1"], &[2, 5], &[3, 2]), None).unwrap_err();
        assert!(err.to_string().contains("same prime factors"));
        let tf = threefold_family(&data(&["x"], &[1], &[3]), None).unwrap();
        assert!(jacobian_tangent_dim(&tf, &px("x")).unwrap_err().to_string().contains("a_1 ≥ 2"));
    }

    #[test]
    fn rank_detects_nonzero_entries() {
        // with b_1 = 1 the entry for z_0 is the unit v_1, so the rank is 1
        let tf = threefold_family(&data(&["x"], &[2], &[1]), None).unwrap();
        let mut rows: Vec<Vec<Uni<Fp<5>>>> = vec![tf.ring.relations()[0]
            .derivative(1)
            .terms()
            .map(|(_, c)| Uni::new(vec![*c]))
            .collect()];
        assert_eq!(rank_mod(&mut rows, &Uni::new(vec![Fp::new(0), Fp::new(1)])).unwrap(), 1);
    }
}
