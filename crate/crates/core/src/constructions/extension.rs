use num_integer::Integer;

use crate::coeff::Field;
use crate::groebner::{intersect, saturation, SATURATION_CAP};
use crate::poly::{Degree, Polynomial};
use crate::verdict::Verdict;

use super::{radical_extension, ConstructionError, PresentedRing};

/// An element of `aA ∩ bA` outside `abA`, where `A` is `ring`; `None` when
/// `a` and `b` are relatively prime.
///
/// Computed upstairs: `((a) + R) ∩ ((b) + R)` against `(ab) + R`.
pub fn coprimality_witness<F: Field>(
    ring: &PresentedRing<F>,
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<Option<Polynomial<F>>, ConstructionError> {
    let vars = ring.vars();
    let (a, b) = (a.embed(vars)?, b.embed(vars)?);
    let rel = ring.ideal()?;
    let meet = intersect(&rel.with_gens(&[a.clone()])?, &rel.with_gens(&[b.clone()])?)?;
    let target = rel.with_gens(&[&a * &b])?;
    for g in meet.gens() {
        if !target.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

/// `aA ∩ bA = abA` in `A = ring`.
pub fn relatively_prime<F: Field>(ring: &PresentedRing<F>, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<bool, ConstructionError> {
    Ok(coprimality_witness(ring, a, b)?.is_none())
}

/// `A[X] / (aX - b)` together with the kernel check `((aX - b) : a^∞) = (aX - b)`.
#[derive(Clone, Debug)]
pub struct Extension<F> {
    pub ring: PresentedRing<F>,
    /// Name of the adjoined variable.
    pub variable: String,
    /// Whether saturating by `a` leaves the defining ideal unchanged.
    pub kernel: Verdict,
    pub saturation_steps: u32,
}

pub fn present_extension<F: Field>(
    base: &PresentedRing<F>,
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<Extension<F>, ConstructionError> {
    if a.is_zero() || b.is_zero() {
        return Err(ConstructionError::Hypothesis("a and b must be nonzero".into()));
    }
    let rel = base.ideal()?;
    for (name, p) in [("a", a), ("b", b)] {
        if rel.contains(&p.embed(base.vars())?)? {
            return Err(ConstructionError::Hypothesis(format!("{name} is zero in the base ring")));
        }
    }
    if let Some(element) = coprimality_witness(base, a, b)? {
        return Err(ConstructionError::NotRelativelyPrime { element: element.to_string() });
    }
    let name = base.vars().fresh_name("X");
    let vars = base.vars().extended(&[name.as_str()])?;
    let (a, b) = (a.embed(&vars)?, b.embed(&vars)?);
    let x = Polynomial::var_index(&vars, vars.len() - 1);
    let grading = match base.grading() {
        Some(g) => match (g.degree_of(&a)?, g.degree_of(&b)?) {
            (Degree::Homogeneous(da), Degree::Homogeneous(db)) => Some(g.extended(&vars, &[db - da])?),
            _ => None,
        },
        None => None,
    };
    let mut relations = base.relations().to_vec();
    relations.push(&(&a * &x) - &b);
    let ring = PresentedRing::new(&vars, relations, grading, "samuel-extension")?;
    let ideal = ring.ideal()?;
    let sat = saturation(&ideal, &a)?;
    let kernel = if sat.stabilized {
        Verdict::from_bool(ideal.contains_ideal(&sat.ideal)?)
    } else {
        Verdict::Unknown(SATURATION_CAP as u64)
    };
    Ok(Extension { ring, variable: name, kernel, saturation_steps: sat.steps })
}

/// `A[Z] / (aZ^n - b)` presented as `A[X, Z] / (aX - b, Z^n - X)`.
#[derive(Clone, Debug)]
pub struct FourthExtension<F> {
    pub samuel: Extension<F>,
    pub ring: PresentedRing<F>,
    /// `deg X = deg b - deg a` before rescaling by `n`.
    pub x_degree: i64,
}

/// Requires a graded base, homogeneous relatively prime `a, b` and
/// `gcd(n, deg b - deg a) = 1`.
pub fn fourth_extension<F: Field>(
    base: &PresentedRing<F>,
    a: &Polynomial<F>,
    b: &Polynomial<F>,
    n: i64,
) -> Result<FourthExtension<F>, ConstructionError> {
    let g = base.grading().ok_or_else(|| ConstructionError::Hypothesis("the base ring must be graded".into()))?;
    if n <= 0 {
        return Err(ConstructionError::Hypothesis("n must be positive".into()));
    }
    let degree = |p: &Polynomial<F>, name: &str| -> Result<i64, ConstructionError> {
        match g.degree_of(&p.embed(base.vars())?) {
            Ok(Degree::Homogeneous(d)) => Ok(d),
            _ => Err(ConstructionError::Hypothesis(format!("{name} is not homogeneous"))),
        }
    };
    let x_degree = degree(b, "b")? - degree(a, "a")?;
    if n.gcd(&x_degree) != 1 {
        return Err(ConstructionError::Hypothesis(format!("gcd(n, deg b - deg a) = {} ≠ 1", n.gcd(&x_degree))));
    }
    let samuel = present_extension(base, a, b)?;
    let x = Polynomial::var(samuel.ring.vars(), &samuel.variable)?;
    let ring = radical_extension(&samuel.ring, &x, n)?;
    Ok(FourthExtension { samuel, ring, x_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    use crate::groebner::{ideal_equal, Ideal};
    use crate::poly::{Grading, VarTable};
    type R = PresentedRing<Fp<5>>;
    type P = Polynomial<Fp<5>>;

    fn uv() -> R {
        R::free(&VarTable::new(&["u", "v"]).unwrap(), None, "").unwrap()
    }

    #[test]
    fn samuel_kernel_instances() {
        let a = uv();
        let p = |s: &str| a.parse_poly(s).unwrap();
        let e = present_extension(&a, &p("u"), &p("v")).unwrap();
        assert_eq!(e.kernel, Verdict::Verified);
        assert_eq!(e.ring.relations()[0], e.ring.parse_poly("u*X - v").unwrap());
        let e = present_extension(&a, &p("u*v"), &p("u + v")).unwrap();
        assert_eq!(e.kernel, Verdict::Verified);
        let one = R::free(&VarTable::new(&["u"]).unwrap(), None, "").unwrap();
        let e = present_extension(&one, &one.parse_poly("1").unwrap(), &one.parse_poly("u").unwrap()).unwrap();
        assert_eq!(e.ring.relations()[0], e.ring.parse_poly("X - u").unwrap());
        assert_eq!(e.kernel, Verdict::Verified);
    }

    #[test]
    fn rejects_common_factors() {
        let a = uv();
        let p = |s: &str| a.parse_poly(s).unwrap();
        match present_extension(&a, &p("u*v"), &p("u")) {
            Err(ConstructionError::NotRelativelyPrime { element }) => {
                let w = a.parse_poly(&element).unwrap();
                // the witness is a multiple of both but not of their product
                assert!(w.exact_div(&p("u")).is_some() || Ideal::principal(&p("u")).contains(&w).unwrap());
                assert!(!Ideal::principal(&p("u^2*v")).contains(&w).unwrap());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(present_extension(&a, &P::zero(a.vars()), &p("u")).is_err());
    }

    #[test]
    fn relative_primality_modulo_relations() {
        // on the cusp x^2 = y^3 the element x^2 is a multiple of x and of y but not of xy
        let v = VarTable::new(&["x", "y"]).unwrap();
        let r = R::new(&v, vec![P::parse(&v, "x^2 - y^3").unwrap()], None, "").unwrap();
        let (x, y) = (P::parse(&v, "x").unwrap(), P::parse(&v, "y").unwrap());
        assert!(!relatively_prime(&r, &x, &y).unwrap());
        assert!(relatively_prime(&R::free(&v, None, "").unwrap(), &x, &y).unwrap());
    }

    #[test]
    fn graded_extension_and_fourth() {
        let v = VarTable::new(&["u", "v"]).unwrap();
        let g = Grading::new(&v, vec![1, 2]).unwrap();
        let a = R::free(&v, Some(g), "").unwrap();
        let p = |s: &str| a.parse_poly(s).unwrap();
        let e = present_extension(&a, &p("u"), &p("v")).unwrap();
        assert_eq!(e.ring.grading().unwrap().weights(), &[1, 2, 1]);
        let f = fourth_extension(&a, &p("u"), &p("v"), 3).unwrap();
        assert_eq!(f.x_degree, 1);
        let b = &f.ring;
        assert_eq!(b.grading().unwrap().weights(), &[3, 6, 3, 1]);
        let expect = Ideal::parse(b.vars(), &["u*X - v", "Z^3 - X"]).unwrap();
        assert!(ideal_equal(&b.ideal().unwrap(), &expect).unwrap());
        let g2 = Grading::new(&v, vec![1, 3]).unwrap();
        let a2 = R::free(&v, Some(g2), "").unwrap();
        assert!(fourth_extension(&a2, &a2.parse_poly("u").unwrap(), &a2.parse_poly("v").unwrap(), 2).is_err());
    }
}
