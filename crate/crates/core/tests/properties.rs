use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use ufdlab::coeff::{gcd_bezout, Fp};
use ufdlab::constructions::{radical_extension, w_chain, PresentedRing};
use ufdlab::groebner::{elim_ideal, ideal_equal, ideal_quotient, saturation, Ideal};
use ufdlab::omega::{normal_form, OmegaMonomial, OmegaPoly};
use ufdlab::poly::{Grading, Monomial, Polynomial, RingMap, VarTable};
use ufdlab::{F5, Q};

type P = Polynomial<F5>;

fn table(n: usize) -> Arc<VarTable> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    VarTable::new(&names).unwrap()
}

/// Up to `k` terms in three variables, exponents below `d`.
fn poly3(k: usize, d: i64) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0..d, 3), 1i64..5), 1..=k).prop_map(|terms| {
        let vars = table(3);
        Polynomial::from_terms(&vars, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), Fp::new(c)))).unwrap()
    })
}

fn ideal3(max_gens: usize) -> impl Strategy<Value = Ideal<F5>> {
    prop::collection::vec(poly3(3, 3), 1..=max_gens).prop_map(|g| Ideal::new(&table(3), g.into_iter().filter(|p| !p.is_zero()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bezout_ignores_input_order(v in prop::collection::vec(-40i64..40, 1..5), rot in 0usize..4) {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let mut turned = big.clone();
        let r = rot % turned.len();
        turned.rotate_left(r);
        let (g1, c1) = gcd_bezout(&big).unwrap();
        let (g2, c2) = gcd_bezout(&turned).unwrap();
        prop_assert_eq!(&g1, &g2);
        let s1: BigInt = c1.iter().zip(&big).map(|(c, x)| c * x).sum();
        let s2: BigInt = c2.iter().zip(&turned).map(|(c, x)| c * x).sum();
        prop_assert_eq!(s1, g1);
        prop_assert_eq!(s2, g2);
    }

    #[test]
    fn ring_maps_are_homomorphisms(p in poly3(4, 3), q in poly3(4, 3), imgs in prop::collection::vec(poly3(2, 2), 3)) {
        let map = RingMap::new(p.vars(), p.vars(), imgs).unwrap();
        let apply = |f: &P| map.apply(f).unwrap();
        prop_assert_eq!(apply(&(&p + &q)), &apply(&p) + &apply(&q));
        prop_assert_eq!(apply(&(&p * &q)), &apply(&p) * &apply(&q));
    }

    #[test]
    fn homogeneous_components_reassemble(p in poly3(6, 4), w in prop::collection::vec(-2i64..4, 3)) {
        let g = Grading::new(p.vars(), w).unwrap();
        let parts = g.homogeneous_components(&p);
        let mut sum = Polynomial::zero(p.vars());
        for (d, c) in &parts {
            prop_assert_eq!(g.homogeneous_degree(c).unwrap(), *d);
            sum = &sum + c;
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn quotient_brackets_the_ideal(i in ideal3(3), t in poly3(2, 2)) {
        prop_assume!(!t.is_zero());
        let q = ideal_quotient(&i, &t).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        for g in q.gens() {
            prop_assert!(i.contains(&(&t * g)).unwrap());
        }
    }

    #[test]
    fn saturation_is_idempotent(i in ideal3(2), f in poly3(2, 2)) {
        prop_assume!(!f.is_zero());
        let once = saturation(&i, &f).unwrap();
        prop_assume!(once.stabilized);
        let twice = saturation(&once.ideal, &f).unwrap();
        prop_assert!(ideal_equal(&once.ideal, &twice.ideal).unwrap());
    }

    #[test]
    fn elimination_keeps_only_kept_variables(i in ideal3(3)) {
        let e = elim_ideal(&i, &[0, 1]).unwrap();
        for g in e.gens() {
            prop_assert!(!g.uses_variable(2));
            prop_assert!(i.contains(&g.embed(i.vars()).unwrap()).unwrap());
        }
    }

    #[test]
    fn radical_extensions_are_homogeneous(w in prop::collection::vec(1i64..4, 2), e in prop::collection::vec(0i64..4, 2), c in 1i64..6) {
        let vars = VarTable::new(&["a", "b"]).unwrap();
        let g = Grading::new(&vars, w).unwrap();
        let f = Polynomial::term(&vars, Monomial::from_exponents(&e), F5::new(2)).unwrap();
        let d = g.homogeneous_degree(&f).unwrap();
        prop_assume!(d > 0 && num_integer::Integer::gcd(&d, &c) == 1);
        let base = PresentedRing::free(&vars, Some(g), "base").unwrap();
        let ring = radical_extension(&base, &f, c).unwrap();
        let grading = ring.grading().unwrap();
        for r in ring.relations() {
            prop_assert!(grading.homogeneous_degree(r).is_ok(), "{} is not homogeneous", r);
        }
    }

    #[test]
    fn w_chain_levels_nest(b in poly3(2, 2), s in poly3(2, 2), t in poly3(2, 2)) {
        prop_assume!(!b.is_zero() && !s.is_zero() && !t.is_zero());
        let c = w_chain(b.vars(), &b, &s, &t, 3).unwrap();
        for i in 0..3 {
            for g in c.w(i + 1).gens() {
                prop_assert!(c.w(i).reduce(g).unwrap().is_zero());
            }
            for g in c.j(i + 1).gens() {
                prop_assert!(c.j(i).reduce(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn basis_coordinates_are_distinct(r in 0u128..4, e in prop::collection::vec(0u32..4, 1..5)) {
        let m = OmegaMonomial::new(r, e).unwrap();
        let nf = normal_form(&OmegaPoly::<Q>::monomial(m, Q::from_integer(1.into()))).unwrap();
        for exp in nf.components.values() {
            let ms: Vec<u128> = exp.entries.iter().map(|t| t.m).collect();
            prop_assert!(ms.windows(2).all(|w| w[0] < w[1]), "{:?}", ms);
            prop_assert!(exp.entries.iter().all(|t| t.n as i128 - t.m as i128 == exp.degree));
        }
    }
}

#[test]
fn random_ideals_have_closed_bases() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..20 {
        let i = ideal3(4).new_tree(&mut runner).unwrap().current();
        assert!(i.groebner().unwrap().is_groebner().unwrap());
    }
}
