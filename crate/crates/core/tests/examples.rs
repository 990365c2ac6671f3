//! End-to-end instances through the public API, each checked against the
//! defining relations rather than against the code that produced it.

use ufdlab::constructions::{fourth_extension, pham_brieskorn, present_extension, threefold_family, PresentedRing, ThreefoldData};
use ufdlab::counterexample::{coordinate_checks, expand_z0, s_sequence};
use ufdlab::groebner::{ideal_equal, Ideal};
use ufdlab::omega::{in_x_omega, normal_form, x_adic_floor, OmegaPoly};
use ufdlab::poly::{Grading, Polynomial, VarTable};
use ufdlab::{F5, Q};

#[test]
fn omega_relations_normalize_to_zero() {
    // x^{2^n} z_{n+1} + z_n + z_{n-1}^2 = 0 in Omega
    for n in 1..=4u32 {
        let rel = format!("x^{}*z{} + z{} + z{}^2", 1u32 << n, n + 1, n, n - 1);
        let nf = normal_form(&OmegaPoly::<Q>::parse(&rel).unwrap()).unwrap();
        assert!(nf.is_zero(), "{rel} -> {}", nf.render());
    }
}

#[test]
fn omega_membership_chain() {
    for i in 1..=4u32 {
        let p = OmegaPoly::<Q>::parse(&format!("z{i} + z0^{}", 1u32 << i)).unwrap();
        assert!(in_x_omega(&p).unwrap());
        assert!(!in_x_omega(&OmegaPoly::<Q>::parse(&format!("z{i}")).unwrap()).unwrap());
    }
    // z1 + z0^2 = -x^2 z2 exactly, so its x-adic floor is 2
    let p = OmegaPoly::<Q>::parse("z1 + z0^2").unwrap();
    assert_eq!(normal_form(&p).unwrap().to_poly().unwrap(), OmegaPoly::parse("-x^2*z2").unwrap());
    assert_eq!(x_adic_floor(&p).unwrap(), 2);
}

#[test]
fn pham_brieskorn_two_three_five() {
    let pb = pham_brieskorn::<F5>(&[2, 3, 5]).unwrap();
    let g = pb.ring.grading().unwrap();
    assert_eq!(g.weights(), &[15, 10, 6]);
    let rel = &pb.ring.relations()[0];
    assert_eq!(*rel, pb.ring.parse_poly("X1^2 + X2^3 + X3^5").unwrap());
    assert_eq!(g.homogeneous_degree(rel).unwrap(), 30);
    assert_eq!(pb.ring.metadata()["deg Z"], "6");
}

#[test]
fn samuel_then_radical() {
    // A = F5[u, v] with deg u = 1, deg v = 2; X = v/u has degree 1, then Z^3 = X
    let vars = VarTable::new(&["u", "v"]).unwrap();
    let base = PresentedRing::free(&vars, Some(Grading::new(&vars, vec![1, 2]).unwrap()), "base").unwrap();
    let (u, v) = (Polynomial::<F5>::parse(&vars, "u").unwrap(), Polynomial::parse(&vars, "v").unwrap());
    let ext = fourth_extension(&base, &u, &v, 3).unwrap();
    assert_eq!(ext.x_degree, 1);
    assert!(ext.samuel.kernel.is_verified());
    let g = ext.ring.grading().unwrap();
    for r in ext.ring.relations() {
        assert!(g.homogeneous_degree(r).is_ok());
    }
    // u and u are not relatively prime up to a unit: (u) ∩ (u) ≠ (u^2)
    assert!(present_extension(&base, &u, &u).is_err());
    assert!(fourth_extension(&base, &u, &Polynomial::parse(&vars, "u^2").unwrap(), 3).is_err());
}

#[test]
fn counterexample_relations() {
    let s = s_sequence(4);
    assert_eq!(s.values(), [2, 3, 6, 24].map(num_bigint::BigInt::from));
    // the depth-one expansion is the first relation solved for z0: x z2 + y^{s(2)-1} z1^{s(2)}
    let e = expand_z0::<Q>(1).unwrap();
    assert_eq!(e.poly, Polynomial::parse(e.poly.vars(), "x*z2 + y^2*z1^3").unwrap());
    // modulo y the relations become x Z_{i+1} - Z_{i-1}
    let vars = VarTable::new(&["Z0", "Z1", "Z2", "Z3", "x", "y"]).unwrap();
    let j = Ideal::<Q>::parse(&vars, &["y", "x*Z2 + y^2*Z1^3 - Z0", "x*Z3 + y^5*Z2^6 - Z1"]).unwrap();
    let want = Ideal::parse(&vars, &["y", "x*Z2 - Z0", "x*Z3 - Z1"]).unwrap();
    assert!(ideal_equal(&j, &want).unwrap());
    assert!(coordinate_checks::<Q>(2).unwrap().modulo_y);
}

#[test]
fn threefold_reduction_modulo_kappa() {
    let x = VarTable::new(&["x"]).unwrap();
    let p = |s: &str| Polynomial::<F5>::parse(&x, s).unwrap();
    let one = ufdlab::F5::new(1);
    let data = ThreefoldData { p: vec![p("x"), p("x^2")], u: vec![one; 2], v: vec![one; 2], a: vec![2, 5], b: vec![3, 2] };
    let tf = threefold_family(&data, Some(&p("x"))).unwrap();
    let k = tf.kappa.unwrap();
    assert!(k.quotient_shape && k.z_n_outside);
    assert_eq!(tf.ring.relations()[1], tf.ring.parse_poly("x^2*z3 + z2^5 + z1^2").unwrap());
}
