//! The static claim table. `ufdlab claim list` prints it, so the anchors
//! double as an index of which statements have a finite check.

mod algebra;
mod cex;
mod graded;
mod omega;

use serde_json::Value;
use ufdlab::coeff::Field;
use ufdlab::groebner::Ideal;

use crate::params::Params;
use crate::runner::{fail, ClaimError, Outcome};

pub type Handler = fn(&Params) -> Result<Outcome, ClaimError>;

pub struct ClaimEntry {
    pub id: &'static str,
    /// The statement the claim checks.
    pub anchor: &'static str,
    /// Accepted parameters, with defaults.
    pub params: &'static str,
    pub handler: Handler,
}

static REGISTRY: &[ClaimEntry] = &[
    ClaimEntry {
        id: "groebner.soundness",
        anchor: "Buchberger output has S-polynomials reducing to zero; Groebner membership agrees with a Macaulay-matrix oracle",
        params: "field=F5 ideals=20 max_vars=3 max_gens=4 max_degree=3 max_terms=4 queries=100 degree_bound=6 seed=1",
        handler: algebra::groebner_soundness,
    },
    ClaimEntry {
        id: "groebner.irreducible",
        anchor: "exhaustive factor search over a small prime field",
        params: "field=F5 variables=[x,y] f bound",
        handler: graded::irreducible,
    },
    ClaimEntry {
        id: "coeff.prime-avoid",
        anchor: "prime avoidance: gcd(a, b, c) = 1 gives m with gcd(c, b + sum m_i a_i) = 1",
        params: "range=6 arity=2",
        handler: algebra::prime_avoid,
    },
    ClaimEntry {
        id: "samuel.kernel",
        anchor: "A[X]/(aX - b) for relatively prime a, b: the relation ideal is saturated with respect to a",
        params: "field=F5 variables=[u,v] a b",
        handler: algebra::samuel_kernel,
    },
    ClaimEntry {
        id: "samuel.fourth",
        anchor: "A[Z]/(aZ^n - b) as A[X, Z]/(aX - b, Z^n - X) for gcd(n, deg b - deg a) = 1",
        params: "field=QQ variables weights a b n",
        handler: algebra::samuel_fourth,
    },
    ClaimEntry {
        id: "condition-p.check",
        anchor: "condition P on (A, (a, b)), clause by clause, with truncated probes",
        params: "field=QQ variables relations=[] weights? a b factors=[] level=3",
        handler: algebra::condition_p,
    },
    ClaimEntry {
        id: "wchain.levels",
        anchor: "W(b,s,t) = intersection of (bA + sA)^i through W_i = bJ_(i-1) + s^iA, J_i = (W_i : t)",
        params: "field=F5 variables=[u,v,w] b s t levels=5 expect=bs-power|b-plus-s-power expect_j=unit|w",
        handler: algebra::wchain_levels,
    },
    ClaimEntry {
        id: "wchain.level-identity",
        anchor: "A ∩ ((s^i) + (aX - b)) = W_i with a = st, level by level",
        params: "field=F5 variables=[u,v] s t b levels=4",
        handler: algebra::wchain_identity,
    },
    ClaimEntry {
        id: "graded.pham-brieskorn",
        anchor: "Pham-Brieskorn rings k[X_1..X_n]/(sum X_i^a_i) as radical extensions, case selection and weights",
        params: "field=QQ exponents expect_case=long|triple",
        handler: graded::pham_brieskorn_claim,
    },
    ClaimEntry {
        id: "graded.fifth-weights",
        anchor: "weights m_i with gcd(e_n, omega - sum m_i e_i) = 1",
        params: "omega e",
        handler: graded::fifth_weights_claim,
    },
    ClaimEntry {
        id: "trinomial.validate",
        anchor: "trinomial relations T_0^b0 + l_i T_1^b1 + T_i^bi: data checks and the induction gradings",
        params: "field=QQ partition exponents constants names? expect_steps?",
        handler: graded::trinomial,
    },
    ClaimEntry {
        id: "threefold.jacobian",
        anchor: "Jacobian rank at (q, z_0, ..., z_(n+1)) and tangent dimension n + 3 - rank",
        params: "field=F5 p u=[1..] v=[1..] a b q expect_rank? expect_tangent_dim=n+3",
        handler: graded::threefold_jacobian,
    },
    ClaimEntry {
        id: "threefold.kappa",
        anchor: "threefold family: binomial gradings and reduction modulo a prime kappa dividing every p_i",
        params: "field=F5 p u=[1..] v=[1..] a b kappa",
        handler: graded::threefold_kappa,
    },
    ClaimEntry {
        id: "omega.basis",
        anchor: "normal forms in the basis x^m F_n of each degree",
        params: "field=QQ element expect?",
        handler: omega::basis,
    },
    ClaimEntry {
        id: "omega.z-relations",
        anchor: "z_i + z_0^(2^i) lies in x Omega and z_i does not",
        params: "field=QQ i | in_x_up_to=3 outside_up_to=4",
        handler: omega::z_relations,
    },
    ClaimEntry {
        id: "omega.confluence",
        anchor: "normal forms do not depend on the rewriting order",
        params: "field=QQ count=100 max_size=6 max_index=4 max_x=3 seed=1",
        handler: omega::confluence,
    },
    ClaimEntry {
        id: "omega.x-adic",
        anchor: "largest m with p in x^m Omega",
        params: "field=QQ element expect?",
        handler: omega::x_adic,
    },
    ClaimEntry {
        id: "cex.sseq",
        anchor: "s(1) = 2, s(2) = 3, s(n) = n s(1)...s(n-2)",
        params: "n expect?",
        handler: cex::sseq,
    },
    ClaimEntry {
        id: "cex.m-order",
        anchor: "z_0 lies in m^n for m = xB + yB",
        params: "field=QQ n | up_to",
        handler: cex::m_order,
    },
    ClaimEntry {
        id: "cex.x-order",
        anchor: "z_0 lies in x^n B' for B' = B[T]/(xT - y)",
        params: "field=QQ n | up_to",
        handler: cex::x_order,
    },
    ClaimEntry {
        id: "cex.coords",
        anchor: "coordinate ideals: the automorphism image, (x) + J_n and (y) + J_n",
        params: "field=QQ n | up_to",
        handler: cex::coords,
    },
    ClaimEntry {
        id: "cex.identity",
        anchor: "expand_z0(depth) reproduces z_0 through the defining relations",
        params: "field=F32003 depth",
        handler: cex::identity,
    },
];

pub fn registry() -> &'static [ClaimEntry] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static ClaimEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Reduced Groebner basis of `i`, printed.
pub(crate) fn basis_json<F: Field>(i: &Ideal<F>) -> Result<Value, ClaimError> {
    let gb = i.groebner().map_err(fail)?;
    Ok(Value::from(gb.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()))
}

/// Integers that fit are printed as numbers, the rest as decimal strings.
pub(crate) fn big_json(n: &num_bigint::BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }
}
