use std::sync::Arc;

use serde::Serialize;

use crate::coeff::Field;
use crate::groebner::{ideal_equal_with, Ideal, MonomialOrder};
use crate::poly::{Polynomial, RingMap, VarTable};
use crate::verdict::Verdict;

use super::{check_cap, s_sequence, CexError};

/// Largest `n` accepted by [`coordinate_checks`].
pub const COORDINATE_CAP: u32 = 3;

/// The three ideal equalities in `R_n = k[Z_0, …, Z_{n+1}, x, y]` for
/// `J_n = (x Z_{i+1} + y^{s(i+1)-1} Z_i^{s(i+1)} - Z_{i-1})_{i=1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateChecks {
    pub n: u32,
    /// `φ_n ∘ ⋯ ∘ φ_1 (J_n) = (Z_0, …, Z_{n-1})`.
    pub automorphism_image: bool,
    /// `(x) + J_n = (x, y^{s(i+1)-1} Z_i^{s(i+1)} - Z_{i-1})`.
    pub modulo_x: bool,
    /// `(y) + J_n = (y, x Z_{i+1} - Z_{i-1})`.
    pub modulo_y: bool,
    /// Images of the generators of `J_n` under the composite automorphism.
    pub images: Vec<String>,
    pub verdict: Verdict,
}

pub fn coordinate_checks<F: Field>(n: u32) -> Result<CoordinateChecks, CexError> {
    check_cap("n", n, COORDINATE_CAP)?;
    let n = n as usize;
    let mut names: Vec<String> = (0..n + 2).map(|i| format!("Z{i}")).collect();
    names.push("x".into());
    names.push("y".into());
    let vars: Arc<VarTable> = VarTable::new(&names)?;
    let z = |i: usize| Polynomial::<F>::var_index(&vars, i);
    let x = Polynomial::var_index(&vars, n + 2);
    let y = Polynomial::var_index(&vars, n + 3);
    let s = s_sequence(n + 1);

    // tail_i = x Z_{i+1} + y^{s(i+1)-1} Z_i^{s(i+1)}, so the i-th generator is tail_i - Z_{i-1}
    let mut tails = Vec::with_capacity(n);
    let mut y_parts = Vec::with_capacity(n);
    for i in 1..=n {
        let e = s.exponent(i + 1)?;
        let yp = &y.pow(e - 1) * &z(i).pow(e);
        tails.push(&(&x * &z(i + 1)) + &yp);
        y_parts.push(yp);
    }
    let gens: Vec<Polynomial<F>> = (1..=n).map(|i| &tails[i - 1] - &z(i - 1)).collect();
    let jn = Ideal::new(&vars, gens.clone())?;
    // Z_0 > Z_1 > ⋯ > x > y: the generators have pairwise coprime leading terms Z_{i-1}
    let lex = MonomialOrder::Lex;

    let mut composite = RingMap::with_overrides(&vars, vec![])?;
    for i in 1..=n {
        let name = format!("Z{}", i - 1);
        let phi = RingMap::with_overrides(&vars, vec![(name.as_str(), &z(i - 1) + &tails[i - 1])])?;
        composite = phi.compose_after(&composite)?;
    }
    let images: Vec<Polynomial<F>> = gens.iter().map(|g| composite.apply(g)).collect::<Result<_, _>>()?;
    let coordinate = Ideal::new(&vars, (0..n).map(z).collect())?;
    let automorphism_image = ideal_equal_with(&Ideal::new(&vars, images.clone())?, &coordinate, &lex)?;

    let mod_x_expected = Ideal::new(&vars, std::iter::once(x.clone()).chain((1..=n).map(|i| &y_parts[i - 1] - &z(i - 1))).collect())?;
    let modulo_x = ideal_equal_with(&jn.with_gens(&[x.clone()])?, &mod_x_expected, &lex)?;

    let mod_y_expected = Ideal::new(&vars, std::iter::once(y.clone()).chain((1..=n).map(|i| &(&x * &z(i + 1)) - &z(i - 1))).collect())?;
    let modulo_y = ideal_equal_with(&jn.with_gens(&[y.clone()])?, &mod_y_expected, &lex)?;

    Ok(CoordinateChecks {
        n: n as u32,
        automorphism_image,
        modulo_x,
        modulo_y,
        images: images.iter().map(|p| p.to_string()).collect(),
        verdict: Verdict::from_bool(automorphism_image && modulo_x && modulo_y),
    })
}
