use std::sync::Arc;

use crate::coeff::Field;
use crate::poly::{Polynomial, RingMap, VarTable};

use super::{check_cap, s_sequence, CexError};

/// Largest depth of [`expand_z0`].
pub const EXPAND_CAP: u32 = 3;
/// Largest depth of [`expand_z0_bprime`].
pub const EXPAND_BPRIME_CAP: u32 = 2;
/// Largest depth of [`substitution_identity`].
pub const IDENTITY_CAP: u32 = 2;

/// A representative of `z_0` after `depth` substitution rounds.
#[derive(Clone, Debug)]
pub struct Expansion<F> {
    pub depth: u32,
    pub poly: Polynomial<F>,
    /// Least order over all terms: `(x, y)`-degree in `B`, `x`-degree in `B'`.
    pub min_order: i64,
}

fn table(second: &str, top: usize) -> Result<Arc<VarTable>, CexError> {
    let mut names = vec!["x".to_string(), second.to_string()];
    names.extend((0..=top).map(|i| format!("z{i}")));
    Ok(VarTable::new(&names)?)
}

/// `z_j ↦ x z_{j+2} + c · z_{j+1}^{s(j+2)}` for `j + 2 ≤ top`, identity elsewhere.
/// `c` is `y^{s-1}` in `B` and `x^{s-1} T^{s-1}` in `B'`.
fn round_map<F: Field>(vars: &Arc<VarTable>, top: usize, bprime: bool) -> Result<RingMap<F>, CexError> {
    let s = s_sequence(top + 1);
    let x = Polynomial::var_index(vars, 0);
    let second = Polynomial::var_index(vars, 1);
    let z = |i: usize| Polynomial::var_index(vars, i + 2);
    let mut images: Vec<Polynomial<F>> = (0..vars.len()).map(|i| Polynomial::var_index(vars, i)).collect();
    for j in 0..(top + 1).saturating_sub(2) {
        let e = s.exponent(j + 2)?;
        let mut c = second.pow(e - 1);
        if bprime {
            c = &c * &x.pow(e - 1);
        }
        images[j + 2] = &(&x * &z(j + 2)) + &(&c * &z(j + 1).pow(e));
    }
    Ok(RingMap::new(vars, vars, images)?)
}

fn expand<F: Field>(depth: u32, bprime: bool) -> Result<Expansion<F>, CexError> {
    let top = 2 * depth as usize;
    let vars = table(if bprime { "T" } else { "y" }, top)?;
    let map = round_map(&vars, top, bprime)?;
    let mut p = Polynomial::var_index(&vars, 2);
    for _ in 0..depth {
        p = map.apply(&p)?;
    }
    let order = |e: &[i64]| if bprime { e[0] } else { e[0] + e[1] };
    let min_order = p.terms().map(|(m, _)| order(m.exponents())).min().unwrap_or(0);
    Ok(Expansion { depth, poly: p, min_order })
}

/// `z_0` rewritten by `depth` simultaneous rounds of
/// `z_{i-1} ↦ x z_{i+1} + y^{s(i+1)-1} z_i^{s(i+1)}`, over `[x, y, z_0..z_{2 depth}]`.
pub fn expand_z0<F: Field>(depth: u32) -> Result<Expansion<F>, CexError> {
    check_cap("depth", depth, EXPAND_CAP)?;
    expand(depth, false)
}

/// The same rounds in `B'` with `y = xT`, over `[x, T, z_0..z_{2 depth}]`.
pub fn expand_z0_bprime<F: Field>(depth: u32) -> Result<Expansion<F>, CexError> {
    check_cap("depth", depth, EXPAND_BPRIME_CAP)?;
    expand(depth, true)
}

/// Pushes both `expand_z0(depth)` and `z_0` down to `k[x, y][z_N, z_{N+1}]`,
/// `N = 2 depth`, through the triangular substitution
/// `z_j ↦ x z_{j+2} + y^{s(j+2)-1} z_{j+1}^{s(j+2)}` (for `j < N`), and compares.
/// Since `z_N, z_{N+1}` are algebraically independent over `k[x, y]`, equality
/// there is equality in `B`.
pub fn substitution_identity<F: Field>(depth: u32) -> Result<bool, CexError> {
    check_cap("depth", depth, IDENTITY_CAP)?;
    pushes_down_to_z0(&expand_z0::<F>(depth)?.poly, depth)
}

fn pushes_down_to_z0<F: Field>(p: &Polynomial<F>, depth: u32) -> Result<bool, CexError> {
    let n = 2 * depth as usize;
    let vars = table("y", n + 1)?;
    let s = s_sequence(n + 2);
    let (x, y) = (Polynomial::var_index(&vars, 0), Polynomial::var_index(&vars, 1));
    let mut nf: Vec<Polynomial<F>> = (0..=n + 1).map(|i| Polynomial::var_index(&vars, i + 2)).collect();
    for j in (0..n).rev() {
        let k = s.exponent(j + 2)?;
        nf[j] = &(&x * &nf[j + 2]) + &(&y.pow(k - 1) * &nf[j + 1].pow(k));
    }
    let mut images: Vec<Polynomial<F>> = vec![x, y];
    images.extend(nf[..=n].iter().cloned());
    let map = RingMap::new(p.vars(), &vars, images)?;
    Ok(map.apply(p)? == nf[0])
}
