use std::sync::Arc;

use crate::coeff::Field;
use crate::groebner::{elim_ideal, ideal_equal, ideal_quotient, Ideal};
use crate::poly::{Polynomial, VarTable};
use crate::verdict::Verdict;

use super::{relatively_prime, ConstructionError, PresentedRing};

/// Largest level accepted by [`w_chain`] and [`lemma_level_check`].
pub const W_CHAIN_CAP: u32 = 16;

/// Levels `(W_i, J_i)` of `W_0 = J_0 = (1)`, `W_i = b J_{i-1} + (s^i)`, `J_i = (W_i : t)`.
#[derive(Clone, Debug)]
pub struct WChain<F> {
    pub levels: Vec<(Ideal<F>, Ideal<F>)>,
    /// `W_{i+1} ⊆ W_i` and `J_{i+1} ⊆ J_i` for every computed level.
    pub nested: bool,
}

impl<F: Field> WChain<F> {
    pub fn w(&self, i: usize) -> &Ideal<F> {
        &self.levels[i].0
    }

    pub fn j(&self, i: usize) -> &Ideal<F> {
        &self.levels[i].1
    }
}

pub fn w_chain<F: Field>(
    vars: &Arc<VarTable>,
    b: &Polynomial<F>,
    s: &Polynomial<F>,
    t: &Polynomial<F>,
    n: u32,
) -> Result<WChain<F>, ConstructionError> {
    if n > W_CHAIN_CAP {
        return Err(ConstructionError::Cap { requested: n, cap: W_CHAIN_CAP });
    }
    if b.is_zero() || s.is_zero() || t.is_zero() {
        return Err(ConstructionError::Hypothesis("b, s and t must be nonzero".into()));
    }
    let (b, s, t) = (b.embed(vars)?, s.embed(vars)?, t.embed(vars)?);
    let mut levels = vec![(Ideal::unit(vars), Ideal::unit(vars))];
    let mut s_pow = Polynomial::one(vars);
    for _ in 1..=n {
        s_pow = &s_pow * &s;
        let prev_j = &levels.last().expect("level 0 present").1;
        let w = prev_j.scale(&b)?.with_gens(&[s_pow.clone()])?;
        let j = ideal_quotient(&w, &t)?;
        levels.push((w, j));
    }
    let mut nested = true;
    for pair in levels.windows(2) {
        nested &= pair[0].0.contains_ideal(&pair[1].0)? && pair[0].1.contains_ideal(&pair[1].1)?;
    }
    Ok(WChain { levels, nested })
}

/// Per-level comparison of `A ∩ ((s^i) + (aX - b))` with `W_i`, where `a = st`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCheck {
    pub levels: Vec<bool>,
    pub verdict: Verdict,
}

/// Requires `s, t` relatively prime and `st, b` relatively prime in the free
/// ring over `vars`; compares both sides exactly for `i = 0..=n`.
pub fn lemma_level_check<F: Field>(
    vars: &Arc<VarTable>,
    b: &Polynomial<F>,
    s: &Polynomial<F>,
    t: &Polynomial<F>,
    n: u32,
) -> Result<LevelCheck, ConstructionError> {
    let free = PresentedRing::free(vars, None, "")?;
    let (b, s, t) = (b.embed(vars)?, s.embed(vars)?, t.embed(vars)?);
    if s.is_zero() || t.is_zero() || b.is_zero() {
        return Err(ConstructionError::Hypothesis("b, s and t must be nonzero".into()));
    }
    if !relatively_prime(&free, &s, &t)? {
        return Err(ConstructionError::Hypothesis("s and t are not relatively prime".into()));
    }
    let a = &s * &t;
    if !relatively_prime(&free, &a, &b)? {
        return Err(ConstructionError::Hypothesis("a = st and b are not relatively prime".into()));
    }
    let chain = w_chain(vars, &b, &s, &t, n)?;
    let name = vars.fresh_name("X");
    let big = vars.extended(&[name.as_str()])?;
    let x = Polynomial::var_index(&big, big.len() - 1);
    let kernel = &(&a.embed(&big)? * &x) - &b.embed(&big)?;
    let keep: Vec<usize> = (0..vars.len()).collect();
    let s_big = s.embed(&big)?;
    let mut levels = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let lhs = elim_ideal(&Ideal::new(&big, vec![s_big.pow(i as u64), kernel.clone()])?, &keep)?;
        let lhs = Ideal::new(vars, lhs.gens().iter().map(|g| g.embed(vars)).collect::<Result<Vec<_>, _>>()?)?;
        levels.push(ideal_equal(&lhs, chain.w(i as usize))?);
    }
    let verdict = Verdict::from_bool(levels.iter().all(|&ok| ok));
    Ok(LevelCheck { levels, verdict })
}
