use std::cmp::Ordering;

use serde::Serialize;
use smallvec::SmallVec;

use crate::poly::{grevlex_cmp, Monomial};

/// Monomial order over the variable order of a table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Graded reverse lexicographic on the listed variables, ties broken by
    /// graded reverse lexicographic on the rest. Any monomial involving a
    /// listed variable exceeds every monomial free of them.
    Elimination(Vec<usize>),
}

/// Sort key: comparing keys lexicographically compares monomials.
pub(crate) type Key = SmallVec<[i64; 16]>;

fn push_grevlex(key: &mut Key, exps: impl DoubleEndedIterator<Item = i64> + Clone) {
    key.push(exps.clone().sum());
    key.extend(exps.rev().map(|e| -e));
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => grevlex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::Elimination(_) => self.key(a).cmp(&self.key(b)),
        }
    }

    pub(crate) fn key(&self, m: &Monomial) -> Key {
        let e = m.exponents();
        let mut key = Key::new();
        match self {
            MonomialOrder::Lex => key.extend_from_slice(e),
            MonomialOrder::DegRevLex => push_grevlex(&mut key, e.iter().copied()),
            MonomialOrder::Elimination(block) => {
                let inb = |i: &usize| block.contains(i);
                let first: SmallVec<[i64; 8]> = (0..e.len()).filter(inb).map(|i| e[i]).collect();
                let rest: SmallVec<[i64; 8]> = (0..e.len()).filter(|i| !inb(i)).map(|i| e[i]).collect();
                push_grevlex(&mut key, first.iter().copied());
                push_grevlex(&mut key, rest.iter().copied());
            }
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[i64]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Less);
        let el = MonomialOrder::Elimination(vec![2]);
        assert_eq!(el.cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
        assert_eq!(el.cmp(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    fn exps() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(0i64..4, 3)
    }

    proptest! {
        #[test]
        fn keys_agree_with_cmp_and_are_multiplicative(a in exps(), b in exps(), c in exps(), which in 0usize..3) {
            let ord = [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Elimination(vec![0, 2])][which].clone();
            let (a, b, c) = (m(&a), m(&b), m(&c));
            prop_assert_eq!(ord.cmp(&a, &b), ord.key(&a).cmp(&ord.key(&b)));
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert!(ord.cmp(&a.mul(&c), &a) != Ordering::Less);
        }
    }
}
