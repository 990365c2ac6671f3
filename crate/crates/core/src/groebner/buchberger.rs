use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::coeff::Field;
use crate::poly::{Monomial, Polynomial, VarTable};

use super::order::Key;
use super::{Caps, GroebnerError, MonomialOrder};

/// Monic polynomial with terms sorted descending in a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct Sorted<F> {
    pub(crate) terms: Vec<(Monomial, F)>,
}

impl<F: Field> Sorted<F> {
    pub(crate) fn from_poly(p: &Polynomial<F>, ord: &MonomialOrder) -> Self {
        let mut keyed: Vec<(Key, Monomial, F)> = p.terms().map(|(m, c)| (ord.key(m), m.clone(), c.clone())).collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        Sorted { terms: keyed.into_iter().map(|(_, m, c)| (m, c)).collect() }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(mut self) -> Self {
        let inv = self.terms[0].1.inv().expect("nonzero leading coefficient");
        for t in &mut self.terms {
            t.1 = t.1.clone() * inv.clone();
        }
        self
    }

    pub(crate) fn to_poly(&self, vars: &Arc<VarTable>) -> Polynomial<F> {
        Polynomial::from_terms(vars, self.terms.iter().cloned()).expect("terms come from the same table")
    }
}

/// Working polynomial during reduction, keyed for fast access to the leading term.
struct Work<F> {
    map: BTreeMap<Key, (Monomial, F)>,
}

impl<F: Field> Work<F> {
    fn new() -> Self {
        Work { map: BTreeMap::new() }
    }

    fn add(&mut self, ord: &MonomialOrder, m: Monomial, c: F) {
        use std::collections::btree_map::Entry;
        match self.map.entry(ord.key(&m)) {
            Entry::Vacant(v) => {
                v.insert((m, c));
            }
            Entry::Occupied(mut o) => {
                o.get_mut().1 += c;
                if o.get().1.is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn pop_leading(&mut self) -> Option<(Monomial, F)> {
        self.map.pop_last().map(|(_, t)| t)
    }
}

/// Fully reduces the working polynomial against monic basis elements.
fn reduce_work<F: Field>(mut w: Work<F>, basis: &[Sorted<F>], ord: &MonomialOrder, caps: &Caps) -> Result<Vec<(Monomial, F)>, GroebnerError> {
    let mut rem = Vec::new();
    while let Some((m, c)) = w.pop_leading() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm()).expect("divisibility checked");
                for (mt, ct) in &g.terms[1..] {
                    w.add(ord, q.mul(mt), -(c.clone() * ct.clone()));
                }
                if w.map.len() > caps.max_terms {
                    return Err(GroebnerError::TooLarge(format!("intermediate polynomial exceeds {} terms", caps.max_terms)));
                }
            }
            None => rem.push((m, c)),
        }
    }
    Ok(rem)
}

fn s_poly<F: Field>(f: &Sorted<F>, g: &Sorted<F>, ord: &MonomialOrder) -> Work<F> {
    let l = f.lm().lcm(g.lm());
    let qf = l.div(f.lm()).unwrap();
    let qg = l.div(g.lm()).unwrap();
    let mut w = Work::new();
    for (m, c) in &f.terms[1..] {
        w.add(ord, qf.mul(m), c.clone());
    }
    for (m, c) in &g.terms[1..] {
        w.add(ord, qg.mul(m), -c.clone());
    }
    w
}

/// A Gröbner basis with respect to a fixed order.
///
/// Elements are monic and no leading monomial divides another.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F> {
    vars: Arc<VarTable>,
    order: MonomialOrder,
    elems: Vec<Sorted<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial<F>> {
        self.elems.iter().map(|e| e.to_poly(&self.vars)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm().clone()).collect()
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elems.iter().any(|e| e.lm().is_one())
    }

    /// Normal form: no term of the result is divisible by a leading monomial.
    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        let f = f.embed(&self.vars)?;
        let mut w = Work::new();
        for (m, c) in f.terms() {
            w.add(&self.order, m.clone(), c.clone());
        }
        let rem = reduce_work(w, &self.elems, &self.order, &Caps::current())?;
        Ok(Polynomial::from_terms(&self.vars, rem)?)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> Result<bool, GroebnerError> {
        let caps = Caps::current();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let w = s_poly(&self.elems[i], &self.elems[j], &self.order);
                if !reduce_work(w, &self.elems, &self.order, &caps)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Tail-reduces every element, producing the reduced Gröbner basis.
    pub fn interreduce(&mut self) -> Result<(), GroebnerError> {
        let caps = Caps::current();
        for i in 0..self.elems.len() {
            let others: Vec<Sorted<F>> = self.elems.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.clone()).collect();
            let mut w = Work::new();
            for (m, c) in &self.elems[i].terms[1..] {
                w.add(&self.order, m.clone(), c.clone());
            }
            let tail = reduce_work(w, &others, &self.order, &caps)?;
            let head = self.elems[i].terms[0].clone();
            self.elems[i].terms = std::iter::once(head).chain(tail).collect();
        }
        self.sort();
        Ok(())
    }

    fn sort(&mut self) {
        let ord = self.order.clone();
        self.elems.sort_by(|a, b| ord.key(a.lm()).cmp(&ord.key(b.lm())));
    }
}

/// Buchberger's algorithm with the coprime and chain criteria.
///
/// Pairs are processed in increasing order of their lcm. The output is a
/// minimal (not tail-reduced) Gröbner basis.
pub fn buchberger<F: Field>(vars: &Arc<VarTable>, gens: &[Polynomial<F>], ord: &MonomialOrder) -> Result<GroebnerBasis<F>, GroebnerError> {
    if vars.any_invertible() {
        return Err(GroebnerError::Laurent);
    }
    let caps = Caps::current();
    let mut basis: Vec<Sorted<F>> = Vec::new();
    let mut pending: BTreeMap<(Key, usize, usize), ()> = BTreeMap::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let insert = |basis: &mut Vec<Sorted<F>>,
                  pending: &mut BTreeMap<(Key, usize, usize), ()>,
                  pending_set: &mut HashSet<(usize, usize)>,
                  h: Sorted<F>|
     -> Result<(), GroebnerError> {
        let deg = h.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0);
        if deg > caps.max_degree {
            return Err(GroebnerError::TooLarge(format!("basis element of degree {deg} exceeds cap {}", caps.max_degree)));
        }
        if basis.len() >= caps.max_terms {
            return Err(GroebnerError::TooLarge(format!("basis exceeds {} elements", caps.max_terms)));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lm().lcm(h.lm());
            pending.insert((ord.key(&l), i, k), ());
            pending_set.insert((i, k));
        }
        basis.push(h);
        Ok(())
    };

    for g in gens {
        let g = g.embed(vars)?;
        if g.has_negative_exponents() {
            return Err(GroebnerError::Laurent);
        }
        let mut w = Work::new();
        for (m, c) in g.terms() {
            w.add(ord, m.clone(), c.clone());
        }
        let r = reduce_work(w, &basis, ord, &caps)?;
        if !r.is_empty() {
            insert(&mut basis, &mut pending, &mut pending_set, Sorted { terms: r }.make_monic())?;
        }
    }

    while let Some(((lkey, i, j), ())) = pending.pop_first() {
        pending_set.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        debug_assert_eq!(lkey, ord.key(&l));
        let w = s_poly(&basis[i], &basis[j], ord);
        let r = reduce_work(w, &basis, ord, &caps)?;
        if !r.is_empty() {
            insert(&mut basis, &mut pending, &mut pending_set, Sorted { terms: r }.make_monic())?;
        }
    }

    // drop elements whose leading monomial is a multiple of another's
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
        .collect();
    let elems = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    let mut gb = GroebnerBasis { vars: vars.clone(), order: ord.clone(), elems };
    gb.sort();
    Ok(gb)
}

/// Normal form of `f` modulo `basis`, which must be a Gröbner basis for `ord`.
pub fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], ord: &MonomialOrder) -> Result<Polynomial<F>, GroebnerError> {
    let vars = f.vars();
    let elems: Vec<Sorted<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.embed(vars).map(|g| Sorted::from_poly(&g, ord).make_monic()))
        .collect::<Result<_, _>>()?;
    let mut w = Work::new();
    for (m, c) in f.terms() {
        w.add(ord, m.clone(), c.clone());
    }
    let rem = reduce_work(w, &elems, ord, &Caps::current())?;
    Ok(Polynomial::from_terms(vars, rem)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    type P = Polynomial<Fp<5>>;

    fn parse_all(r: &Arc<VarTable>, s: &[&str]) -> Vec<P> {
        s.iter().map(|x| P::parse(r, x).unwrap()).collect()
    }

    #[test]
    fn principal_and_small() {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let gb = buchberger(&r, &parse_all(&r, &["x"]), &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.polys(), parse_all(&r, &["x"]));
        let gb = buchberger(&r, &parse_all(&r, &["x - y", "y^2"]), &MonomialOrder::Lex).unwrap();
        assert!(gb.is_groebner().unwrap());
        assert_eq!(gb.leading_monomials(), vec![Monomial::from_exponents(&[0, 2]), Monomial::from_exponents(&[1, 0])]);
        assert!(gb.contains(&P::parse(&r, "x^2").unwrap()).unwrap());
        assert!(!gb.contains(&P::parse(&r, "x").unwrap()).unwrap());
    }

    #[test]
    fn reduce_examples() {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let x = parse_all(&r, &["x"]);
        assert!(reduce(&P::parse(&r, "x^2").unwrap(), &x, &MonomialOrder::DegRevLex).unwrap().is_zero());
        assert_eq!(reduce(&P::parse(&r, "y").unwrap(), &x, &MonomialOrder::DegRevLex).unwrap(), P::parse(&r, "y").unwrap());
    }

    #[test]
    fn cyclic_three() {
        let r = VarTable::new(&["a", "b", "c"]).unwrap();
        let gens = parse_all(&r, &["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]);
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Elimination(vec![0])] {
            let mut gb = buchberger(&r, &gens, &ord).unwrap();
            assert!(gb.is_groebner().unwrap());
            for g in &gens {
                assert!(gb.contains(g).unwrap());
            }
            gb.interreduce().unwrap();
            assert!(gb.is_groebner().unwrap());
        }
        let gb = buchberger(&r, &gens, &MonomialOrder::Lex).unwrap();
        assert!(gb.contains(&P::parse(&r, "c^3 - 1").unwrap()).unwrap());
    }

    #[test]
    fn laurent_rejected() {
        let r = VarTable::with_flags(vec![("U".into(), true)]).unwrap();
        let err = buchberger(&r, &parse_all(&r, &["U - 1"]), &MonomialOrder::Lex).unwrap_err();
        assert_eq!(err.to_string(), "saturate the unit first");
    }

    #[test]
    fn degree_cap_aborts() {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let big = P::parse(&r, "x^70 + y").unwrap();
        let err = buchberger(&r, &[big], &MonomialOrder::DegRevLex).unwrap_err();
        assert!(matches!(err, GroebnerError::TooLarge(_)));
    }
}
