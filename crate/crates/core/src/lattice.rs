//! Lattice operations of `Lex(S)` on forests, and certified failures of
//! suprema on non-forests.

use std::sync::Arc;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lexvec::LexVector;
use crate::poset::Poset;
use crate::rational;

/// `Lex(S)` is a vector lattice exactly when `S` is a forest.
pub fn is_lattice(poset: &Poset) -> bool {
    poset.is_forest()
}

/// `f ∨ 0` on a forest.
///
/// Works on the subposet `supp(f)`: each of its trees is kept whole when
/// `f` is positive at the tree's root and dropped otherwise.
pub fn sup_with_zero(f: &LexVector) -> Result<LexVector> {
    let poset = f.poset();
    poset.require_forest()?;
    let supp = f.support();
    let sub = poset.induced(&supp);
    let trees = sub
        .tree_indices()
        .expect("subposet of a forest is a forest");
    let mut keep = vec![false; poset.len()];
    for (root, members) in trees {
        if f.get(supp[root]).is_positive() {
            for m in members {
                keep[supp[m]] = true;
            }
        }
    }
    Ok(f.restrict(|i| keep[i]))
}

/// `f ∨ g = ((f - g) ∨ 0) + g`
pub fn sup(f: &LexVector, g: &LexVector) -> Result<LexVector> {
    sup_with_zero(&f.sub(g)?)?.add(g)
}

/// `f ∧ g = -((-f) ∨ (-g))`
pub fn inf(f: &LexVector, g: &LexVector) -> Result<LexVector> {
    Ok(sup(&f.neg(), &g.neg())?.neg())
}

/// `|f| = f ∨ (-f)`
pub fn abs(f: &LexVector) -> Result<LexVector> {
    sup(f, &f.neg())
}

/// The pair `{f, 0}` with `f = e_s - e_t - e_m` for a ∧ copy `(s, t, m)`,
/// together with a step that lowers any upper bound of the pair.
#[derive(Debug, Clone)]
pub struct NoSupWitness {
    pub s: usize,
    pub t: usize,
    pub m: usize,
    pub f: LexVector,
}

/// Upper bounds of `{f, 0}`, each strictly below the previous one.
#[derive(Debug, Clone)]
pub struct DescentChain {
    pub f: LexVector,
    pub bounds: Vec<LexVector>,
}

pub fn no_sup_witness(poset: &Arc<Poset>) -> Result<NoSupWitness> {
    let (s, t, m) = poset.lambda_witness().ok_or(Error::IsAForest)?;
    let f = LexVector::basis_at(poset, s)
        .add_basis(t, &rational::int(-1))
        .add_basis(m, &rational::int(-1));
    Ok(NoSupWitness { s, t, m, f })
}

impl NoSupWitness {
    pub fn labels(&self) -> (&str, &str, &str) {
        let p = self.f.poset();
        (p.label(self.s), p.label(self.t), p.label(self.m))
    }

    pub fn is_upper_bound(&self, h: &LexVector) -> Result<bool> {
        Ok(h.is_positive() && self.f.leq(h)?)
    }

    /// A canonical upper bound to start descending from.
    pub fn start(&self) -> LexVector {
        LexVector::basis_at(self.f.poset(), self.s)
    }

    /// Returns an upper bound strictly below `h`.
    ///
    /// Support outside `{s, t, m}` is lowered first (halved if positive,
    /// decreased by one if negative); otherwise `e_m` is subtracted. The
    /// result is checked before it is returned.
    pub fn descend(&self, h: &LexVector) -> Result<LexVector> {
        if !self.is_upper_bound(h)? {
            return Err(Error::NotAnUpperBound);
        }
        let outside = h
            .support()
            .into_iter()
            .find(|&u| u != self.s && u != self.t && u != self.m);
        let next = match outside {
            Some(u) => {
                let c = h.get(u);
                let step = if c.is_positive() {
                    c / rational::int(2)
                } else {
                    rational::one()
                };
                h.add_basis(u, &-step)
            }
            None => h.add_basis(self.m, &rational::int(-1)),
        };
        let gap = h.sub(&next)?;
        if !self.is_upper_bound(&next)? || gap.is_zero() || !gap.is_positive() {
            return Err(Error::DescentFailed);
        }
        Ok(next)
    }

    /// `steps` successive descents from `start`, which is included first.
    pub fn chain(&self, start: LexVector, steps: usize) -> Result<DescentChain> {
        if !self.is_upper_bound(&start)? {
            return Err(Error::NotAnUpperBound);
        }
        let mut bounds = Vec::with_capacity(steps + 1);
        bounds.push(start);
        for _ in 0..steps {
            let next = self.descend(bounds.last().expect("nonempty"))?;
            bounds.push(next);
        }
        Ok(DescentChain {
            f: self.f.clone(),
            bounds,
        })
    }
}

impl DescentChain {
    /// Re-checks every link independently of how the chain was produced.
    pub fn verify(&self) -> bool {
        let zero = LexVector::zero(self.f.poset());
        let bounded = self
            .bounds
            .iter()
            .all(|h| zero.leq(h).unwrap_or(false) && self.f.leq(h).unwrap_or(false));
        let decreasing = self
            .bounds
            .windows(2)
            .all(|w| w[1] != w[0] && w[1].leq(&w[0]).unwrap_or(false));
        bounded && decreasing
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, Rat};

    fn p(elems: &[&str], covers: &[(&str, &str)]) -> Arc<Poset> {
        Arc::new(Poset::from_covers(elems, covers).unwrap())
    }

    fn v(poset: &Arc<Poset>, entries: &[(&str, i64)]) -> LexVector {
        let e: Vec<(&str, Rat)> = entries.iter().map(|(l, c)| (*l, int(*c))).collect();
        LexVector::from_labels(poset, &e).unwrap()
    }

    fn wedge() -> Arc<Poset> {
        p(&["s", "t", "m"], &[("s", "m"), ("t", "m")])
    }

    #[test]
    fn sup_of_positive_is_itself() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let f = v(&chain, &[("a", 1), ("b", -7)]);
        assert_eq!(sup_with_zero(&f).unwrap(), f);
    }

    #[test]
    fn sup_of_negative_is_zero() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        assert!(sup_with_zero(&v(&chain, &[("a", -1), ("b", 1)]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn sup_per_tree() {
        let forest = p(&["a", "b", "c"], &[("a", "b")]);
        let f = v(&forest, &[("a", 1), ("b", -2), ("c", -1)]);
        assert_eq!(
            sup_with_zero(&f).unwrap(),
            v(&forest, &[("a", 1), ("b", -2)])
        );
    }

    #[test]
    fn sup_uses_support_components() {
        // r < x, r < y; without r in the support, x and y are separate trees.
        let tree = p(&["r", "x", "y"], &[("r", "x"), ("r", "y")]);
        let f = v(&tree, &[("x", 2), ("y", -3)]);
        assert_eq!(sup_with_zero(&f).unwrap(), v(&tree, &[("x", 2)]));
    }

    #[test]
    fn sup_rejects_non_forest() {
        let w = wedge();
        let err = sup_with_zero(&v(&w, &[("s", 1)])).unwrap_err();
        assert!(matches!(err, Error::NotAForest { .. }));
    }

    #[test]
    fn derived_operations() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let f = v(&chain, &[("a", 1), ("b", -1)]);
        let z = LexVector::zero(&chain);
        assert_eq!(sup(&f, &f).unwrap(), f);
        assert_eq!(sup(&f, &z).unwrap(), f);
        assert!(inf(&f, &z).unwrap().is_zero());

        let single = p(&["a"], &[]);
        assert_eq!(
            abs(&v(&single, &[("a", -1)])).unwrap(),
            v(&single, &[("a", 1)])
        );
    }

    #[test]
    fn lattice_iff_forest() {
        assert!(!is_lattice(&wedge()));
        assert!(is_lattice(&Poset::chain(&["a", "b", "c"]).unwrap()));
        assert!(is_lattice(&Poset::antichain(&["a", "b", "c"]).unwrap()));
    }

    #[test]
    fn witness_descends_from_es() {
        let w = wedge();
        let wit = no_sup_witness(&w).unwrap();
        assert_eq!(wit.labels(), ("s", "t", "m"));
        assert_eq!(wit.f, v(&w, &[("s", 1), ("t", -1), ("m", -1)]));
        let h1 = wit.descend(&v(&w, &[("s", 1)])).unwrap();
        assert_eq!(h1, v(&w, &[("s", 1), ("m", -1)]));
        let h2 = wit.descend(&h1).unwrap();
        assert_eq!(h2, v(&w, &[("s", 1), ("m", -2)]));
    }

    #[test]
    fn witness_halves_outside_support() {
        let w = p(&["s", "t", "m", "u"], &[("s", "m"), ("t", "m")]);
        let wit = no_sup_witness(&w).unwrap();
        let h = v(&w, &[("s", 1), ("u", 4)]);
        assert_eq!(wit.descend(&h).unwrap(), v(&w, &[("s", 1), ("u", 2)]));
    }

    #[test]
    fn witness_lowers_negative_outside_support() {
        // u sits above s and t so a negative value there keeps h and h - f positive
        let w = p(
            &["s", "t", "m", "u"],
            &[("s", "m"), ("t", "m"), ("s", "u"), ("t", "u")],
        );
        let wit = no_sup_witness(&w).unwrap();
        let h = v(&w, &[("s", 1), ("u", -3)]);
        assert_eq!(wit.descend(&h).unwrap(), v(&w, &[("s", 1), ("u", -4)]));
    }

    #[test]
    fn witness_errors() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        assert!(matches!(no_sup_witness(&chain), Err(Error::IsAForest)));
        let w = wedge();
        let wit = no_sup_witness(&w).unwrap();
        assert_eq!(
            wit.descend(&LexVector::zero(&w)),
            Err(Error::NotAnUpperBound)
        );
    }

    #[test]
    fn chain_of_fifty() {
        let w = wedge();
        let wit = no_sup_witness(&w).unwrap();
        let c = wit.chain(wit.start(), 50).unwrap();
        assert_eq!(c.bounds.len(), 51);
        assert!(c.verify());
        assert_eq!(c.bounds[50], v(&w, &[("s", 1), ("m", -50)]));
    }
}
