//! Projective tensor cone of two lexicographic cones.
//!
//! `Lex(S) ⊗ Lex(T)` is identified with `Lex(S × T)` via `e_s ⊗ e_t ↦ e_(s,t)`,
//! and under this identification the projective cone is exactly
//! `Lex(S × T)_+`. Membership is therefore a positivity test, and positive
//! elements come with an explicit representation `Σ f_i ⊗ g_i` by positive
//! factors.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{self, Generator};
use crate::lexvec::LexVector;
use crate::poset::Poset;
use crate::rational::{self, Rat};

/// `S`, `T` and their product, with `(i, j)` stored at `i * |T| + j`.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    pub left: Arc<Poset>,
    pub right: Arc<Poset>,
    pub product: Arc<Poset>,
}

/// `Σ f_i ⊗ g_i`; pairs are kept as given, never merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorRep {
    pub pairs: Vec<(LexVector, LexVector)>,
}

#[derive(Serialize, Deserialize)]
struct PairWire {
    left: std::collections::BTreeMap<String, String>,
    right: std::collections::BTreeMap<String, String>,
}

fn same(a: &Arc<Poset>, b: &Arc<Poset>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl TensorSpace {
    pub fn new(left: Arc<Poset>, right: Arc<Poset>) -> TensorSpace {
        let product = Arc::new(left.product(&right));
        TensorSpace {
            left,
            right,
            product,
        }
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.right.len() + j
    }

    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.right.len(), k % self.right.len())
    }

    fn check_factors(&self, f: &LexVector, g: &LexVector) -> Result<()> {
        if same(f.poset(), &self.left) && same(g.poset(), &self.right) {
            Ok(())
        } else {
            Err(Error::PosetMismatch)
        }
    }

    fn check_product(&self, u: &LexVector) -> Result<()> {
        if same(u.poset(), &self.product) {
            Ok(())
        } else {
            Err(Error::NotAProductPoset)
        }
    }

    /// `(f ⊗ g)(s, t) = f(s) g(t)`
    pub fn elementary_tensor(&self, f: &LexVector, g: &LexVector) -> Result<LexVector> {
        self.check_factors(f, g)?;
        let entries = f
            .entries()
            .flat_map(|(i, a)| g.entries().map(move |(j, b)| (self.index(i, j), a * b)));
        Ok(LexVector::from_indexed(&self.product, entries))
    }

    pub fn flatten(&self, rep: &TensorRep) -> Result<LexVector> {
        rep.pairs
            .iter()
            .try_fold(LexVector::zero(&self.product), |acc, (f, g)| {
                acc.add(&self.elementary_tensor(f, g)?)
            })
    }

    /// Membership in the projective cone.
    pub fn kp_member(&self, u: &LexVector) -> Result<bool> {
        self.check_product(u)?;
        Ok(u.is_positive())
    }

    /// Writes a member of the projective cone as `Σ f_i ⊗ g_i` with every
    /// `f_i` and `g_i` positive, by transporting the canonical generator
    /// decomposition on `S × T` back to the factors.
    pub fn kp_decompose(&self, u: &LexVector) -> Result<TensorRep> {
        if !self.kp_member(u)? {
            return Err(Error::NotInCone);
        }
        let dec = generators::decompose(u)?;
        let mut pairs = Vec::new();
        for (mu, gen) in &dec.terms {
            self.transport(mu, gen, &mut pairs);
        }
        Ok(TensorRep { pairs })
    }

    fn transport(&self, mu: &Rat, gen: &Generator, out: &mut Vec<(LexVector, LexVector)>) {
        let e = |i| LexVector::basis_at(&self.left, i);
        let f = |j| LexVector::basis_at(&self.right, j);
        match gen {
            Generator::Single(k) => {
                let (s, t) = self.split(*k);
                out.push((e(s).scale(mu), f(t)));
            }
            Generator::Pair { low, high, lambda } => {
                let (s1, t1) = self.split(*low);
                let (s2, t2) = self.split(*high);
                let neg = -lambda.clone();
                if s1 == s2 {
                    out.push((e(s1).scale(mu), f(t1).add_basis(t2, &neg)));
                } else if t1 == t2 {
                    out.push((e(s1).add_basis(s2, &neg).scale(mu), f(t1)));
                } else {
                    // e_(s1,t1) - α e_(s2,t2)
                    //   = (e_(s1,t1) - e_(s2,t1)) + (e_(s2,t1) - α e_(s2,t2))
                    out.push((e(s1).add_basis(s2, &-rational::one()).scale(mu), f(t1)));
                    out.push((e(s2).scale(mu), f(t1).add_basis(t2, &neg)));
                }
            }
        }
    }

    pub fn rep_to_json(&self, rep: &TensorRep) -> serde_json::Value {
        let wire: Vec<PairWire> = rep
            .pairs
            .iter()
            .map(|(f, g)| PairWire {
                left: f.to_string_map(),
                right: g.to_string_map(),
            })
            .collect();
        serde_json::to_value(wire).expect("tensor representation serialises")
    }

    pub fn rep_from_json(&self, s: &str) -> Result<TensorRep> {
        let wire: Vec<PairWire> = serde_json::from_str(s)?;
        let pairs = wire
            .iter()
            .map(|p| {
                Ok((
                    LexVector::from_string_map(&self.left, &p.left)?,
                    LexVector::from_string_map(&self.right, &p.right)?,
                ))
            })
            .collect::<Result<_>>()?;
        Ok(TensorRep { pairs })
    }
}

impl TensorRep {
    pub fn all_positive(&self) -> bool {
        self.pairs
            .iter()
            .all(|(f, g)| f.is_positive() && g.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(elems: &[&str], covers: &[(&str, &str)]) -> Arc<Poset> {
        Arc::new(Poset::from_covers(elems, covers).unwrap())
    }

    fn v(poset: &Arc<Poset>, entries: &[(&str, i64)]) -> LexVector {
        let e: Vec<(&str, Rat)> = entries.iter().map(|(l, c)| (*l, int(*c))).collect();
        LexVector::from_labels(poset, &e).unwrap()
    }

    fn chains() -> TensorSpace {
        TensorSpace::new(p(&["a", "b"], &[("a", "b")]), p(&["x", "y"], &[("x", "y")]))
    }

    #[test]
    fn elementary_tensors() {
        let sp = chains();
        let u = sp
            .elementary_tensor(&v(&sp.left, &[("a", 1)]), &v(&sp.right, &[("x", 1)]))
            .unwrap();
        assert_eq!(u, v(&sp.product, &[("a|x", 1)]));

        let u = sp
            .elementary_tensor(
                &v(&sp.left, &[("a", 1), ("b", -1)]),
                &v(&sp.right, &[("x", 1)]),
            )
            .unwrap();
        assert_eq!(u, v(&sp.product, &[("a|x", 1), ("b|x", -1)]));

        let u = sp
            .elementary_tensor(&LexVector::zero(&sp.left), &v(&sp.right, &[("y", 3)]))
            .unwrap();
        assert!(u.is_zero());

        let wrong = v(&sp.right, &[("x", 1)]);
        assert_eq!(
            sp.elementary_tensor(&wrong, &wrong),
            Err(Error::PosetMismatch)
        );
    }

    #[test]
    fn flatten_is_bilinear_sum() {
        let sp = chains();
        assert!(sp.flatten(&TensorRep { pairs: vec![] }).unwrap().is_zero());
        let ea = v(&sp.left, &[("a", 1)]);
        let rep = TensorRep {
            pairs: vec![
                (ea.clone(), v(&sp.right, &[("x", 1)])),
                (ea, v(&sp.right, &[("y", 1)])),
            ],
        };
        assert_eq!(
            sp.flatten(&rep).unwrap(),
            v(&sp.product, &[("a|x", 1), ("a|y", 1)])
        );
    }

    #[test]
    fn membership() {
        let sp = chains();
        let f = v(&sp.left, &[("a", 2), ("b", -5)]);
        let g = v(&sp.right, &[("x", 1), ("y", -1)]);
        assert!(sp
            .kp_member(&sp.elementary_tensor(&f, &g).unwrap())
            .unwrap());
        assert!(sp
            .kp_member(&v(&sp.product, &[("a|x", 1), ("b|y", -2)]))
            .unwrap());

        let anti = TensorSpace::new(p(&["a", "b"], &[]), p(&["x", "y"], &[]));
        assert!(!anti
            .kp_member(&v(&anti.product, &[("a|x", 1), ("b|y", -1)]))
            .unwrap());

        assert_eq!(sp.kp_member(&f), Err(Error::NotAProductPoset));
    }

    #[test]
    fn decompose_diagonal_pair() {
        let sp = TensorSpace::new(
            p(&["s1", "s2"], &[("s1", "s2")]),
            p(&["t1", "t2"], &[("t1", "t2")]),
        );
        let u = v(&sp.product, &[("s1|t1", 1), ("s2|t2", -2)]);
        let rep = sp.kp_decompose(&u).unwrap();
        assert_eq!(
            rep.pairs,
            vec![
                (
                    v(&sp.left, &[("s1", 1), ("s2", -1)]),
                    v(&sp.right, &[("t1", 1)])
                ),
                (
                    v(&sp.left, &[("s2", 1)]),
                    v(&sp.right, &[("t1", 1), ("t2", -2)])
                ),
            ]
        );
        assert_eq!(sp.flatten(&rep).unwrap(), u);
        assert!(rep.all_positive());
    }

    #[test]
    fn decompose_trivial_cases() {
        let sp = chains();
        let rep = sp.kp_decompose(&v(&sp.product, &[("a|x", 1)])).unwrap();
        assert_eq!(
            rep.pairs,
            vec![(v(&sp.left, &[("a", 1)]), v(&sp.right, &[("x", 1)]))]
        );
        assert!(sp
            .kp_decompose(&LexVector::zero(&sp.product))
            .unwrap()
            .pairs
            .is_empty());
        assert_eq!(
            sp.kp_decompose(&v(&sp.product, &[("a|x", -1)])),
            Err(Error::NotInCone)
        );
    }

    #[test]
    fn decompose_same_row_and_column() {
        let sp = chains();
        let u = v(&sp.product, &[("a|x", 3), ("a|y", -1), ("b|x", -4)]);
        let rep = sp.kp_decompose(&u).unwrap();
        assert!(rep.all_positive());
        assert_eq!(sp.flatten(&rep).unwrap(), u);
    }

    #[test]
    fn json_round_trip() {
        let sp = chains();
        let u = v(&sp.product, &[("a|x", 1), ("b|y", -2)]);
        let rep = sp.kp_decompose(&u).unwrap();
        let j = sp.rep_to_json(&rep).to_string();
        assert_eq!(sp.rep_from_json(&j).unwrap(), rep);
    }
}
