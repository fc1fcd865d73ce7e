//! Vectors of `Lex(S)` and the lexicographic cone.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rational::{self, Rat};

/// Finitely supported rational function on the elements of a poset.
///
/// Only nonzero coefficients are stored, keyed by element index.
#[derive(Clone, PartialEq, Eq)]
pub struct LexVector {
    poset: Arc<Poset>,
    coeffs: BTreeMap<usize, Rat>,
}

/// Output of [`dual_violation_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualViolation {
    pub f: LexVector,
    pub t: String,
    pub n: BigInt,
    pub pairing: Rat,
}

impl LexVector {
    pub fn zero(poset: &Arc<Poset>) -> LexVector {
        LexVector {
            poset: Arc::clone(poset),
            coeffs: BTreeMap::new(),
        }
    }

    /// `e_s`
    pub fn basis(poset: &Arc<Poset>, s: &str) -> Result<LexVector> {
        Ok(Self::basis_at(poset, poset.index_of(s)?))
    }

    pub fn basis_at(poset: &Arc<Poset>, i: usize) -> LexVector {
        let mut v = Self::zero(poset);
        v.coeffs.insert(i, rational::one());
        v
    }

    pub fn from_indexed<I>(poset: &Arc<Poset>, entries: I) -> LexVector
    where
        I: IntoIterator<Item = (usize, Rat)>,
    {
        let mut v = Self::zero(poset);
        for (i, c) in entries {
            assert!(i < poset.len(), "index {i} out of range");
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_labels<L: AsRef<str>>(
        poset: &Arc<Poset>,
        entries: &[(L, Rat)],
    ) -> Result<LexVector> {
        let mut v = Self::zero(poset);
        for (l, c) in entries {
            let i = poset.index_of(l.as_ref())?;
            v.add_at(i, c);
        }
        Ok(v)
    }

    /// Parses `{"a": "3/2", "b": "-1"}`.
    pub fn from_json(poset: &Arc<Poset>, s: &str) -> Result<LexVector> {
        let map: BTreeMap<String, String> = serde_json::from_str(s)?;
        Self::from_string_map(poset, &map)
    }

    pub fn from_string_map(
        poset: &Arc<Poset>,
        map: &BTreeMap<String, String>,
    ) -> Result<LexVector> {
        let mut v = Self::zero(poset);
        for (l, c) in map {
            let i = poset.index_of(l)?;
            v.add_at(i, &rational::parse(c)?);
        }
        Ok(v)
    }

    /// Label → canonical rational string, nonzero entries only.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(&i, c)| (self.poset.label(i).to_string(), rational::format(c)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_string_map()).expect("string map serialises")
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn get(&self, i: usize) -> Rat {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn get_label(&self, s: &str) -> Result<Rat> {
        Ok(self.get(self.poset.index_of(s)?))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Support in label order.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.coeffs.keys().copied().collect();
        self.poset.sort_canonical(&mut s);
        s
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_at(&mut self, i: usize, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    fn check_same(&self, other: &LexVector) -> Result<()> {
        if Arc::ptr_eq(&self.poset, &other.poset) || *self.poset == *other.poset {
            Ok(())
        } else {
            Err(Error::PosetMismatch)
        }
    }

    pub fn add(&self, other: &LexVector) -> Result<LexVector> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_at(i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LexVector) -> Result<LexVector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LexVector {
        LexVector {
            poset: Arc::clone(&self.poset),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    pub fn scale(&self, lambda: &Rat) -> LexVector {
        if lambda.is_zero() {
            return Self::zero(&self.poset);
        }
        LexVector {
            poset: Arc::clone(&self.poset),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * lambda)).collect(),
        }
    }

    /// `self + lambda * e_i`
    pub fn add_basis(&self, i: usize, lambda: &Rat) -> LexVector {
        let mut out = self.clone();
        out.add_at(i, lambda);
        out
    }

    /// Keeps the coordinates selected by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> LexVector {
        LexVector {
            poset: Arc::clone(&self.poset),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&i, _)| keep(i))
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// Same function, viewed on another poset with the same labels.
    pub fn relabel_onto(&self, target: &Arc<Poset>) -> Result<LexVector> {
        let mut out = Self::zero(target);
        for (&i, c) in &self.coeffs {
            out.add_at(target.index_of(self.poset.label(i))?, c);
        }
        Ok(out)
    }

    /// Cone membership: every negative coordinate has a strictly smaller
    /// coordinate with a positive value.
    pub fn is_positive(&self) -> bool {
        let p = &self.poset;
        self.coeffs
            .iter()
            .filter(|(_, c)| c.is_negative())
            .all(|(&s, _)| {
                self.coeffs
                    .iter()
                    .any(|(&t, c)| c.is_positive() && p.lt(t, s))
            })
    }

    /// `self ≤ other` iff `other - self` is positive.
    pub fn leq(&self, other: &LexVector) -> Result<bool> {
        Ok(other.sub(self)?.is_positive())
    }

    /// `⟨f, g⟩ = Σ f(s) g(s)`
    pub fn pairing(&self, other: &LexVector) -> Result<Rat> {
        self.check_same(other)?;
        let mut acc = Rat::zero();
        for (i, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(i) {
                acc += c * d;
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.to_string_map()).finish()
    }
}

impl fmt::Display for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Extreme rays of the dual cone: `e_s` for each minimal `s`, in label order.
pub fn dual_generators(poset: &Arc<Poset>) -> Vec<LexVector> {
    poset
        .minimal_indices()
        .into_iter()
        .map(|i| LexVector::basis_at(poset, i))
        .collect()
}

/// Certifies that `g` is not in the dual cone when `g(s) > 0` at a
/// nonminimal `s`: returns `f = e_t - n e_s` with `t` the least label below
/// `s` and `n` the least positive integer making `⟨f, g⟩ < 0`.
pub fn dual_violation_witness(poset: &Arc<Poset>, s: &str, g: &LexVector) -> Result<DualViolation> {
    let si = poset.index_of(s)?;
    let mut below: Vec<usize> = poset.below(si).collect();
    if below.is_empty() {
        return Err(Error::NotApplicable(format!("`{s}` is minimal")));
    }
    if g.entries().any(|(_, c)| c.is_negative()) {
        return Err(Error::NotApplicable(
            "functional is not pointwise nonnegative".into(),
        ));
    }
    let gs = g.get(si);
    if !gs.is_positive() {
        return Err(Error::NotApplicable(format!(
            "functional vanishes at `{s}`"
        )));
    }
    poset.sort_canonical(&mut below);
    let t = below[0];
    // least integer n >= 1 with g(t) - n g(s) < 0
    let n = (g.get(t) / &gs).floor().to_integer() + BigInt::one();
    let n = n.max(BigInt::one());
    let f = LexVector::basis_at(poset, t).add_basis(si, &-Rat::from_integer(n.clone()));
    let pairing = f.pairing(g)?;
    debug_assert!(f.is_positive() && pairing.is_negative());
    Ok(DualViolation {
        f,
        t: poset.label(t).to_string(),
        n,
        pairing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(elems: &[&str], covers: &[(&str, &str)]) -> Arc<Poset> {
        Arc::new(Poset::from_covers(elems, covers).unwrap())
    }

    fn v(poset: &Arc<Poset>, entries: &[(&str, i64)]) -> LexVector {
        let e: Vec<(&str, Rat)> = entries.iter().map(|(l, c)| (*l, int(*c))).collect();
        LexVector::from_labels(poset, &e).unwrap()
    }

    #[test]
    fn vector_space_plumbing() {
        let a = p(&["a", "b"], &[]);
        let ea = LexVector::basis(&a, "a").unwrap();
        assert_eq!(ea.add(&ea).unwrap(), v(&a, &[("a", 2)]));
        assert!(ea.scale(&int(0)).is_zero());
        assert!(ea.add(&ea.scale(&int(-1))).unwrap().is_zero());
        assert_eq!(ea.sub(&ea).unwrap().support_len(), 0);
    }

    #[test]
    fn mismatched_posets() {
        let a = p(&["a", "b"], &[]);
        let b = p(&["a", "b"], &[("a", "b")]);
        let x = LexVector::basis(&a, "a").unwrap();
        let y = LexVector::basis(&b, "a").unwrap();
        assert_eq!(x.add(&y), Err(Error::PosetMismatch));
        assert_eq!(x.pairing(&y), Err(Error::PosetMismatch));
        // structurally equal posets behind different Arcs are compatible
        let a2 = p(&["a", "b"], &[]);
        assert!(x.add(&LexVector::basis(&a2, "b").unwrap()).is_ok());
    }

    #[test]
    fn positivity_examples() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        assert!(v(&chain, &[("a", 1), ("b", -5)]).is_positive());
        assert!(!v(&chain, &[("a", -1), ("b", 5)]).is_positive());

        let anti = p(&["a", "b"], &[]);
        assert!(!v(&anti, &[("a", 1), ("b", -1)]).is_positive());
        assert!(LexVector::zero(&anti).is_positive());

        let wedge = p(&["s", "t", "m"], &[("s", "m"), ("t", "m")]);
        assert!(!v(&wedge, &[("s", 1), ("t", -1), ("m", -1)]).is_positive());
    }

    #[test]
    fn leq_examples() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let f = v(&chain, &[("a", 1), ("b", -5)]);
        assert!(f.leq(&f).unwrap());
        assert!(LexVector::zero(&chain).leq(&f).unwrap());

        let wedge = p(&["s", "t", "m"], &[("s", "m"), ("t", "m")]);
        let f = v(&wedge, &[("s", 1), ("t", -1), ("m", -1)]);
        let z = LexVector::zero(&wedge);
        assert!(!f.leq(&z).unwrap());
        assert!(!z.leq(&f).unwrap());
    }

    #[test]
    fn pairing_examples() {
        let a = p(&["a", "b"], &[]);
        let ea = LexVector::basis(&a, "a").unwrap();
        let eb = LexVector::basis(&a, "b").unwrap();
        assert_eq!(ea.pairing(&ea).unwrap(), int(1));
        assert_eq!(ea.pairing(&eb).unwrap(), int(0));
        let f = v(&a, &[("a", 2), ("b", -3)]);
        let g = v(&a, &[("a", 1), ("b", 1)]);
        assert_eq!(f.pairing(&g).unwrap(), int(-1));
    }

    #[test]
    fn dual_generators_examples() {
        let wedge = p(&["s", "t", "m"], &[("s", "m"), ("t", "m")]);
        let d = dual_generators(&wedge);
        assert_eq!(
            d,
            vec![
                LexVector::basis(&wedge, "s").unwrap(),
                LexVector::basis(&wedge, "t").unwrap()
            ]
        );

        let chain = p(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            dual_generators(&chain),
            vec![LexVector::basis(&chain, "a").unwrap()]
        );

        let anti = p(&["b", "a"], &[]);
        assert_eq!(dual_generators(&anti).len(), 2);
    }

    #[test]
    fn dual_witness_examples() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let w = dual_violation_witness(&chain, "b", &v(&chain, &[("a", 1), ("b", 1)])).unwrap();
        assert_eq!(w.f, v(&chain, &[("a", 1), ("b", -2)]));
        assert_eq!(w.n, BigInt::from(2));
        assert_eq!(w.pairing, int(-1));

        let w = dual_violation_witness(&chain, "b", &v(&chain, &[("b", 1)])).unwrap();
        assert_eq!(w.f, v(&chain, &[("a", 1), ("b", -1)]));
        assert_eq!(w.n, BigInt::from(1));
        assert_eq!(w.pairing, int(-1));

        let c3 = p(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let w = dual_violation_witness(&c3, "c", &v(&c3, &[("c", 1)])).unwrap();
        assert_eq!(w.t, "a");
        assert_eq!(w.f, v(&c3, &[("a", 1), ("c", -1)]));
        assert_eq!(w.pairing, int(-1));
    }

    #[test]
    fn dual_witness_fractional_weights() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let g = LexVector::from_labels(&chain, &[("a", frac(7, 2)), ("b", frac(1, 3))]).unwrap();
        let w = dual_violation_witness(&chain, "b", &g).unwrap();
        // 7/2 - n/3 < 0  <=>  n > 21/2
        assert_eq!(w.n, BigInt::from(11));
        assert!(w.f.is_positive());
        assert_eq!(w.pairing, frac(-1, 6));
    }

    #[test]
    fn dual_witness_errors() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        assert!(matches!(
            dual_violation_witness(&chain, "a", &v(&chain, &[("a", 1)])),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            dual_violation_witness(&chain, "b", &v(&chain, &[("a", -1), ("b", 1)])),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            dual_violation_witness(&chain, "b", &v(&chain, &[("a", 1)])),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let chain = p(&["a", "b"], &[("a", "b")]);
        let f = LexVector::from_json(&chain, r#"{"a": "3/2", "b": "-1", "x": "0"}"#);
        assert_eq!(f, Err(Error::UnknownLabel("x".into())));
        let f = LexVector::from_json(&chain, r#"{"a": "3/2", "b": "-1"}"#).unwrap();
        assert_eq!(f.get_label("a").unwrap(), frac(3, 2));
        let back = LexVector::from_json(&chain, &f.to_json().to_string()).unwrap();
        assert_eq!(back, f);
    }
}
