//! The canonical generating set of `Lex(S)_+` and positive decompositions.
//!
//! Every positive vector is a positive combination of `e_s` and of
//! `e_s - λ e_t` with `s < t`, `λ > 0`. [`decompose`] produces such a
//! combination constructively by peeling off one up-set `[s⟩` at a time.

use std::sync::Arc;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexvec::LexVector;
use crate::poset::Poset;
use crate::rational::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `e_s`
    Single(usize),
    /// `e_low - lambda * e_high`, requires `low < high` and `lambda > 0`.
    Pair {
        low: usize,
        high: usize,
        lambda: Rat,
    },
}

impl Generator {
    pub fn vector(&self, poset: &Arc<Poset>) -> LexVector {
        match self {
            Generator::Single(s) => LexVector::basis_at(poset, *s),
            Generator::Pair { low, high, lambda } => {
                LexVector::basis_at(poset, *low).add_basis(*high, &-lambda.clone())
            }
        }
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        match self {
            Generator::Single(s) => *s < poset.len(),
            Generator::Pair { low, high, lambda } => {
                *low < poset.len()
                    && *high < poset.len()
                    && poset.lt(*low, *high)
                    && lambda.is_positive()
            }
        }
    }

    fn to_wire(&self, poset: &Poset) -> GeneratorWire {
        match self {
            Generator::Single(s) => GeneratorWire::Single(poset.label(*s).to_string()),
            Generator::Pair { low, high, lambda } => GeneratorWire::Pair(
                poset.label(*low).to_string(),
                poset.label(*high).to_string(),
                rational::format(lambda),
            ),
        }
    }

    fn from_wire(w: &GeneratorWire, poset: &Poset) -> Result<Generator> {
        let g = match w {
            GeneratorWire::Single(s) => Generator::Single(poset.index_of(s)?),
            GeneratorWire::Pair(a, b, l) => Generator::Pair {
                low: poset.index_of(a)?,
                high: poset.index_of(b)?,
                lambda: rational::parse(l)?,
            },
        };
        if !g.is_valid(poset) {
            return Err(Error::Parse(format!("invalid generator {w:?}")));
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum GeneratorWire {
    Single(String),
    Pair(String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TermWire {
    mu: String,
    gen: GeneratorWire,
}

/// `Σ mu_i * gen_i` with every `mu_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub poset: Arc<Poset>,
    pub terms: Vec<(Rat, Generator)>,
}

impl Decomposition {
    pub fn recombine(&self) -> LexVector {
        self.terms
            .iter()
            .fold(LexVector::zero(&self.poset), |acc, (mu, g)| {
                acc.add(&g.vector(&self.poset).scale(mu))
                    .expect("same poset")
            })
    }

    /// Positive coefficients, valid generators, exact recombination.
    pub fn certifies(&self, f: &LexVector) -> bool {
        self.terms
            .iter()
            .all(|(mu, g)| mu.is_positive() && g.is_valid(&self.poset))
            && self.recombine() == *f
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire: Vec<TermWire> = self
            .terms
            .iter()
            .map(|(mu, g)| TermWire {
                mu: rational::format(mu),
                gen: g.to_wire(&self.poset),
            })
            .collect();
        serde_json::to_value(wire).expect("decomposition serialises")
    }

    pub fn from_json(poset: &Arc<Poset>, s: &str) -> Result<Decomposition> {
        let wire: Vec<TermWire> = serde_json::from_str(s)?;
        let terms = wire
            .iter()
            .map(|t| {
                let mu = rational::parse(&t.mu)?;
                if !mu.is_positive() {
                    return Err(Error::Parse(format!("nonpositive coefficient {}", t.mu)));
                }
                Ok((mu, Generator::from_wire(&t.gen, poset)?))
            })
            .collect::<Result<_>>()?;
        Ok(Decomposition {
            poset: Arc::clone(poset),
            terms,
        })
    }
}

/// The least label among the minimal elements of `supp(f)`.
///
/// For positive `f` the value there is positive: a negative value would
/// need a positive coordinate strictly below it inside the support.
pub fn pivot(f: &LexVector) -> Option<usize> {
    let p = f.poset();
    let supp = f.support();
    supp.iter()
        .copied()
        .find(|&s| !supp.iter().any(|&t| p.lt(t, s)))
}

/// `(f|[s⟩, f|[s⟩ᶜ)` where `[s⟩ = {t : t ≥ s}`.
pub fn split_at(f: &LexVector, s: usize) -> (LexVector, LexVector) {
    let p = Arc::clone(f.poset());
    (f.restrict(|t| p.le(s, t)), f.restrict(|t| !p.le(s, t)))
}

/// Writes the block `f|[s⟩` (with `f(s) > 0` and `s` least in its support)
/// as a positive combination of generators.
fn decompose_block(block: &LexVector, s: usize, out: &mut Vec<(Rat, Generator)>) {
    let fs = block.get(s);
    debug_assert!(fs.is_positive());
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for t in block.support() {
        if t == s {
            continue;
        }
        if block.get(t).is_positive() {
            plus.push(t);
        } else {
            minus.push(t);
        }
    }
    for &t in &plus {
        out.push((block.get(t), Generator::Single(t)));
    }
    if minus.is_empty() {
        out.push((fs, Generator::Single(s)));
        return;
    }
    let count = rational::int(minus.len() as i64);
    let mu = &fs / &count;
    for &t in &minus {
        let lambda = block.get(t).abs() * &count / &fs;
        out.push((
            mu.clone(),
            Generator::Pair {
                low: s,
                high: t,
                lambda,
            },
        ));
    }
}

/// Positive decomposition of a positive vector over the canonical
/// generating set. Recombination is exact.
pub fn decompose(f: &LexVector) -> Result<Decomposition> {
    if !f.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut terms = Vec::new();
    let mut rest = f.clone();
    while let Some(s) = pivot(&rest) {
        let (block, remainder) = split_at(&rest, s);
        decompose_block(&block, s, &mut terms);
        rest = remainder;
    }
    Ok(Decomposition {
        poset: Arc::clone(f.poset()),
        terms,
    })
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    rational::frac(rng.random_range(1..=4), rng.random_range(1..=3))
}

/// A uniformly chosen generator shape: a single basis vector, or a pair
/// when the poset has comparable elements (chosen half the time).
pub fn random_generator<R: Rng + ?Sized>(poset: &Poset, rng: &mut R) -> Option<Generator> {
    let n = poset.len();
    if n == 0 {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| poset.lt(a, b))
        .collect();
    if pairs.is_empty() || rng.random_bool(0.5) {
        return Some(Generator::Single(rng.random_range(0..n)));
    }
    let (low, high) = pairs[rng.random_range(0..pairs.len())];
    Some(Generator::Pair {
        low,
        high,
        lambda: random_coefficient(rng),
    })
}

/// Positive combination of `size` random generators.
pub fn random_positive_with<R: Rng + ?Sized>(
    poset: &Arc<Poset>,
    rng: &mut R,
    size: usize,
) -> LexVector {
    let mut acc = LexVector::zero(poset);
    for _ in 0..size {
        let Some(g) = random_generator(poset, rng) else {
            break;
        };
        let mu = random_coefficient(rng);
        acc = acc.add(&g.vector(poset).scale(&mu)).expect("same poset");
    }
    acc
}

/// Seeded [`random_positive_with`]; the same seed always gives the same vector.
pub fn random_positive(poset: &Arc<Poset>, seed: u64, size: usize) -> LexVector {
    random_positive_with(poset, &mut ChaCha8Rng::seed_from_u64(seed), size)
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

    fn pair(p: &Poset, a: &str, b: &str, l: i64) -> Generator {
        Generator::Pair {
            low: p.index_of(a).unwrap(),
            high: p.index_of(b).unwrap(),
            lambda: int(l),
        }
    }

    #[test]
    fn a_generator_decomposes_to_itself() {
        let c = p(&["a", "b"], &[("a", "b")]);
        let d = decompose(&v(&c, &[("a", 1), ("b", -3)])).unwrap();
        assert_eq!(d.terms, vec![(int(1), pair(&c, "a", "b", 3))]);
    }

    #[test]
    fn branching_negative_part_is_shared() {
        let t = p(&["r", "s", "t"], &[("r", "s"), ("r", "t")]);
        let f = v(&t, &[("r", 2), ("s", -1), ("t", -1)]);
        let d = decompose(&f).unwrap();
        assert_eq!(
            d.terms,
            vec![
                (int(1), pair(&t, "r", "s", 1)),
                (int(1), pair(&t, "r", "t", 1))
            ]
        );
        assert!(d.certifies(&f));
    }

    #[test]
    fn singletons() {
        let c = p(&["a", "b"], &[]);
        let d = decompose(&v(&c, &[("a", 5)])).unwrap();
        assert_eq!(d.terms, vec![(int(5), Generator::Single(0))]);
        assert!(decompose(&LexVector::zero(&c)).unwrap().terms.is_empty());
    }

    #[test]
    fn forest_with_separate_tree() {
        let fst = p(&["a", "b", "c"], &[("a", "b")]);
        let f = v(&fst, &[("a", 1), ("b", -2), ("c", 1)]);
        let d = decompose(&f).unwrap();
        assert_eq!(
            d.terms,
            vec![
                (int(1), pair(&fst, "a", "b", 2)),
                (int(1), Generator::Single(2))
            ]
        );
        assert!(d.certifies(&f));
    }

    #[test]
    fn mixed_signs_above_pivot() {
        let c = p(&["a", "b", "c"], &[("a", "b"), ("a", "c")]);
        let f = v(&c, &[("a", 3), ("b", 4), ("c", -6)]);
        let d = decompose(&f).unwrap();
        assert_eq!(
            d.terms,
            vec![
                (int(4), Generator::Single(1)),
                (int(3), pair(&c, "a", "c", 2))
            ]
        );
        assert!(d.certifies(&f));
    }

    #[test]
    fn rejects_non_positive() {
        let c = p(&["a", "b"], &[]);
        assert_eq!(decompose(&v(&c, &[("a", -1)])), Err(Error::NotPositive));
    }

    #[test]
    fn json_shape() {
        let t = p(&["r", "s"], &[("r", "s")]);
        let d = decompose(&v(&t, &[("r", 1), ("s", -1)])).unwrap();
        let j = d.to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"mu":"1","gen":{"pair":["r","s","1"]}}]"#
        );
        assert_eq!(Decomposition::from_json(&t, &j.to_string()).unwrap(), d);
        assert!(
            Decomposition::from_json(&t, r#"[{"mu":"1","gen":{"pair":["s","r","1"]}}]"#).is_err()
        );
        assert!(Decomposition::from_json(&t, r#"[{"mu":"0","gen":{"single":"r"}}]"#).is_err());
    }

    #[test]
    fn random_positive_properties() {
        let c = p(&["a", "b"], &[("a", "b")]);
        assert!(random_positive(&c, 7, 0).is_zero());
        assert_eq!(random_positive(&c, 7, 5), random_positive(&c, 7, 5));
        assert!(random_positive(&c, 7, 5).is_positive());

        let one = p(&["a"], &[]);
        for seed in 0..10 {
            let f = random_positive(&one, seed, 3);
            assert!(f.get(0).is_positive());
        }
    }
}
