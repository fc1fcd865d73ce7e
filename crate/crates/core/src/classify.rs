//! Finite forests as nested lexicographic unions.
//!
//! A finite-dimensional vector lattice is a direct sum of terms `ℝ ∘ M`
//! where `M` is again such a sum. A [`LexSum`] records that recursion; each
//! [`LexRoot`] is one `ℝ ∘ M` factor. Forests and terms correspond one to
//! one: a root of the forest becomes a `ℝ` factor, and its strict up-set
//! becomes the nested `M`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poset::Poset;
use crate::sample;

/// JSON: `{"sum": [{"root": {"sum": [...]}}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct LexSum {
    pub sum: Vec<LexRoot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexRoot {
    pub root: LexSum,
}

impl LexSum {
    pub fn empty() -> LexSum {
        LexSum::default()
    }

    /// Number of root nodes, i.e. the dimension of the space.
    pub fn dimension(&self) -> usize {
        self.sum.iter().map(|r| 1 + r.root.dimension()).sum()
    }

    /// Balanced-parenthesis code with sorted siblings; two terms describe
    /// isomorphic forests iff their encodings agree.
    pub fn encoding(&self) -> String {
        let mut parts: Vec<String> = self
            .sum
            .iter()
            .map(|r| format!("({})", r.root.encoding()))
            .collect();
        parts.sort();
        parts.concat()
    }

    /// Same term with every sum sorted by encoding.
    pub fn canonical(&self) -> LexSum {
        let mut roots: Vec<(String, LexRoot)> = self
            .sum
            .iter()
            .map(|r| {
                let root = LexRoot {
                    root: r.root.canonical(),
                };
                (format!("({})", root.root.encoding()), root)
            })
            .collect();
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        LexSum {
            sum: roots.into_iter().map(|(_, r)| r).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

fn build(poset: &Poset, elems: &[usize]) -> LexSum {
    let roots = elems
        .iter()
        .copied()
        .filter(|&s| !elems.iter().any(|&t| poset.lt(t, s)));
    let sum = roots
        .map(|r| {
            let above: Vec<usize> = elems.iter().copied().filter(|&t| poset.lt(r, t)).collect();
            LexRoot {
                root: build(poset, &above),
            }
        })
        .collect();
    LexSum { sum }.canonical()
}

/// One `ℝ ∘ M` per tree, `M` built from the strict up-set of the root.
pub fn forest_to_term(forest: &Poset) -> Result<LexSum> {
    forest.require_forest()?;
    let all: Vec<usize> = (0..forest.len()).collect();
    Ok(build(forest, &all))
}

/// Inverse of [`forest_to_term`], labelling nodes `a, b, ...` in preorder.
pub fn term_to_forest(term: &LexSum) -> Poset {
    fn walk(
        sum: &LexSum,
        parent: Option<usize>,
        next: &mut usize,
        covers: &mut Vec<(usize, usize)>,
    ) {
        for r in &sum.sum {
            let me = *next;
            *next += 1;
            if let Some(p) = parent {
                covers.push((p, me));
            }
            walk(&r.root, Some(me), next, covers);
        }
    }
    let mut next = 0;
    let mut covers = Vec::new();
    walk(term, None, &mut next, &mut covers);
    let names = sample::labels(next);
    let covers: Vec<(String, String)> = covers
        .into_iter()
        .map(|(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    Poset::from_covers(&names, &covers).expect("tree covers are acyclic")
}

/// Label-free isomorphism invariant of a forest.
pub fn canonical_form(forest: &Poset) -> Result<String> {
    Ok(forest_to_term(forest)?.encoding())
}

/// All forests on `n` nodes up to isomorphism, as canonical terms.
pub fn all_terms(n: usize) -> Vec<LexSum> {
    let mut memo: Vec<Vec<LexSum>> = vec![vec![LexSum::empty()]];
    for size in 1..=n {
        let mut found: BTreeMap<String, LexSum> = BTreeMap::new();
        for first in 1..=size {
            for child in &memo[first - 1] {
                let tree = LexRoot {
                    root: child.clone(),
                };
                for rest in &memo[size - first] {
                    let mut sum = rest.sum.clone();
                    sum.push(tree.clone());
                    let term = LexSum { sum }.canonical();
                    found.entry(term.encoding()).or_insert(term);
                }
            }
        }
        memo.push(found.into_values().collect());
    }
    memo.swap_remove(n)
}
