//! Finite posets stored as a full strict-order matrix.
//!
//! Elements keep their construction order (product posets rely on the
//! row-major layout), while every tie-break and every listing uses the
//! lexicographic order of labels.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Separator used for labels of product posets, `"s|t"`.
pub const PRODUCT_SEPARATOR: char = '|';

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    // lt[i][j] <=> labels[i] < labels[j]; always transitively closed.
    lt: Vec<Vec<bool>>,
    // position of each element in label order
    rank: Vec<usize>,
}

/// On-disk form: elements plus Hasse cover pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tree {
    pub root: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestReport {
    pub is_forest: bool,
    /// `(s, t, m)` with `s < m`, `t < m` and `s`, `t` incomparable.
    pub witness: Option<(String, String, String)>,
    /// Tree decomposition; empty unless `is_forest`.
    pub trees: Vec<Tree>,
}

fn check_label(l: &str) -> Result<()> {
    if l.is_empty() || l.contains(PRODUCT_SEPARATOR) {
        return Err(Error::InvalidLabel(l.to_string()));
    }
    Ok(())
}

impl Poset {
    /// Builds a poset from its elements and a generating relation (usually
    /// the Hasse covers). The stored order is the transitive closure.
    pub fn from_covers<L: AsRef<str>>(elements: &[L], covers: &[(L, L)]) -> Result<Poset> {
        for l in elements {
            check_label(l.as_ref())?;
        }
        let labels: Vec<String> = elements.iter().map(|l| l.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        let mut rel = vec![vec![false; n]; n];
        for (a, b) in covers {
            let i = lookup(&index, a.as_ref())?;
            let j = lookup(&index, b.as_ref())?;
            rel[i][j] = true;
        }
        Self::from_relation(labels, index, rel)
    }

    pub fn from_spec(spec: &PosetSpec) -> Result<Poset> {
        Self::from_covers(&spec.elements, &spec.covers)
    }

    pub fn from_json(s: &str) -> Result<Poset> {
        let spec: PosetSpec = serde_json::from_str(s)?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> PosetSpec {
        PosetSpec {
            elements: self.labels.clone(),
            covers: self.covers(),
        }
    }

    /// Closes `rel` transitively; fails if the closure is not irreflexive.
    fn from_relation(
        labels: Vec<String>,
        index: BTreeMap<String, usize>,
        mut rel: Vec<Vec<bool>>,
    ) -> Result<Poset> {
        let n = labels.len();
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| rel[i][i]) {
            return Err(Error::Cycle(labels[i].clone()));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        Ok(Poset {
            labels,
            index,
            lt: rel,
            rank,
        })
    }

    pub fn chain<L: AsRef<str>>(labels: &[L]) -> Result<Poset> {
        let covers: Vec<(&str, &str)> = labels
            .windows(2)
            .map(|w| (w[0].as_ref(), w[1].as_ref()))
            .collect();
        let elems: Vec<&str> = labels.iter().map(|l| l.as_ref()).collect();
        Self::from_covers(&elems, &covers)
    }

    pub fn antichain<L: AsRef<str>>(labels: &[L]) -> Result<Poset> {
        Self::from_covers(labels, &[])
    }

    pub fn empty() -> Poset {
        Poset::from_covers::<&str>(&[], &[]).expect("empty poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        lookup(&self.index, label)
    }

    /// Strict order on element indices.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i][j]
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    pub fn lt_labels(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.lt(self.index_of(a)?, self.index_of(b)?))
    }

    /// Position of element `i` in label order; used for all tie-breaking.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Sorts element indices into label order.
    pub fn sort_canonical(&self, idx: &mut [usize]) {
        idx.sort_by_key(|&i| self.rank[i]);
    }

    fn names(&self, mut idx: Vec<usize>) -> Vec<String> {
        self.sort_canonical(&mut idx);
        idx.into_iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&t| self.lt[t][i])
    }

    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&t| self.lt[i][t])
    }

    /// `{t : t < s}`
    pub fn down_set(&self, s: &str) -> Result<Vec<String>> {
        let i = self.index_of(s)?;
        Ok(self.names(self.below(i).collect()))
    }

    /// `{t : t ≥ s}`
    pub fn up_set(&self, s: &str) -> Result<Vec<String>> {
        let i = self.index_of(s)?;
        Ok(self.names((0..self.len()).filter(|&t| self.le(i, t)).collect()))
    }

    /// Complement of [`Poset::up_set`].
    pub fn up_set_complement(&self, s: &str) -> Result<Vec<String>> {
        let i = self.index_of(s)?;
        Ok(self.names((0..self.len()).filter(|&t| !self.le(i, t)).collect()))
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.below(i).next().is_none()
    }

    pub fn minimal_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).filter(|&i| self.is_minimal(i)).collect();
        self.sort_canonical(&mut v);
        v
    }

    pub fn minimal_elements(&self) -> Vec<String> {
        self.names(self.minimal_indices())
    }

    /// Forest test by definition: every strict down-set is a chain.
    pub fn is_forest(&self) -> bool {
        (0..self.len()).all(|m| {
            let below: Vec<usize> = self.below(m).collect();
            below
                .iter()
                .enumerate()
                .all(|(k, &a)| below[k + 1..].iter().all(|&b| self.comparable(a, b)))
        })
    }

    /// Searches all triples for a copy of the ∧ poset: `s < m`, `t < m`,
    /// `s` and `t` incomparable. The canonically least triple is returned,
    /// ordered by `m`, then `s`, then `t`, with `s` before `t` in label order.
    pub fn lambda_witness(&self) -> Option<(usize, usize, usize)> {
        let mut by_label: Vec<usize> = (0..self.len()).collect();
        self.sort_canonical(&mut by_label);
        for &m in &by_label {
            for &s in &by_label {
                for &t in &by_label {
                    if self.rank[s] < self.rank[t]
                        && self.lt(s, m)
                        && self.lt(t, m)
                        && !self.comparable(s, t)
                    {
                        return Some((s, t, m));
                    }
                }
            }
        }
        None
    }

    /// Components under "has a common lower bound", each with its unique
    /// minimal element. `None` when the poset is not a forest.
    pub fn tree_indices(&self) -> Option<Vec<(usize, Vec<usize>)>> {
        if !self.is_forest() {
            return None;
        }
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..n {
            for b in a + 1..n {
                if (0..n).any(|u| self.le(u, a) && self.le(u, b)) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut trees: Vec<(usize, Vec<usize>)> = groups
            .into_values()
            .map(|mut members| {
                self.sort_canonical(&mut members);
                let root = *members
                    .iter()
                    .find(|&&i| self.is_minimal(i))
                    .expect("finite tree has a root");
                (root, members)
            })
            .collect();
        trees.sort_by_key(|(r, _)| self.rank[*r]);
        Some(trees)
    }

    pub fn classify_forest(&self) -> ForestReport {
        let is_forest = self.is_forest();
        let witness = self.lambda_witness().map(|(s, t, m)| {
            (
                self.labels[s].clone(),
                self.labels[t].clone(),
                self.labels[m].clone(),
            )
        });
        let trees = self
            .tree_indices()
            .unwrap_or_default()
            .into_iter()
            .map(|(root, members)| Tree {
                root: self.labels[root].clone(),
                members: members
                    .into_iter()
                    .map(|i| self.labels[i].clone())
                    .collect(),
            })
            .collect();
        ForestReport {
            is_forest,
            witness,
            trees,
        }
    }

    /// Fails with [`Error::NotAForest`] carrying a ∧ witness.
    pub fn require_forest(&self) -> Result<()> {
        match self.lambda_witness() {
            None => Ok(()),
            Some((s, t, m)) => Err(Error::NotAForest {
                s: self.labels[s].clone(),
                t: self.labels[t].clone(),
                m: self.labels[m].clone(),
            }),
        }
    }

    /// Product order: `(s1,t1) < (s2,t2)` iff `s1 ≤ s2`, `t1 ≤ t2` and the
    /// pairs differ. Element `(i, j)` sits at index `i * other.len() + j`
    /// with label `"s|t"`.
    pub fn product(&self, other: &Poset) -> Poset {
        let (n, m) = (self.len(), other.len());
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}{PRODUCT_SEPARATOR}{b}"));
            }
        }
        let index = build_index(&labels).expect("product labels are distinct");
        let mut rel = vec![vec![false; n * m]; n * m];
        for i1 in 0..n {
            for j1 in 0..m {
                for i2 in 0..n {
                    for j2 in 0..m {
                        let strict = (i1, j1) != (i2, j2);
                        rel[i1 * m + j1][i2 * m + j2] =
                            strict && self.le(i1, i2) && other.le(j1, j2);
                    }
                }
            }
        }
        Poset::from_relation(labels, index, rel).expect("product of posets is a poset")
    }

    /// Induced subposet on the given element indices (kept in that order).
    pub fn induced(&self, idx: &[usize]) -> Poset {
        let labels: Vec<String> = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let index = build_index(&labels).expect("distinct indices");
        let rel = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.lt(i, j)).collect())
            .collect();
        Poset::from_relation(labels, index, rel).expect("subposet of a poset")
    }

    /// Disjoint union; labels of the two parts must not collide.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset> {
        let n = self.len();
        let labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        let index = build_index(&labels)?;
        let total = labels.len();
        let mut rel = vec![vec![false; total]; total];
        for i in 0..total {
            for j in 0..total {
                rel[i][j] = match (i < n, j < n) {
                    (true, true) => self.lt(i, j),
                    (false, false) => other.lt(i - n, j - n),
                    _ => false,
                };
            }
        }
        Poset::from_relation(labels, index, rel)
    }

    /// Topological sort, always taking the least available label next.
    pub fn linear_extension(&self) -> Vec<String> {
        self.linear_extension_indices()
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect()
    }

    pub fn linear_extension_indices(&self) -> Vec<usize> {
        let n = self.len();
        let mut indegree: Vec<usize> = (0..n).map(|i| self.below(i).count()).collect();
        let mut ready: BTreeSet<(usize, usize)> = (0..n)
            .filter(|&i| indegree[i] == 0)
            .map(|i| (self.rank[i], i))
            .collect();
        let mut out = Vec::with_capacity(n);
        while let Some(&(r, i)) = ready.iter().next() {
            ready.remove(&(r, i));
            out.push(i);
            for j in self.above(i) {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.insert((self.rank[j], j));
                }
            }
        }
        out
    }

    /// Chain on the same labels ordered by [`Poset::linear_extension`].
    pub fn extension_chain(&self) -> Poset {
        let order = self.linear_extension_indices();
        let n = self.len();
        let mut pos = vec![0; n];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let rel = (0..n)
            .map(|i| (0..n).map(|j| pos[i] < pos[j]).collect())
            .collect();
        Poset::from_relation(self.labels.clone(), self.index.clone(), rel).expect("chain")
    }

    /// Hasse covers in canonical order.
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        self.sort_canonical(&mut order);
        for &i in &order {
            for &j in &order {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }
}

fn build_index(labels: &[String]) -> Result<BTreeMap<String, usize>> {
    let mut index = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &BTreeMap<String, usize>, label: &str) -> Result<usize> {
    index
        .get(label)
        .copied()
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}
