//! Random and exhaustive generation of posets, vectors and cones.
//!
//! Every random routine takes an explicit RNG. [`trial_rng`] derives an
//! independent ChaCha stream per `(seed, suite, trial)` so that trials can
//! run in any order, or in parallel, and still reproduce exactly.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conelab::FinCone;
use crate::generators;
use crate::lexvec::LexVector;
use crate::poset::Poset;
use crate::rational::{self, Rat};

/// Stream identifiers, one per consumer of [`trial_rng`].
pub mod stream {
    pub const CONE_AXIOMS: u64 = 1;
    pub const DUAL: u64 = 3;
    pub const LATTICE_FOREST: u64 = 5;
    pub const LATTICE_NON_FOREST: u64 = 6;
    pub const GENERATORS: u64 = 7;
    pub const TENSOR: u64 = 8;
    pub const PROJECTIVE_POINTED: u64 = 9;
    pub const LEX_MAXIMAL: u64 = 10;
    pub const CLASSIFY: u64 = 11;
    pub const KP_SPAN: u64 = 100;
}

pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((stream << 40) ^ trial);
    rng
}

/// `a`, `b`, ... for small posets, `e26`, `e27`, ... beyond.
pub fn label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(label).collect()
}

/// Random order: covers follow a random permutation, each present with
/// probability `density`.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let names = labels(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut covers = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(density) {
                covers.push((names[perm[a]].clone(), names[perm[b]].clone()));
            }
        }
    }
    Poset::from_covers(&names, &covers).expect("acyclic by construction")
}

/// Each node, in random order, either starts a new tree or hangs below an
/// earlier node.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Poset {
    let names = labels(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut covers = Vec::new();
    for k in 1..n {
        if rng.random_bool(0.7) {
            let parent = perm[rng.random_range(0..k)];
            covers.push((names[parent].clone(), names[perm[k]].clone()));
        }
    }
    Poset::from_covers(&names, &covers).expect("forest covers are acyclic")
}

/// A poset on `n ≥ 3` elements that contains a copy of ∧.
pub fn random_non_forest<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Poset {
    assert!(n >= 3, "a non-forest needs three elements");
    for _ in 0..64 {
        let p = random_poset(rng, n, 0.5);
        if !p.is_forest() {
            return p;
        }
    }
    let names = labels(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let (s, t, m) = (&names[perm[0]], &names[perm[1]], &names[perm[2]]);
    Poset::from_covers(&names, &[(s.clone(), m.clone()), (t.clone(), m.clone())]).expect("∧")
}

/// Small rationals: integers in `[-3, 3]` and halves/thirds of them.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    rational::frac(rng.random_range(-3..=3), rng.random_range(1..=3))
}

/// Each coordinate nonzero with probability `density`.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, poset: &Arc<Poset>, density: f64) -> LexVector {
    let mut entries: Vec<(usize, Rat)> = Vec::new();
    for i in 0..poset.len() {
        if rng.random_bool(density) {
            entries.push((i, random_rational(rng)));
        }
    }
    LexVector::from_indexed(poset, entries)
}

/// Random vectors until one is positive (at most `attempts` draws).
pub fn rejection_positive<R: Rng + ?Sized>(
    rng: &mut R,
    poset: &Arc<Poset>,
    attempts: usize,
) -> Option<LexVector> {
    (0..attempts)
        .map(|_| random_vector(rng, poset, 0.6))
        .find(|f| f.is_positive() && !f.is_zero())
}

/// Half generator-built, half rejection-sampled (falling back to the
/// generator construction when rejection keeps failing).
pub fn mixed_positive<R: Rng + ?Sized>(rng: &mut R, poset: &Arc<Poset>) -> LexVector {
    if rng.random_bool(0.5) {
        if let Some(f) = rejection_positive(rng, poset, 200) {
            return f;
        }
    }
    let size = rng.random_range(1..=6);
    generators::random_positive_with(poset, rng, size)
}

/// A pointed cone in `Q^d` with `1..=max_gens` integer generators.
pub fn random_pointed_cone<R: Rng + ?Sized>(rng: &mut R, d: usize, max_gens: usize) -> FinCone {
    let k = rng.random_range(1..=max_gens);
    let draw = |rng: &mut R| -> Vec<i64> {
        loop {
            let v: Vec<i64> = (0..d).map(|_| rng.random_range(-3..=3)).collect();
            if v.iter().any(|&x| x != 0) {
                return v;
            }
        }
    };
    for _ in 0..200 {
        let gens: Vec<Vec<i64>> = (0..k).map(|_| draw(rng)).collect();
        let refs: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
        let cone = FinCone::from_ints(d, &refs).expect("nonzero generators");
        if cone.is_pointed() {
            return cone;
        }
    }
    // Orient random vectors along a random functional.
    let phi = draw(rng);
    let mut gens = Vec::new();
    while gens.len() < k {
        let g = draw(rng);
        let s: i64 = g.iter().zip(&phi).map(|(a, b)| a * b).sum();
        match s.signum() {
            1 => gens.push(g),
            -1 => gens.push(g.iter().map(|x| -x).collect()),
            _ => {}
        }
    }
    let refs: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
    FinCone::from_ints(d, &refs).expect("nonzero generators")
}

/// Every strict partial order on the labels `a, b, ...` (labelled, not up to
/// isomorphism). Counts: 1, 1, 3, 19, 219, 4231 for `n = 0..=5`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let names = labels(n);
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    let mut rel = vec![vec![false; n]; n];
    for mut code in 0..total {
        for row in rel.iter_mut() {
            row.fill(false);
        }
        for &(a, b) in &pairs {
            match code % 3 {
                1 => rel[a][b] = true,
                2 => rel[b][a] = true,
                _ => {}
            }
            code /= 3;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !rel[a][b] || (0..n).all(|c| !rel[b][c] || rel[a][c])));
        if !transitive {
            continue;
        }
        let covers: Vec<(String, String)> = pairs
            .iter()
            .flat_map(|&(a, b)| [(a, b), (b, a)])
            .filter(|&(a, b)| rel[a][b])
            .map(|(a, b)| (names[a].clone(), names[b].clone()))
            .collect();
        out.push(Poset::from_covers(&names, &covers).expect("transitive irreflexive relation"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_poset_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 19, 219]);
    }

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = trial_rng(0, 0, 0);
        for n in 0..8 {
            assert!(random_forest(&mut rng, n).is_forest());
            assert_eq!(random_poset(&mut rng, n, 0.4).len(), n);
        }
        for n in 3..8 {
            assert!(!random_non_forest(&mut rng, n).is_forest());
        }
        for d in 1..=4 {
            assert!(random_pointed_cone(&mut rng, d, 5).is_pointed());
        }
        let p = Arc::new(random_poset(&mut rng, 5, 0.5));
        for _ in 0..20 {
            assert!(mixed_positive(&mut rng, &p).is_positive());
        }
    }

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a: u64 = trial_rng(42, 1, 0).random();
        let b: u64 = trial_rng(42, 1, 1).random();
        let c: u64 = trial_rng(42, 2, 0).random();
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, trial_rng(42, 1, 0).random::<u64>());
    }
}
