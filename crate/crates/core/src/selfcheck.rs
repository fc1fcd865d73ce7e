//! Seeded property suites over random and exhaustively enumerated inputs.
//!
//! Each suite runs its cases in parallel, but every case draws from its own
//! RNG stream ([`sample::trial_rng`]) and results are collected by case
//! index, so a given [`RunConfig`] always yields the same report.

use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify;
use crate::conelab;
use crate::generators;
use crate::lattice;
use crate::lexvec::{self, LexVector};
use crate::matrix;
use crate::poset::Poset;
use crate::rational::{self, Rat};
use crate::sample::{self, stream};
use crate::tensor::{TensorRep, TensorSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    /// Scales every randomised suite; 500 gives the reference sizes.
    pub trials: usize,
    pub max_poset_size: usize,
    pub max_dim: usize,
    /// Suite names to run; empty runs all of them.
    pub suites: Vec<String>,
}

impl RunConfig {
    pub fn new(seed: u64, trials: usize) -> RunConfig {
        RunConfig {
            seed,
            trials,
            max_poset_size: 8,
            max_dim: 4,
            suites: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

type CaseResult = Result<usize, String>;

fn run_cases<F>(name: &str, cases: usize, case: F) -> SuiteReport
where
    F: Fn(usize) -> CaseResult + Sync + Send,
{
    // a panic inside the library is a failed case, not a crashed run
    let guarded = |i: usize| {
        panic::catch_unwind(AssertUnwindSafe(|| case(i))).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Err(format!("panicked: {msg}"))
        })
    };
    let results: Vec<CaseResult> = (0..cases).into_par_iter().map(guarded).collect();
    let checks = results.iter().map(|r| *r.as_ref().unwrap_or(&1)).sum();
    let failures = results.iter().filter(|r| r.is_err()).count();
    let first_failure = results
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.as_ref().err().map(|e| format!("case {i}: {e}")));
    SuiteReport {
        name: name.to_string(),
        cases,
        checks,
        failures,
        first_failure,
    }
}

fn merge(name: &str, parts: Vec<SuiteReport>) -> SuiteReport {
    SuiteReport {
        name: name.to_string(),
        cases: parts.iter().map(|p| p.cases).sum(),
        checks: parts.iter().map(|p| p.checks).sum(),
        failures: parts.iter().map(|p| p.failures).sum(),
        first_failure: parts.into_iter().find_map(|p| p.first_failure),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn random_arc_poset<R: Rng>(rng: &mut R, min: usize, max: usize) -> Arc<Poset> {
    let n = rng.random_range(min..=max);
    let density = [0.2, 0.4, 0.6, 0.9][rng.random_range(0..4)];
    Arc::new(sample::random_poset(rng, n, density))
}

/// Wedge and pointedness of `Lex(S)_+`.
pub fn cone_axioms(cfg: &RunConfig, cases: usize) -> SuiteReport {
    run_cases("cone_axioms", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::CONE_AXIOMS, i as u64);
        let p = random_arc_poset(&mut rng, 1, cfg.max_poset_size);
        let f = sample::mixed_positive(&mut rng, &p);
        let g = sample::mixed_positive(&mut rng, &p);
        let mut checks = 0;
        ensure(f.add(&g).map_err(err)?.is_positive(), || {
            format!("f+g not positive: {f} + {g}")
        })?;
        checks += 1;
        for lambda in [rational::zero(), rational::frac(1, 2), rational::int(3)] {
            ensure(f.scale(&lambda).is_positive(), || {
                format!("{lambda}·{f} not positive")
            })?;
            checks += 1;
        }
        let candidates = [
            f.clone(),
            g.clone(),
            f.sub(&g).map_err(err)?,
            sample::random_vector(&mut rng, &p, 0.5),
            f.sub(&f).map_err(err)?,
        ];
        for c in &candidates {
            if c.is_positive() && c.neg().is_positive() {
                ensure(c.is_zero(), || format!("±{c} both positive"))?;
            }
            checks += 1;
        }
        Ok(checks)
    })
}

/// Chains give the lexicographic cone, antichains the orthant.
pub fn specialisations(max_d: usize) -> SuiteReport {
    let mut parts = Vec::new();
    for d in 1..=max_d {
        let names = sample::labels(d);
        let chain = Arc::new(Poset::chain(&names).expect("chain"));
        let anti = Arc::new(Poset::antichain(&names).expect("antichain"));
        let patterns = 3usize.pow(d as u32);
        parts.push(run_cases("specialisations", patterns, |code| {
            let mut signs = Vec::with_capacity(d);
            let mut c = code;
            for _ in 0..d {
                signs.push(c as i64 % 3 - 1);
                c /= 3;
            }
            let mut checks = 0;
            for magnitudes in [vec![1; d], (1..=d as i64).rev().collect::<Vec<_>>()] {
                let coords: Vec<Rat> = signs
                    .iter()
                    .zip(&magnitudes)
                    .map(|(s, m)| rational::frac(s * m, if *s > 0 { 2 } else { 1 }))
                    .collect();
                let lex = coords
                    .iter()
                    .find(|x| !x.is_zero())
                    .is_none_or(Signed::is_positive);
                let orthant = coords.iter().all(|x| !x.is_negative());
                let on =
                    |p: &Arc<Poset>| LexVector::from_indexed(p, coords.iter().cloned().enumerate());
                ensure(on(&chain).is_positive() == lex, || {
                    format!("chain mismatch on {:?}", rational::format_vec(&coords))
                })?;
                ensure(on(&anti).is_positive() == orthant, || {
                    format!("antichain mismatch on {:?}", rational::format_vec(&coords))
                })?;
                checks += 2;
            }
            Ok(checks)
        }));
    }
    merge("specialisations", parts)
}

/// Dual cone is spanned by the minimal basis vectors.
pub fn dual_cone(cfg: &RunConfig, positives: usize, posets: usize) -> SuiteReport {
    let pairings = run_cases("dual_cone", positives, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::DUAL, i as u64);
        let p = random_arc_poset(&mut rng, 1, cfg.max_poset_size);
        let f = sample::mixed_positive(&mut rng, &p);
        let gens = lexvec::dual_generators(&p);
        let mut combo = LexVector::zero(&p);
        for g in &gens {
            ensure(f.pairing(g).map_err(err)? >= Rat::zero(), || {
                format!("⟨{f},{g}⟩ < 0")
            })?;
            let c = rational::int(rng.random_range(0..=3));
            combo = combo.add(&g.scale(&c)).map_err(err)?;
        }
        ensure(f.pairing(&combo).map_err(err)? >= Rat::zero(), || {
            format!("⟨{f},{combo}⟩ < 0")
        })?;
        Ok(gens.len() + 1)
    });
    let witnesses = run_cases("dual_cone", posets, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::DUAL, (1 << 32) + i as u64);
        let p = random_arc_poset(&mut rng, 2, cfg.max_poset_size);
        let mut checks = 0;
        for s in 0..p.len() {
            if p.is_minimal(s) {
                continue;
            }
            let mut g = LexVector::from_indexed(
                &p,
                (0..p.len()).map(|j| (j, rational::int(rng.random_range(0..=3)))),
            );
            if g.get(s).is_zero() {
                g = g.add_basis(s, &rational::int(rng.random_range(1..=3)));
            }
            let w = lexvec::dual_violation_witness(&p, p.label(s), &g).map_err(err)?;
            let pairing = w.f.pairing(&g).map_err(err)?;
            ensure(w.f.is_positive() && pairing.is_negative(), || {
                format!("witness {} fails against {g} at {}", w.f, p.label(s))
            })?;
            checks += 1;
        }
        Ok(checks)
    });
    merge("dual_cone", vec![pairings, witnesses])
}

/// Forest by definition agrees with the absence of a ∧ copy.
pub fn forest_lambda(max_n: usize) -> SuiteReport {
    let mut parts = Vec::new();
    for n in 0..=max_n {
        let all = sample::all_posets(n);
        parts.push(run_cases("forest_lambda", all.len(), |i| {
            let p = &all[i];
            let forest = p.is_forest();
            let witness = p.lambda_witness();
            ensure(forest == witness.is_none(), || {
                format!("disagreement on {:?}", p.covers())
            })?;
            if let Some((s, t, m)) = witness {
                ensure(p.lt(s, m) && p.lt(t, m) && !p.comparable(s, t), || {
                    "bad witness".into()
                })?;
            }
            let report = p.classify_forest();
            if forest {
                let members: usize = report.trees.iter().map(|t| t.members.len()).sum();
                ensure(members == p.len(), || "trees do not partition".into())?;
            }
            Ok(1)
        }));
    }
    merge("forest_lambda", parts)
}

fn upper_bounds<R: Rng>(
    rng: &mut R,
    f: &LexVector,
    sup: &LexVector,
    count: usize,
) -> Vec<LexVector> {
    let p = f.poset();
    let zero = LexVector::zero(p);
    let is_ub = |h: &LexVector| h.is_positive() && f.leq(h).unwrap_or(false);
    let mut out = Vec::with_capacity(count);
    // independent of `sup`: shift f or 0 by positives, or draw blindly
    for _ in 0..count * 4 {
        if out.len() >= count / 2 {
            break;
        }
        let h = match rng.random_range(0..3) {
            0 => f.add(&sample::mixed_positive(rng, p)).expect("same poset"),
            1 => zero
                .add(&sample::mixed_positive(rng, p))
                .expect("same poset"),
            _ => sample::random_vector(rng, p, 0.7),
        };
        if is_ub(&h) {
            out.push(h);
        }
    }
    while out.len() < count {
        out.push(
            sup.add(&sample::mixed_positive(rng, p))
                .expect("same poset"),
        );
    }
    out
}

/// `f ∨ 0` on forests is the least upper bound.
pub fn lattice_forest(cfg: &RunConfig, cases: usize, bounds: usize) -> SuiteReport {
    run_cases("lattice_forest", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::LATTICE_FOREST, i as u64);
        let n = rng.random_range(1..=cfg.max_poset_size);
        let p = Arc::new(sample::random_forest(&mut rng, n));
        let f = sample::random_vector(&mut rng, &p, 0.7);
        let g = lattice::sup_with_zero(&f).map_err(err)?;
        let zero = LexVector::zero(&p);
        ensure(
            f.leq(&g).map_err(err)? && zero.leq(&g).map_err(err)?,
            || format!("{g} is not an upper bound of {f} and 0"),
        )?;
        ensure(g.support().iter().all(|s| !f.get(*s).is_zero()), || {
            format!("supp({g}) ⊄ supp({f})")
        })?;
        let hs = upper_bounds(&mut rng, &f, &g, bounds);
        for h in &hs {
            ensure(g.leq(h).map_err(err)?, || {
                format!("{g} ≰ upper bound {h} of {f}")
            })?;
        }
        let h = sample::random_vector(&mut rng, &p, 0.5);
        let (s, m) = (
            lattice::sup(&f, &h).map_err(err)?,
            lattice::inf(&f, &h).map_err(err)?,
        );
        ensure(s.add(&m).map_err(err)? == f.add(&h).map_err(err)?, || {
            "sup + inf ≠ f + h".into()
        })?;
        let a = lattice::abs(&f).map_err(err)?;
        let split = lattice::sup_with_zero(&f)
            .map_err(err)?
            .add(&lattice::sup_with_zero(&f.neg()).map_err(err)?)
            .map_err(err)?;
        ensure(a == split && a.is_positive(), || format!("|{f}| = {a}"))?;
        Ok(hs.len() + 4)
    })
}

/// Non-forests: a certified strictly decreasing chain of upper bounds.
pub fn lattice_non_forest(cfg: &RunConfig, cases: usize, steps: usize) -> SuiteReport {
    run_cases("lattice_non_forest", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::LATTICE_NON_FOREST, i as u64);
        let n = rng.random_range(3..=cfg.max_poset_size.max(3));
        let p = Arc::new(sample::random_non_forest(&mut rng, n));
        let w = lattice::no_sup_witness(&p).map_err(err)?;
        let size = rng.random_range(0..=3);
        let start = w
            .start()
            .add(&generators::random_positive_with(&p, &mut rng, size))
            .map_err(err)?;
        let chain = w.chain(start, steps).map_err(err)?;
        ensure(chain.bounds.len() == steps + 1 && chain.verify(), || {
            "chain failed verification".into()
        })?;
        Ok(steps)
    })
}

/// Canonical generator decomposition of positive vectors.
pub fn generating_set(cfg: &RunConfig, cases: usize) -> SuiteReport {
    run_cases("generating_set", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::GENERATORS, i as u64);
        let p = random_arc_poset(&mut rng, 1, cfg.max_poset_size);
        let f = sample::mixed_positive(&mut rng, &p);
        let d = generators::decompose(&f).map_err(err)?;
        ensure(d.certifies(&f), || {
            format!("decomposition of {f} does not recombine")
        })?;
        for (_, g) in &d.terms {
            ensure(g.vector(&p).is_positive(), || {
                format!("generator {g:?} not positive")
            })?;
        }
        let mut rest = f.clone();
        let mut levels = 0;
        while let Some(s) = generators::pivot(&rest) {
            let (block, remainder) = generators::split_at(&rest, s);
            ensure(block.is_positive() && remainder.is_positive(), || {
                format!("split of {rest} at {} not positive", p.label(s))
            })?;
            rest = remainder;
            levels += 1;
        }
        Ok(d.terms.len() + levels + 1)
    })
}

/// Projective cone of two lexicographic cones equals `Lex(S × T)_+`.
pub fn tensor_cone(cfg: &RunConfig, cases: usize) -> SuiteReport {
    let max = cfg.max_poset_size.min(4);
    let decompositions = run_cases("tensor_cone", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::TENSOR, i as u64);
        let space = TensorSpace::new(
            random_arc_poset(&mut rng, 1, max),
            random_arc_poset(&mut rng, 1, max),
        );
        let u = sample::mixed_positive(&mut rng, &space.product);
        let rep = space.kp_decompose(&u).map_err(err)?;
        ensure(rep.all_positive(), || {
            format!("nonpositive factor in decomposition of {u}")
        })?;
        ensure(space.flatten(&rep).map_err(err)? == u, || {
            format!("decomposition of {u} does not flatten back")
        })?;
        Ok(rep.pairs.len() + 1)
    });
    let forward = run_cases("tensor_cone", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::TENSOR, (1 << 32) + i as u64);
        let space = TensorSpace::new(
            random_arc_poset(&mut rng, 1, max),
            random_arc_poset(&mut rng, 1, max),
        );
        let k = rng.random_range(1..=4);
        let rep = TensorRep {
            pairs: (0..k)
                .map(|_| {
                    (
                        sample::mixed_positive(&mut rng, &space.left),
                        sample::mixed_positive(&mut rng, &space.right),
                    )
                })
                .collect(),
        };
        let u = space.flatten(&rep).map_err(err)?;
        ensure(space.kp_member(&u).map_err(err)?, || {
            format!("flattened positive rep {u} not a member")
        })?;
        if !u.is_zero() {
            ensure(!space.kp_member(&u.neg()).map_err(err)?, || {
                format!("±{u} both members")
            })?;
        }
        Ok(2)
    });
    merge("tensor_cone", vec![decompositions, forward])
}

/// Projective cone of two pointed rational cones is pointed.
pub fn projective_pointed(cfg: &RunConfig, pairs: usize, span_vectors: usize) -> SuiteReport {
    run_cases("projective_pointed", pairs, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::PROJECTIVE_POINTED, i as u64);
        let d1 = rng.random_range(1..=cfg.max_dim);
        let d2 = rng.random_range(1..=cfg.max_dim);
        let x = sample::random_pointed_cone(&mut rng, d1, 5);
        let y = sample::random_pointed_cone(&mut rng, d2, 5);
        let seed: u64 = rng.random();
        let r = conelab::kp_pointedness_check(&x, &y, span_vectors, seed).map_err(err)?;
        ensure(r.embedding_certified, || {
            format!(
                "embedding route failed for {:?} ⊗ {:?}",
                x.to_spec(),
                y.to_spec()
            )
        })?;
        ensure(r.lp_passed, || {
            format!(
                "LP route found ±u for {:?} ⊗ {:?}",
                x.to_spec(),
                y.to_spec()
            )
        })?;
        Ok(r.trials + r.embedding_checked)
    })
}

/// Pointed cones embed into the lexicographic cone.
pub fn lex_maximal(cfg: &RunConfig, cases: usize) -> SuiteReport {
    run_cases("lex_maximal", cases, |i| {
        let mut rng = sample::trial_rng(cfg.seed, stream::LEX_MAXIMAL, i as u64);
        let d = rng.random_range(1..=cfg.max_dim);
        let c = sample::random_pointed_cone(&mut rng, d, 5);
        let x = c.dual_vector().map_err(err)?;
        ensure(
            !matrix::is_zero_vec(&x)
                && c.generators()
                    .iter()
                    .all(|g| !matrix::dot(g, &x).is_negative()),
            || {
                format!(
                    "bad supporting functional {:?} for {:?}",
                    rational::format_vec(&x),
                    c.to_spec()
                )
            },
        )?;
        let a = c.lex_embed().map_err(err)?;
        ensure(a.certifies(&c), || {
            format!(
                "embedding {:?} fails for {:?}",
                a.matrix.to_strings(),
                c.to_spec()
            )
        })?;
        // points of the cone map to lex-positive vectors or zero
        let mut v = vec![Rat::zero(); d];
        for g in c.generators() {
            let w = rational::int(rng.random_range(0..=2));
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += &w * gi;
            }
        }
        let image = a.apply(&v).map_err(err)?;
        ensure(
            matrix::is_zero_vec(&image) || matrix::is_lex_positive(&image),
            || {
                format!(
                    "cone point {:?} maps to {:?}",
                    rational::format_vec(&v),
                    rational::format_vec(&image)
                )
            },
        )?;
        ensure(c.cone_member(&v).map_err(err)?, || {
            format!("{:?} not recognised as a member", rational::format_vec(&v))
        })?;
        Ok(c.generators().len() + 3)
    })
}

fn shuffled(forest: &Poset, rng: &mut impl Rng) -> Poset {
    let n = forest.len();
    let mut names = sample::labels(n);
    names.shuffle(rng);
    let covers: Vec<(String, String)> = forest
        .covers()
        .into_iter()
        .map(|(a, b)| {
            let (i, j) = (
                forest.index_of(&a).expect("own label"),
                forest.index_of(&b).expect("own label"),
            );
            (names[i].clone(), names[j].clone())
        })
        .collect();
    Poset::from_covers(&names, &covers).expect("relabelled forest")
}

fn classify_case(forest: &Poset, rng: &mut impl Rng) -> CaseResult {
    let term = classify::forest_to_term(forest).map_err(err)?;
    let back = classify::term_to_forest(&term);
    let original = classify::canonical_form(forest).map_err(err)?;
    ensure(
        classify::canonical_form(&back).map_err(err)? == original,
        || format!("round trip changed {:?}", forest.covers()),
    )?;
    ensure(
        term.dimension() == forest.len() && term.is_canonical(),
        || "term shape".into(),
    )?;
    let relabelled = shuffled(forest, rng);
    ensure(
        classify::canonical_form(&relabelled).map_err(err)? == original,
        || "canonical form depends on labels".into(),
    )?;
    let p = Arc::new(back);
    ensure(lattice::is_lattice(&p), || "forest is not a lattice".into())?;
    let f = sample::random_vector(rng, &p, 0.7);
    lattice::sup_with_zero(&f).map_err(err)?;
    Ok(4)
}

/// Forest ↔ lexicographic-union term round trips.
pub fn classification(cfg: &RunConfig, exhaustive_max: usize, random: usize) -> SuiteReport {
    let mut parts = Vec::new();
    for n in 0..=exhaustive_max {
        let terms = classify::all_terms(n);
        parts.push(run_cases("classification", terms.len(), |i| {
            let mut rng =
                sample::trial_rng(cfg.seed, stream::CLASSIFY, ((n as u64) << 32) + i as u64);
            let forest = classify::term_to_forest(&terms[i]);
            ensure(
                classify::forest_to_term(&forest).map_err(err)? == terms[i],
                || format!("term {} does not survive a round trip", terms[i].encoding()),
            )?;
            classify_case(&forest, &mut rng)
        }));
    }
    parts.push(run_cases("classification", random, |i| {
        let mut rng = sample::trial_rng(
            cfg.seed,
            stream::CLASSIFY,
            (u64::from(u32::MAX) << 32) + i as u64,
        );
        let n = rng.random_range(1..=cfg.max_poset_size);
        let forest = sample::random_forest(&mut rng, n);
        classify_case(&forest, &mut rng)
    }));
    merge("classification", parts)
}

pub const SUITES: [&str; 11] = [
    "cone_axioms",
    "specialisations",
    "dual_cone",
    "forest_lambda",
    "lattice_forest",
    "lattice_non_forest",
    "generating_set",
    "tensor_cone",
    "projective_pointed",
    "lex_maximal",
    "classification",
];

/// Every selected suite, sized from `cfg.trials`. Unknown suite names are
/// rejected so a typo cannot produce an empty, passing report.
pub fn run(cfg: &RunConfig) -> crate::Result<Report> {
    if let Some(bad) = cfg.suites.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(crate::Error::NotApplicable(format!(
            "unknown suite {bad:?}"
        )));
    }
    let k = cfg.trials;
    let wanted = |name: &str| cfg.suites.is_empty() || cfg.suites.iter().any(|s| s == name);
    let mut suites = Vec::new();
    for name in SUITES.into_iter().filter(|n| wanted(n)) {
        suites.push(match name {
            "cone_axioms" => cone_axioms(cfg, 2 * k),
            "specialisations" => specialisations(5),
            "dual_cone" => dual_cone(cfg, k, k / 5),
            "forest_lambda" => forest_lambda(5),
            "lattice_forest" => lattice_forest(cfg, k, 100),
            "lattice_non_forest" => lattice_non_forest(cfg, k / 5, 50),
            "generating_set" => generating_set(cfg, 2 * k),
            "tensor_cone" => tensor_cone(cfg, k),
            "projective_pointed" => projective_pointed(cfg, (k / 10).max(1), 100),
            "lex_maximal" => lex_maximal(cfg, k / 5),
            _ => classification(cfg, 6, 2 * k / 5),
        });
    }
    let passed = suites.iter().all(SuiteReport::passed);
    Ok(Report {
        seed: cfg.seed,
        trials: k,
        suites,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = RunConfig::new(7, 20);
        let a = run(&cfg).unwrap();
        assert!(a.passed, "{a:#?}");
        assert_eq!(a, run(&cfg).unwrap());
        assert_eq!(a.suites.len(), SUITES.len());
    }

    #[test]
    fn suite_selection() {
        let mut cfg = RunConfig::new(1, 10);
        cfg.suites = vec!["lex_maximal".into(), "cone_axioms".into()];
        let r = run(&cfg).unwrap();
        let names: Vec<&str> = r.suites.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["cone_axioms", "lex_maximal"]);
        cfg.suites = vec!["nope".into()];
        assert!(run(&cfg).is_err());
    }
}
