//! Finitely generated rational cones.
//!
//! Every pointed cone in `Q^d` sits inside a copy of the lexicographic cone
//! `Q^d_lex`: [`FinCone::lex_embed`] finds an invertible `A` with `A g`
//! lex-positive for every generator `g`, by taking a supporting functional
//! as the first row and recursing into its kernel. Applied to two cones at
//! once, `A_X ⊗ A_Y` maps their projective tensor cone into
//! `Lex(chain × chain)_+`, which is pointed; [`kp_pointedness_check`] runs
//! that certificate next to a direct LP search for `±u` in the tensor cone.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexvec::LexVector;
use crate::lp;
use crate::matrix::{self, RatMatrix};
use crate::poset::Poset;
use crate::rational::{self, Rat};
use crate::sample;
use crate::tensor::TensorSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCone {
    dim: usize,
    generators: Vec<Vec<Rat>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinConeSpec {
    pub dim: usize,
    pub generators: Vec<Vec<String>>,
}

/// Invertible `A` with `A g` lex-positive for every generator `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEmbedding {
    pub matrix: RatMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KpReport {
    pub seed: u64,
    pub trials: usize,
    /// Sampled `u` with both `u` and `-u` in the projective cone.
    pub lp_two_sided: usize,
    /// Of those, how many were nonzero. Must be zero.
    pub lp_violations: usize,
    pub lp_passed: bool,
    /// Rank-one generators checked under `A_X ⊗ A_Y`.
    pub embedding_checked: usize,
    pub embedding_certified: bool,
    pub passed: bool,
}

impl FinCone {
    pub fn new(dim: usize, generators: Vec<Vec<Rat>>) -> Result<FinCone> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
            if matrix::is_zero_vec(g) {
                return Err(Error::ZeroGenerator(i));
            }
        }
        Ok(FinCone { dim, generators })
    }

    pub fn from_ints(dim: usize, generators: &[&[i64]]) -> Result<FinCone> {
        let gens = generators
            .iter()
            .map(|g| g.iter().map(|&x| rational::int(x)).collect())
            .collect();
        FinCone::new(dim, gens)
    }

    pub fn from_spec(spec: &FinConeSpec) -> Result<FinCone> {
        let gens = spec
            .generators
            .iter()
            .map(|g| rational::parse_vec(g))
            .collect::<Result<_>>()?;
        FinCone::new(spec.dim, gens)
    }

    pub fn from_json(s: &str) -> Result<FinCone> {
        Self::from_spec(&serde_json::from_str(s)?)
    }

    pub fn to_spec(&self) -> FinConeSpec {
        FinConeSpec {
            dim: self.dim,
            generators: self
                .generators
                .iter()
                .map(|g| rational::format_vec(g))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn has_duplicates(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).any(|i| (i + 1..g.len()).any(|j| g[i] == g[j]))
    }

    fn check_dim(&self, v: &[Rat]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    fn generator_matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(&self.generators, self.dim).expect("generators have length dim")
    }

    /// Nonnegative coefficients `λ` with `Σ λ_i g_i = v`, if any exist.
    pub fn cone_coefficients(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        self.check_dim(v)?;
        Ok(lp::nonneg_solution(&self.generator_matrix(), v))
    }

    pub fn cone_member(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.cone_coefficients(v)?.is_some())
    }

    /// Pointed iff no convex combination of generators vanishes.
    pub fn is_pointed(&self) -> bool {
        let k = self.generators.len();
        let mut a = RatMatrix::zeros(self.dim + 1, k);
        for (j, g) in self.generators.iter().enumerate() {
            for (i, x) in g.iter().enumerate() {
                a[(i, j)] = x.clone();
            }
            a[(self.dim, j)] = Rat::one();
        }
        let mut b = vec![Rat::zero(); self.dim + 1];
        b[self.dim] = Rat::one();
        !lp::is_feasible(&a, &b)
    }

    /// Nonzero `x` with `⟨g, x⟩ ≥ 0` for every generator.
    ///
    /// Tries `⟨g, x⟩ ≥ 1` for all `g` first, which succeeds exactly for
    /// pointed cones; otherwise searches `⟨g, x⟩ ≥ 0` with `±x_j = 1` for
    /// each coordinate in turn.
    pub fn dual_vector(&self) -> Result<Vec<Rat>> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::NoHalfSpace);
        }
        if self.generators.is_empty() {
            let mut x = vec![Rat::zero(); d];
            x[0] = Rat::one();
            return Ok(x);
        }
        if let Some(x) = self.halfspace_lp(None) {
            return Ok(x);
        }
        for j in 0..d {
            for sign in [1, -1] {
                if let Some(x) = self.halfspace_lp(Some((j, sign))) {
                    return Ok(x);
                }
            }
        }
        Err(Error::NoHalfSpace)
    }

    /// Variables `x⁺, x⁻ ∈ Q^d`, slacks `s ∈ Q^k`:
    /// `G^T (x⁺ - x⁻) - s = 1` when `norm` is `None`, otherwise
    /// `G^T (x⁺ - x⁻) - s = 0` plus `sign * (x⁺_j - x⁻_j) = 1`.
    fn halfspace_lp(&self, norm: Option<(usize, i64)>) -> Option<Vec<Rat>> {
        let (d, k) = (self.dim, self.generators.len());
        let rows = k + usize::from(norm.is_some());
        let mut a = RatMatrix::zeros(rows, 2 * d + k);
        let mut b = vec![Rat::zero(); rows];
        for (i, g) in self.generators.iter().enumerate() {
            for (j, x) in g.iter().enumerate() {
                a[(i, j)] = x.clone();
                a[(i, d + j)] = -x.clone();
            }
            a[(i, 2 * d + i)] = -Rat::one();
            if norm.is_none() {
                b[i] = Rat::one();
            }
        }
        if let Some((j, sign)) = norm {
            a[(k, j)] = rational::int(sign);
            a[(k, d + j)] = rational::int(-sign);
            b[k] = Rat::one();
        }
        let sol = lp::nonneg_solution(&a, &b)?;
        Some((0..d).map(|j| &sol[j] - &sol[d + j]).collect())
    }

    /// Embedding into the lexicographic cone; requires a pointed cone.
    pub fn lex_embed(&self) -> Result<LexEmbedding> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let matrix = embed(self.dim, &self.generators)?;
        Ok(LexEmbedding { matrix })
    }
}

/// Rows: a supporting functional `x`, then the embedding of the generators
/// in `ker x`, pulled back along "drop the first coordinate where `x` is
/// nonzero" (an isomorphism from `ker x` onto `Q^(d-1)`).
fn embed(d: usize, gens: &[Vec<Rat>]) -> Result<RatMatrix> {
    if d == 0 {
        return Ok(RatMatrix::zeros(0, 0));
    }
    let cone = FinCone::new(d, gens.to_vec())?;
    let x = cone.dual_vector()?;
    let p = x
        .iter()
        .position(|c| !c.is_zero())
        .expect("dual vector is nonzero");
    let drop_p = |v: &[Rat]| -> Vec<Rat> {
        v.iter()
            .enumerate()
            .filter(|&(j, _)| j != p)
            .map(|(_, c)| c.clone())
            .collect()
    };
    let kernel: Vec<Vec<Rat>> = gens
        .iter()
        .filter(|g| matrix::dot(g, &x).is_zero())
        .map(|g| drop_p(g))
        .collect();
    let inner = embed(d - 1, &kernel)?;
    let mut a = RatMatrix::zeros(d, d);
    for (j, c) in x.iter().enumerate() {
        a[(0, j)] = c.clone();
    }
    for r in 0..d - 1 {
        for (jj, c) in inner.row(r).iter().enumerate() {
            let j = if jj < p { jj } else { jj + 1 };
            a[(r + 1, j)] = c.clone();
        }
    }
    Ok(a)
}

impl LexEmbedding {
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.matrix.mul_vec(v)
    }

    /// `det A ≠ 0` and `A g` lex-positive for every generator.
    pub fn certifies(&self, cone: &FinCone) -> bool {
        self.matrix.rows() == cone.dim()
            && self.matrix.cols() == cone.dim()
            && !self.matrix.determinant().is_zero()
            && cone.generators().iter().all(|g| {
                self.apply(g)
                    .map(|v| matrix::is_lex_positive(&v))
                    .unwrap_or(false)
            })
    }
}

/// `vec(g hᵀ)` for all generator pairs, row-major, `g` outer.
pub fn rank_one_generators(x: &FinCone, y: &FinCone) -> Vec<Vec<Rat>> {
    x.generators()
        .iter()
        .flat_map(|g| y.generators().iter().map(move |h| matrix::outer(g, h)))
        .collect()
}

/// The projective cone of `X` and `Y` as a finitely generated cone in
/// `Q^(d_X d_Y)`.
pub fn kp_cone(x: &FinCone, y: &FinCone) -> FinCone {
    FinCone {
        dim: x.dim() * y.dim(),
        generators: rank_one_generators(x, y),
    }
}

/// `u` (a `d_X × d_Y` matrix) is a nonnegative combination of `g hᵀ`.
pub fn kp_member_general(x: &FinCone, y: &FinCone, u: &RatMatrix) -> Result<bool> {
    if u.rows() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: u.rows(),
        });
    }
    if u.cols() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: y.dim(),
            found: u.cols(),
        });
    }
    let cone = kp_cone(x, y);
    if cone.generators.is_empty() {
        return Ok(matrix::is_zero_vec(u.as_slice()));
    }
    cone.cone_member(u.as_slice())
}

fn chain_poset(prefix: &str, d: usize) -> Arc<Poset> {
    let labels: Vec<String> = (0..d).map(|i| format!("{prefix}{i}")).collect();
    Arc::new(Poset::chain(&labels).expect("fresh labels"))
}

/// Image of every `g ⊗ h` under `A_X ⊗ A_Y` is positive in
/// `Lex(chain_{d_X} × chain_{d_Y})`. Returns how many were checked, or
/// `None` if any failed.
pub fn embedding_certificate(x: &FinCone, y: &FinCone) -> Result<Option<usize>> {
    let ax = x.lex_embed()?;
    let ay = y.lex_embed()?;
    let space = TensorSpace::new(chain_poset("x", x.dim()), chain_poset("y", y.dim()));
    let mut checked = 0;
    for g in x.generators() {
        let gx = LexVector::from_indexed(&space.left, ax.apply(g)?.into_iter().enumerate());
        for h in y.generators() {
            let hy = LexVector::from_indexed(&space.right, ay.apply(h)?.into_iter().enumerate());
            if !space.kp_member(&space.elementary_tensor(&gx, &hy)?)? {
                return Ok(None);
            }
            checked += 1;
        }
    }
    Ok(Some(checked))
}

/// Checks that the projective cone of two pointed cones is pointed, by the
/// lexicographic embedding and by LP on random vectors of its span.
pub fn kp_pointedness_check(
    x: &FinCone,
    y: &FinCone,
    trials: usize,
    seed: u64,
) -> Result<KpReport> {
    if !x.is_pointed() || !y.is_pointed() {
        return Err(Error::NotPointed);
    }
    let embedding = embedding_certificate(x, y)?;
    let cone = kp_cone(x, y);
    let outcomes: Vec<(bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample::trial_rng(seed, sample::stream::KP_SPAN, i as u64);
            let u = random_span_vector(&cone, &mut rng);
            let both = cone.cone_member(&u).expect("dimension")
                && cone.cone_member(&matrix::neg_vec(&u)).expect("dimension");
            (both, both && !matrix::is_zero_vec(&u))
        })
        .collect();
    let lp_two_sided = outcomes.iter().filter(|o| o.0).count();
    let lp_violations = outcomes.iter().filter(|o| o.1).count();
    let embedding_certified = embedding.is_some();
    Ok(KpReport {
        seed,
        trials,
        lp_two_sided,
        lp_violations,
        lp_passed: lp_violations == 0,
        embedding_checked: embedding.unwrap_or(0),
        embedding_certified,
        passed: lp_violations == 0 && embedding_certified,
    })
}

/// `Σ c_i g_i` with small integer `c_i` of mixed sign; occasionally zero.
pub fn random_span_vector<R: Rng + ?Sized>(cone: &FinCone, rng: &mut R) -> Vec<Rat> {
    let mut u = vec![Rat::zero(); cone.dim()];
    for g in cone.generators() {
        let c = rational::int(rng.random_range(-2..=2));
        if c.is_zero() {
            continue;
        }
        for (ui, gi) in u.iter_mut().zip(g) {
            *ui += &c * gi;
        }
    }
    u
}
