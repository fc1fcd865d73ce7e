//! Exact lexicographic cones over finite posets.
//!
//! A finite poset `S` determines an ordered vector space `Lex(S)`: rational
//! functions on `S`, where `f` is positive when every negative coordinate has
//! a strictly smaller coordinate carrying a positive value. This crate
//! implements that cone and the constructions built on it:
//!
//! * [`poset`]: finite posets, forests and trees, products, linear extensions.
//! * [`lexvec`]: vectors in `Lex(S)`, cone membership, pairing, dual cone.
//! * [`lattice`]: suprema on forests and certified descent chains on non-forests.
//! * [`generators`]: the canonical generating set and positive decompositions.
//! * [`tensor`]: the projective cone of `Lex(S) ⊗ Lex(T)` as `Lex(S × T)`.
//! * [`conelab`]: general finitely generated rational cones, separating
//!   functionals and embeddings into the lexicographic cone.
//! * [`classify`]: finite forests as nested lexicographic-union terms.
//!
//! All arithmetic is exact ([`Rat`] is an arbitrary precision rational).

pub mod classify;
pub mod conelab;
mod error;
pub mod generators;
pub mod lattice;
pub mod lexvec;
pub mod lp;
pub mod matrix;
pub mod poset;
pub mod rational;
pub mod sample;
pub mod selfcheck;
pub mod tensor;

pub use classify::{LexRoot, LexSum};
pub use conelab::{FinCone, KpReport, LexEmbedding};
pub use error::{Error, Result};
pub use generators::{Decomposition, Generator};
pub use lattice::{DescentChain, NoSupWitness};
pub use lexvec::LexVector;
pub use matrix::RatMatrix;
pub use poset::{ForestReport, Poset, Tree};
pub use rational::Rat;
pub use tensor::{TensorRep, TensorSpace};
