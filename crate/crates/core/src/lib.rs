//! Algebraic shifting of simplicial complexes over prime fields.
//!
//! The crate computes the algebraically shifted complex `Δ(K)` through the
//! exterior face ring, reduced and relative simplicial homology, and the
//! subspace and face-set bookkeeping that compares the relative homology of
//! a pair `(K, L)` with that of `(Δ(K), Δ(L))`. The [`verify`] module runs
//! all of those computations on one pair and cross-checks them.

pub mod betti;
pub mod complex;
pub mod error;
pub mod exterior;
pub mod face;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod nearcone;
pub mod shifting;
pub mod subspace;
pub mod verify;

pub use betti::BettiTable;
pub use complex::{ComplexKind, ComplexPair, FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use field::PrimeField;
pub use shifting::{shift_pair, shift_seeded, ShiftConfig, ShiftResult};
