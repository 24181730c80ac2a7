//! Exact probabilities of positivity under a change of basis.
//!
//! Given two bases `A`, `B` of a finite-dimensional space with
//! `A_j = B_j + Σ_{i<j} a_i^{(j)} B_i` and all `a_i^{(j)} ≥ 0`, the fraction
//! (by slice volume) of `B`-positive elements that are also `A`-positive is
//! `Π_j (Σ_i a_i^{(j)})⁻¹`. This crate assembles the transition matrices for
//! the classical symmetric and quasisymmetric function bases, evaluates the
//! product exactly, and checks it two independent ways.
//!
//! ```
//! use posprob::{probability_of, BasisPair};
//!
//! let r = probability_of(BasisPair::SchurInMonomial, 3).unwrap();
//! assert_eq!(r.fraction(), "1/9");
//! ```

pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod probability;
pub mod tableaux;
pub mod transition;
pub mod wire;

pub use combinatorics::{compositions_of, partitions_of, Composition, Partition};
pub use error::{Error, Result, TriangularityViolation};
pub use exec::Execution;
pub use geometry::{
    membership, monte_carlo, monte_carlo_with, volume_ratio_by_determinant, MonteCarloReport,
    SliceGeometry,
};
pub use probability::{
    decay_table, decay_table_with, fm_closed_form, probability, probability_of,
    schur_monomial_upper_bound, Budget, DecayRow, ProbabilityResult,
};
pub use transition::{BasisPair, Label, Provenance, TransitionMatrix};
