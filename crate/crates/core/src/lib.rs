//! Exact-arithmetic classification of Seifert fibrations of closed
//! orientable 3-manifolds that are realizable by Besse Reeb flows.
//!
//! The crate provides:
//! - [`seifert`]: Seifert invariants with validation, Euler numbers,
//!   normal forms and fiber-preserving equivalence;
//! - [`orbifold`]: the base 2-orbifold of a fibration, its orbifold Euler
//!   characteristic, developability and geometry type;
//! - [`classify`]: the realizability decision, prime period spectra and
//!   the classification of Besse contact 3-manifolds up to strict
//!   contactomorphism;
//! - [`cohomology`]: the cyclic graded rings `Z[u]/<m u^d>`, the
//!   cup-product condition, manifold criteria and bundle-class counts;
//! - [`generators`]: weighted Hopf fibrations, ellipsoid boundaries and
//!   trivial fibrations as ready-made Seifert data;
//! - [`sampling`] and [`selftest`]: randomized cross-checks of the
//!   independent decision routes.
//!
//! All arithmetic is exact; there is no floating point in this crate.

pub mod classify;
pub mod cohomology;
pub mod error;
pub mod generators;
pub mod orbifold;
pub mod rational;
pub mod sampling;
pub mod seifert;
pub mod selftest;

pub use classify::{
    classify, fibration_spectrum, finitely_covered_by_trivial, is_besse_realizable,
    prime_period_spectrum, ClassificationResult, FibrationSummary, PeriodSpectrum, Side, Verdict,
    Witness,
};
pub use cohomology::{BundleClassCount, CyclicGradedRing, EulerClassCoeff, GroupDescriptor};
pub use error::{Error, Result};
pub use generators::{
    ellipsoid_boundary, trivial_fibration, weighted_hopf, EllipsoidBoundary, HopfWeights,
    WeightedHopfFibration,
};
pub use orbifold::{GeometryType, TwoOrbifold};
pub use rational::Rational;
pub use seifert::{ElementaryMove, SeifertInvariants, SeifertPair};
pub use selftest::{CheckOutcome, SelfTestReport};
