//! Derivative-free optimization over box-bounded continuous domains.
//!
//! The core algorithm models a flock alternating between a broad
//! exploration sweep and a leader-following exploitation sweep each
//! iteration, with a step-size schedule that decays to zero by the final
//! iteration. Three classic population baselines (particle swarm, grey
//! wolf, sine-cosine) share the same runner so results are directly
//! comparable.
//!
//! The crate also bundles an 18-function benchmark suite, six constrained
//! engineering design problems handled by a static quadratic penalty,
//! nonparametric comparison statistics (rank-sum and multi-sample rank
//! tests), and a CSV experiment harness exposed both as a library
//! ([`harness`]) and through the thin `dsa-harness` binary.
//!
//! Every run is fully determined by its seed: configure a [`run::RunConfig`],
//! call [`run::run`], and the returned trace is bit-for-bit reproducible.

pub mod baselines;
pub mod benchmarks;
pub mod constrained;
pub mod dsa;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod problem;
pub mod run;
pub mod space;
pub mod swarm;

pub use error::{Error, Result};
pub use problem::{ConstraintFn, ObjectiveFn, Problem};
pub use run::{run, Algorithm, RunConfig, RunRecord};
pub use space::SearchSpace;
