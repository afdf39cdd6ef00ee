//! Canonical baseline algorithms used for live statistical comparisons:
//! particle swarm optimization, grey wolf optimizer, and the sine cosine
//! algorithm.

pub mod gwo;
pub mod pso;
pub mod sca;

pub use gwo::GwoParams;
pub use pso::PsoParams;
pub use sca::ScaParams;
