//! Objective evaluation contracts.

use std::sync::Arc;

use rand::RngCore;

use crate::space::SearchSpace;

/// Objective function. Minimization convention throughout; maximization
/// problems are negated by the caller. The random stream argument exists
/// for benchmark definitions that include a noise term (Quartic); purely
/// deterministic objectives ignore it.
pub type ObjectiveFn = Arc<dyn Fn(&[f64], &mut dyn RngCore) -> f64 + Send + Sync>;

/// Inequality constraint `g(x) <= 0`.
pub type ConstraintFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A minimization problem over a box-bounded search space.
#[derive(Clone)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    objective: ObjectiveFn,
    constraints: Vec<ConstraintFn>,
    known_optimum: Option<f64>,
    stochastic: bool,
}

impl Problem {
    pub fn new(name: impl Into<String>, space: SearchSpace, objective: ObjectiveFn) -> Self {
        Self {
            name: name.into(),
            space,
            objective,
            constraints: Vec::new(),
            known_optimum: None,
            stochastic: false,
        }
    }

    pub fn with_known_optimum(mut self, f_min: f64) -> Self {
        self.known_optimum = Some(f_min);
        self
    }

    pub fn with_constraints(mut self, constraints: Vec<ConstraintFn>) -> Self {
        self.constraints = constraints;
        self
    }

    /// Marks the objective as inherently noisy, so callers know repeated
    /// evaluations at one point may differ.
    pub fn stochastic(mut self) -> Self {
        self.stochastic = true;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn known_optimum(&self) -> Option<f64> {
        self.known_optimum
    }

    pub fn is_stochastic(&self) -> bool {
        self.stochastic
    }

    pub fn evaluate(&self, x: &[f64], rng: &mut dyn RngCore) -> f64 {
        (self.objective)(x, rng)
    }

    pub fn constraints(&self) -> &[ConstraintFn] {
        &self.constraints
    }

    pub fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        self.constraints.iter().map(|g| g(x)).collect()
    }
}

impl std::fmt::Debug for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("constraints", &self.constraints.len())
            .field("known_optimum", &self.known_optimum)
            .field("stochastic", &self.stochastic)
            .finish()
    }
}
