//! Population state shared by all algorithms.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::problem::Problem;

/// N agent positions, their fitness values, and the historical best
/// (leader) found so far in the run.
#[derive(Debug, Clone)]
pub struct Swarm {
    pub positions: Vec<Vec<f64>>,
    pub fitness: Vec<f64>,
    pub leader_pos: Vec<f64>,
    pub leader_fit: f64,
}

impl Swarm {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Promotes agent `i` to leader if it improves the historical best.
    pub fn update_leader(&mut self, i: usize) {
        if self.fitness[i] < self.leader_fit {
            self.leader_fit = self.fitness[i];
            self.leader_pos.clone_from(&self.positions[i]);
        }
    }
}

/// Evaluates the objective and aborts the run on a non-finite result,
/// identifying where it happened. `iteration = None` marks the init sweep.
pub(crate) fn eval_checked(
    problem: &Problem,
    x: &[f64],
    rng: &mut ChaCha8Rng,
    iteration: Option<usize>,
    agent: usize,
) -> Result<f64> {
    let value = problem.evaluate(x, rng);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteObjective {
            iteration,
            agent,
            value,
        })
    }
}

/// Draws `n` agents uniformly inside the problem's box, evaluates all of
/// them, and sets the leader to the argmin.
pub fn init_population(problem: &Problem, n: usize, rng: &mut ChaCha8Rng) -> Result<Swarm> {
    if n == 0 {
        return Err(Error::InvalidConfig("population size must be >= 1".into()));
    }
    let space = problem.space();
    let dim = space.dim();
    let mut positions = Vec::with_capacity(n);
    for _ in 0..n {
        let mut pos = Vec::with_capacity(dim);
        for j in 0..dim {
            let u: f64 = rng.random();
            pos.push(space.lower()[j] + (space.upper()[j] - space.lower()[j]) * u);
        }
        positions.push(pos);
    }
    let mut fitness = Vec::with_capacity(n);
    for (i, pos) in positions.iter().enumerate() {
        fitness.push(eval_checked(problem, pos, rng, None, i)?);
    }
    let best = fitness
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    Ok(Swarm {
        leader_pos: positions[best].clone(),
        leader_fit: fitness[best],
        positions,
        fitness,
    })
}
