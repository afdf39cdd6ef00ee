//! Grey wolf optimizer: alpha/beta/delta hierarchy with encircling moves
//! and a control parameter decaying linearly from `a_start` to zero.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::problem::Problem;
use crate::swarm::{eval_checked, Swarm};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GwoParams {
    pub a_start: f64,
}

impl Default for GwoParams {
    fn default() -> Self {
        Self { a_start: 2.0 }
    }
}

impl GwoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.a_start > 0.0) {
            return Err(crate::error::Error::InvalidConfig(format!(
                "a_start must be > 0, got {}",
                self.a_start
            )));
        }
        Ok(())
    }
}

/// Historical best three wolves. Ties broken by arrival order: an equal
/// fitness does not displace an incumbent.
pub struct GwoState {
    params: GwoParams,
    leaders: [(f64, Vec<f64>); 3], // (fitness, position) for alpha, beta, delta
}

impl GwoState {
    pub fn new(swarm: &Swarm, params: GwoParams) -> Self {
        let mut order: Vec<usize> = (0..swarm.len()).collect();
        order.sort_by(|&a, &b| {
            swarm.fitness[a]
                .partial_cmp(&swarm.fitness[b])
                .unwrap()
                .then(a.cmp(&b))
        });
        let pick = |rank: usize| {
            let i = order[rank.min(order.len() - 1)];
            (swarm.fitness[i], swarm.positions[i].clone())
        };
        Self {
            params,
            leaders: [pick(0), pick(1), pick(2)],
        }
    }

    fn offer(&mut self, fit: f64, pos: &[f64]) {
        if fit < self.leaders[0].0 {
            self.leaders.swap(1, 2);
            self.leaders.swap(0, 1);
            self.leaders[0] = (fit, pos.to_vec());
        } else if fit < self.leaders[1].0 {
            self.leaders.swap(1, 2);
            self.leaders[1] = (fit, pos.to_vec());
        } else if fit < self.leaders[2].0 {
            self.leaders[2] = (fit, pos.to_vec());
        }
    }

    pub fn step(
        &mut self,
        swarm: &mut Swarm,
        problem: &Problem,
        t: usize,
        t_max: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<()> {
        let a = self.params.a_start * (1.0 - t as f64 / t_max as f64);
        let dim = problem.dim();
        for i in 0..swarm.len() {
            let mut cand = vec![0.0; dim];
            for d in 0..dim {
                let mut sum = 0.0;
                for leader in &self.leaders {
                    let r1: f64 = rng.random();
                    let r2: f64 = rng.random();
                    let a_coef = 2.0 * a * r1 - a;
                    let c_coef = 2.0 * r2;
                    let dist = (c_coef * leader.1[d] - swarm.positions[i][d]).abs();
                    sum += leader.1[d] - a_coef * dist;
                }
                cand[d] = sum / 3.0;
            }
            problem.space().clamp_in_place(&mut cand);
            let fit = eval_checked(problem, &cand, rng, Some(t), i)?;
            swarm.positions[i] = cand;
            swarm.fitness[i] = fit;
            self.offer(fit, &swarm.positions[i]);
        }
        // The pack leader is the historical alpha.
        swarm.leader_fit = self.leaders[0].0;
        swarm.leader_pos.clone_from(&self.leaders[0].1);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::SearchSpace;
    use rand::SeedableRng;
    use std::sync::Arc;

    fn sphere(dim: usize) -> Problem {
        Problem::new(
            "sphere",
            SearchSpace::symmetric(100.0, dim).unwrap(),
            Arc::new(|x: &[f64], _: &mut dyn rand::RngCore| x.iter().map(|v| v * v).sum()),
        )
    }

    #[test]
    fn collapsed_pack_stays_put() {
        let problem = sphere(3);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let point = vec![2.0, -1.0, 0.5];
        let fit: f64 = point.iter().map(|v| v * v).sum();
        let mut swarm = Swarm {
            positions: vec![point.clone(); 5],
            fitness: vec![fit; 5],
            leader_pos: point.clone(),
            leader_fit: fit,
        };
        let mut state = GwoState::new(&swarm, GwoParams::default());
        // a = 0 at the last iteration: encircling distances vanish and every
        // candidate is the mean of the three coincident leaders.
        state
            .step(&mut swarm, &problem, 10, 10, &mut rng)
            .unwrap();
        for pos in &swarm.positions {
            for (got, want) in pos.iter().zip(&point) {
                assert!((got - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn alpha_is_monotone() {
        let problem = sphere(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut swarm = crate::swarm::init_population(&problem, 10, &mut rng).unwrap();
        let mut state = GwoState::new(&swarm, GwoParams::default());
        let mut prev = swarm.leader_fit;
        for t in 0..50 {
            state.step(&mut swarm, &problem, t, 50, &mut rng).unwrap();
            assert!(swarm.leader_fit <= prev);
            prev = swarm.leader_fit;
        }
    }
}
