//! Global-best particle swarm optimization with linearly decaying inertia
//! and velocity clamping.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::problem::Problem;
use crate::swarm::{eval_checked, Swarm};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub v_min: f64,
    pub v_max: f64,
    pub c1: f64,
    pub c2: f64,
    pub w_start: f64,
    pub w_end: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            v_min: -1.0,
            v_max: 1.0,
            c1: 2.0,
            c2: 2.0,
            w_start: 0.9,
            w_end: 0.2,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.v_min < self.v_max) {
            return Err(crate::error::Error::InvalidConfig(format!(
                "v_min {} must be < v_max {}",
                self.v_min, self.v_max
            )));
        }
        if self.w_start < self.w_end {
            return Err(crate::error::Error::InvalidConfig(format!(
                "w_start {} must be >= w_end {}",
                self.w_start, self.w_end
            )));
        }
        Ok(())
    }

    /// Inertia weight at iteration `t`.
    pub fn inertia(&self, t: usize, t_max: usize) -> f64 {
        self.w_start - (self.w_start - self.w_end) * t as f64 / t_max as f64
    }
}

/// Per-run PSO state: velocities and personal bests. Velocities start at
/// zero; personal bests start at the initial positions.
pub struct PsoState {
    params: PsoParams,
    velocities: Vec<Vec<f64>>,
    pbest_pos: Vec<Vec<f64>>,
    pbest_fit: Vec<f64>,
}

impl PsoState {
    pub fn new(swarm: &Swarm, params: PsoParams) -> Self {
        Self {
            params,
            velocities: vec![vec![0.0; swarm.leader_pos.len()]; swarm.len()],
            pbest_pos: swarm.positions.clone(),
            pbest_fit: swarm.fitness.clone(),
        }
    }

    pub fn velocities(&self) -> &[Vec<f64>] {
        &self.velocities
    }

    pub fn step(
        &mut self,
        swarm: &mut Swarm,
        problem: &Problem,
        t: usize,
        t_max: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<()> {
        let w = self.params.inertia(t, t_max);
        let dim = problem.dim();
        for i in 0..swarm.len() {
            for d in 0..dim {
                let r1: f64 = rng.random();
                let r2: f64 = rng.random();
                let v = w * self.velocities[i][d]
                    + self.params.c1 * r1 * (self.pbest_pos[i][d] - swarm.positions[i][d])
                    + self.params.c2 * r2 * (swarm.leader_pos[d] - swarm.positions[i][d]);
                self.velocities[i][d] = v.clamp(self.params.v_min, self.params.v_max);
                swarm.positions[i][d] += self.velocities[i][d];
            }
            let mut pos = std::mem::take(&mut swarm.positions[i]);
            problem.space().clamp_in_place(&mut pos);
            let fit = eval_checked(problem, &pos, rng, Some(t), i)?;
            swarm.positions[i] = pos;
            swarm.fitness[i] = fit;
            if fit < self.pbest_fit[i] {
                self.pbest_fit[i] = fit;
                self.pbest_pos[i].clone_from(&swarm.positions[i]);
            }
            swarm.update_leader(i);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::SearchSpace;
    use crate::swarm::init_population;
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
    fn zero_attraction_and_zero_velocity_keeps_swarm_static() {
        let problem = sphere(4);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut swarm = init_population(&problem, 6, &mut rng).unwrap();
        let before = swarm.positions.clone();
        let params = PsoParams {
            c1: 0.0,
            c2: 0.0,
            w_start: 1.0,
            w_end: 1.0,
            ..PsoParams::default()
        };
        let mut state = PsoState::new(&swarm, params);
        state.step(&mut swarm, &problem, 0, 10, &mut rng).unwrap();
        assert_eq!(swarm.positions, before);
    }

    #[test]
    fn velocities_respect_the_clamp() {
        let problem = sphere(3);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut swarm = init_population(&problem, 10, &mut rng).unwrap();
        let params = PsoParams::default();
        let mut state = PsoState::new(&swarm, params);
        for t in 0..20 {
            state.step(&mut swarm, &problem, t, 20, &mut rng).unwrap();
            for v in state.velocities() {
                assert!(v.iter().all(|&x| (params.v_min..=params.v_max).contains(&x)));
            }
        }
    }
}
