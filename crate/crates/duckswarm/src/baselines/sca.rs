//! Sine cosine algorithm: coordinates oscillate toward or around the best
//! position found so far, with amplitude `r1` decaying linearly to zero.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::problem::Problem;
use crate::swarm::{eval_checked, Swarm};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaParams {
    pub a: f64,
}

impl Default for ScaParams {
    fn default() -> Self {
        Self { a: 2.0 }
    }
}

impl ScaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0) {
            return Err(crate::error::Error::InvalidConfig(format!(
                "a must be > 0, got {}",
                self.a
            )));
        }
        Ok(())
    }

    /// Amplitude schedule `r1 = a - t * a / t_max`.
    pub fn amplitude(&self, t: usize, t_max: usize) -> f64 {
        self.a - t as f64 * self.a / t_max as f64
    }
}

pub struct ScaState {
    params: ScaParams,
}

impl ScaState {
    pub fn new(params: ScaParams) -> Self {
        Self { params }
    }

    pub fn step(
        &mut self,
        swarm: &mut Swarm,
        problem: &Problem,
        t: usize,
        t_max: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<()> {
        let r1 = self.params.amplitude(t, t_max);
        let dim = problem.dim();
        for i in 0..swarm.len() {
            for d in 0..dim {
                let r2 = 2.0 * std::f64::consts::PI * rng.random::<f64>();
                let r3 = 2.0 * rng.random::<f64>();
                let r4: f64 = rng.random();
                let pull = (r3 * swarm.leader_pos[d] - swarm.positions[i][d]).abs();
                let wave = if r4 < 0.5 { r2.sin() } else { r2.cos() };
                swarm.positions[i][d] += r1 * wave * pull;
            }
            let mut pos = std::mem::take(&mut swarm.positions[i]);
            problem.space().clamp_in_place(&mut pos);
            let fit = eval_checked(problem, &pos, rng, Some(t), i)?;
            swarm.positions[i] = pos;
            swarm.fitness[i] = fit;
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
    fn amplitude_hits_zero_at_the_end() {
        let params = ScaParams::default();
        assert_eq!(params.amplitude(0, 200), 2.0);
        assert_eq!(params.amplitude(200, 200), 0.0);
        // With r1 = 0 the position update degenerates to the identity.
        let problem = sphere(3);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut swarm = init_population(&problem, 5, &mut rng).unwrap();
        let before = swarm.positions.clone();
        let mut state = ScaState::new(params);
        state
            .step(&mut swarm, &problem, 200, 200, &mut rng)
            .unwrap();
        assert_eq!(swarm.positions, before);
    }

    #[test]
    fn leader_is_monotone() {
        let problem = sphere(10);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut swarm = init_population(&problem, 12, &mut rng).unwrap();
        let mut state = ScaState::new(ScaParams::default());
        let mut prev = swarm.leader_fit;
        for t in 0..50 {
            state.step(&mut swarm, &problem, t, 50, &mut rng).unwrap();
            assert!(swarm.leader_fit <= prev);
            prev = swarm.leader_fit;
        }
    }
}
