//! Duck swarm iteration body: a dispersal (exploration) sweep followed by a
//! greedy, leader-attracted foraging (exploitation) sweep.
//!
//! Random draw order is fixed so seeded runs are reproducible:
//! 1. one uniform for the step-size factor `mu`,
//! 2. per agent in index order, the exploration draws (branch uniform, then
//!    either the sign uniform or two coefficients plus a neighbor index),
//! 3. the exploration evaluations in index order,
//! 4. per agent in index order, the exploitation draws (two coefficients
//!    plus two distinct indices, only on the cooperative branch) followed
//!    immediately by that agent's evaluation; exploitation is sequential,
//!    so later agents see earlier agents' accepted moves and the current
//!    leader.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::problem::Problem;
use crate::swarm::{eval_checked, Swarm};

/// Tunables of the duck swarm update rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DsaParams {
    /// Probability of the dispersal branch in the exploration sweep.
    pub p_switch: f64,
    /// Coefficient divisor; cooperation/competition weights are drawn
    /// uniformly from `(0, 1/fp)`.
    pub fp: f64,
}

impl Default for DsaParams {
    fn default() -> Self {
        Self {
            p_switch: 0.5,
            fp: 0.618,
        }
    }
}

impl DsaParams {
    pub fn validate(&self) -> crate::error::Result<()> {
        if !(0.0..=1.0).contains(&self.p_switch) {
            return Err(crate::error::Error::InvalidConfig(format!(
                "p_switch must be in [0,1], got {}",
                self.p_switch
            )));
        }
        if !(self.fp > 0.0) {
            return Err(crate::error::Error::InvalidConfig(format!(
                "fp must be > 0, got {}",
                self.fp
            )));
        }
        Ok(())
    }
}

/// Step-size factor for iteration `t` of `t_max`: a random modulation in
/// (0, 2) times a linear decay that reaches exactly zero at `t = t_max`.
pub fn mu_schedule(t: usize, t_max: usize, rng: &mut ChaCha8Rng) -> f64 {
    mu_from_draw(t, t_max, rng.random())
}

pub(crate) fn mu_from_draw(t: usize, t_max: usize, u: f64) -> f64 {
    let k = (2.0 * u).sin() + 1.0;
    k * (1.0 - t as f64 / t_max as f64)
}

/// One cooperation/competition weight: uniform on `(0, 1/fp)`. Drawn fresh
/// for every use.
pub fn sample_coefficient(fp: f64, rng: &mut ChaCha8Rng) -> f64 {
    coefficient_from_draw(fp, rng.random())
}

pub(crate) fn coefficient_from_draw(fp: f64, u: f64) -> f64 {
    u / fp
}

/// Uniform index in `0..n` excluding `exclude`.
fn draw_index_excluding(n: usize, exclude: usize, rng: &mut ChaCha8Rng) -> usize {
    debug_assert!(n >= 2);
    loop {
        let j = rng.random_range(0..n);
        if j != exclude {
            return j;
        }
    }
}

/// Dispersal sweep. Every agent moves unconditionally: either a scaled
/// reflection of its own position or an attraction toward the leader mixed
/// with a random flockmate. Candidates are formed for all agents first,
/// then clamped, evaluated, and assigned in index order; the leader is
/// refreshed immediately after each improving evaluation.
pub fn exploration_step(
    swarm: &mut Swarm,
    problem: &Problem,
    mu: f64,
    params: &DsaParams,
    iteration: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let n = swarm.len();
    let dim = problem.dim();
    let mut candidates = Vec::with_capacity(n);
    for i in 0..n {
        let branch: f64 = rng.random();
        let xi = &swarm.positions[i];
        let cand = if params.p_switch > branch {
            let r: f64 = rng.random();
            let s = if r - 0.5 < 0.0 { -1.0 } else { 1.0 };
            xi.iter().map(|x| x + mu * x * s).collect::<Vec<f64>>()
        } else {
            let cf1 = sample_coefficient(params.fp, rng);
            let cf2 = sample_coefficient(params.fp, rng);
            let j = draw_index_excluding(n, i, rng);
            debug_assert_ne!(j, i);
            let xj = &swarm.positions[j];
            (0..dim)
                .map(|d| xi[d] + cf1 * (swarm.leader_pos[d] - xi[d]) + cf2 * (xj[d] - xi[d]))
                .collect()
        };
        candidates.push(cand);
    }
    for (i, mut cand) in candidates.into_iter().enumerate() {
        problem.space().clamp_in_place(&mut cand);
        let fit = eval_checked(problem, &cand, rng, Some(iteration), i)?;
        swarm.positions[i] = cand;
        swarm.fitness[i] = fit;
        swarm.update_leader(i);
    }
    Ok(())
}

/// Foraging sweep. Agents strictly worse than the leader step toward it by
/// `mu`; agents matching the leader take a cooperative step driven by two
/// flockmates. A candidate is adopted only if it strictly improves the
/// agent's own fitness; the leader is refreshed after every agent, and
/// each agent's candidate is built from the swarm as already updated by
/// the agents before it.
pub fn exploitation_step(
    swarm: &mut Swarm,
    problem: &Problem,
    mu: f64,
    params: &DsaParams,
    iteration: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let n = swarm.len();
    let dim = problem.dim();
    for i in 0..n {
        let xi = &swarm.positions[i];
        let mut cand: Vec<f64> = if swarm.fitness[i] > swarm.leader_fit {
            (0..dim).map(|d| xi[d] + mu * (swarm.leader_pos[d] - xi[d])).collect()
        } else {
            let kf1 = sample_coefficient(params.fp, rng);
            let kf2 = sample_coefficient(params.fp, rng);
            let k = rng.random_range(0..n);
            let j = draw_index_excluding(n, k, rng);
            let (xk, xj) = (&swarm.positions[k], &swarm.positions[j]);
            (0..dim)
                .map(|d| xi[d] + kf1 * (swarm.leader_pos[d] - xi[d]) + kf2 * (xk[d] - xj[d]))
                .collect()
        };
        problem.space().clamp_in_place(&mut cand);
        let fit = eval_checked(problem, &cand, rng, Some(iteration), i)?;
        if fit < swarm.fitness[i] {
            swarm.positions[i] = cand;
            swarm.fitness[i] = fit;
        }
        swarm.update_leader(i);
    }
    Ok(())
}

/// One full iteration: compute `mu` once, explore, then exploit.
pub fn dsa_iteration(
    swarm: &mut Swarm,
    problem: &Problem,
    t: usize,
    t_max: usize,
    params: &DsaParams,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let mu = mu_schedule(t, t_max, rng);
    exploration_step(swarm, problem, mu, params, t, rng)?;
    exploitation_step(swarm, problem, mu, params, t, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Problem;
    use crate::space::SearchSpace;
    use crate::swarm::init_population;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    fn sphere(dim: usize, half: f64) -> Problem {
        Problem::new(
            "sphere",
            SearchSpace::symmetric(half, dim).unwrap(),
            Arc::new(|x: &[f64], _: &mut dyn rand::RngCore| x.iter().map(|v| v * v).sum()),
        )
    }

    #[test]
    fn mu_vanishes_at_final_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..32 {
            assert_eq!(mu_schedule(200, 200, &mut rng), 0.0);
        }
    }

    #[test]
    fn mu_direct_evaluation() {
        // K = sin(0.5) + 1 at u = 0.25.
        let k = (0.5f64).sin() + 1.0;
        assert_relative_eq!(mu_from_draw(0, 200, 0.25), k, max_relative = 1e-12);
        assert_relative_eq!(mu_from_draw(100, 200, 0.25), k / 2.0, max_relative = 1e-12);
        assert_relative_eq!(mu_from_draw(0, 200, 0.25), 1.479425538604203, epsilon = 1e-12);
        assert_relative_eq!(mu_from_draw(100, 200, 0.25), 0.7397127693021015, epsilon = 1e-12);
    }

    #[test]
    fn coefficient_direct_evaluation() {
        assert_relative_eq!(coefficient_from_draw(0.618, 0.618), 1.0, epsilon = 1e-12);
        assert_relative_eq!(
            coefficient_from_draw(0.618, 0.999),
            1.6165048543689321,
            epsilon = 1e-12
        );
        assert!(coefficient_from_draw(0.618, 1e-300) > 0.0);
    }

    #[test]
    fn coefficients_stay_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let c = sample_coefficient(0.618, &mut rng);
            assert!((0.0..1.0 / 0.618).contains(&c), "coefficient {c} out of range");
        }
    }

    #[test]
    fn neighbor_draw_excludes_self() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            assert_eq!(draw_index_excluding(2, 0, &mut rng), 1);
        }
    }

    #[test]
    fn degenerate_swarm_is_fixed_point_of_attraction() {
        // All agents sit on the leader: both difference terms vanish, so the
        // cooperative branches reproduce the leader exactly.
        let problem = sphere(3, 10.0);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let point = vec![1.5, -2.0, 0.5];
        let fit = problem.evaluate(&point, &mut rng);
        let mut swarm = Swarm {
            positions: vec![point.clone(); 4],
            fitness: vec![fit; 4],
            leader_pos: point.clone(),
            leader_fit: fit,
        };
        let params = DsaParams {
            p_switch: 0.0, // force the cooperative exploration branch
            fp: 0.618,
        };
        exploration_step(&mut swarm, &problem, 1.0, &params, 0, &mut rng).unwrap();
        for pos in &swarm.positions {
            assert_eq!(pos, &point);
        }
        exploitation_step(&mut swarm, &problem, 1.0, &params, 0, &mut rng).unwrap();
        for pos in &swarm.positions {
            assert_eq!(pos, &point);
        }
        assert_eq!(swarm.leader_fit, fit);
    }

    #[test]
    fn exploitation_full_step_lands_on_leader() {
        let problem = sphere(2, 10.0);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let leader = vec![0.0, 0.0];
        let mut swarm = Swarm {
            positions: vec![leader.clone(), vec![3.0, 4.0], vec![-2.0, 1.0]],
            fitness: vec![0.0, 25.0, 5.0],
            leader_pos: leader.clone(),
            leader_fit: 0.0,
        };
        // mu = 1 sends every strictly-worse agent exactly onto the leader.
        exploitation_step(&mut swarm, &problem, 1.0, &DsaParams::default(), 0, &mut rng).unwrap();
        assert_eq!(swarm.positions[1], leader);
        assert_eq!(swarm.positions[2], leader);
        assert_eq!(swarm.fitness[1], 0.0);
    }

    #[test]
    fn exploitation_rejects_worse_candidates() {
        // Agents share the leader fitness, so the cooperative branch fires;
        // the competition term perturbs them, but any worse candidate must
        // be rejected, leaving stored fitness non-increasing.
        let problem = sphere(2, 10.0);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut swarm = Swarm {
            positions: vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0]],
            fitness: vec![1.0, 1.0, 1.0],
            leader_pos: vec![1.0, 0.0],
            leader_fit: 1.0,
        };
        for _ in 0..20 {
            let before = swarm.fitness.clone();
            exploitation_step(&mut swarm, &problem, 0.5, &DsaParams::default(), 0, &mut rng)
                .unwrap();
            for (b, a) in before.iter().zip(&swarm.fitness) {
                assert!(a <= b);
            }
        }
    }

    #[test]
    fn iteration_costs_two_evaluations_per_agent() {
        let counter = Arc::new(AtomicUsize::new(0));
        let c = counter.clone();
        let problem = Problem::new(
            "counted sphere",
            SearchSpace::symmetric(10.0, 1).unwrap(),
            Arc::new(move |x: &[f64], _: &mut dyn rand::RngCore| {
                c.fetch_add(1, Ordering::Relaxed);
                x[0] * x[0]
            }),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut swarm = init_population(&problem, 3, &mut rng).unwrap();
        assert_eq!(counter.load(Ordering::Relaxed), 3);
        dsa_iteration(&mut swarm, &problem, 0, 1, &DsaParams::default(), &mut rng).unwrap();
        assert_eq!(counter.load(Ordering::Relaxed), 3 + 6);
    }

    #[test]
    fn p_switch_one_saturates_first_branch() {
        // With p_switch = 1 every exploration candidate is X * (1 +/- mu);
        // from a positive orthant swarm and mu = 0 the positions are fixed.
        let problem = sphere(2, 10.0);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut swarm = init_population(&problem, 5, &mut rng).unwrap();
        let before = swarm.positions.clone();
        let params = DsaParams {
            p_switch: 1.0,
            fp: 0.618,
        };
        exploration_step(&mut swarm, &problem, 0.0, &params, 0, &mut rng).unwrap();
        assert_eq!(swarm.positions, before);
    }
}
