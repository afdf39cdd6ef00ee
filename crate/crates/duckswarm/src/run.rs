//! The generic seeded single-run driver shared by every algorithm.

use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baselines::gwo::GwoState;
use crate::baselines::pso::PsoState;
use crate::baselines::sca::ScaState;
use crate::baselines::{GwoParams, PsoParams, ScaParams};
use crate::dsa::{dsa_iteration, DsaParams};
use crate::error::{Error, Result};
use crate::metrics::diversity;
use crate::problem::Problem;
use crate::swarm::{init_population, Swarm};

/// Which iteration body to run, with its tunables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    Dsa(DsaParams),
    Pso(PsoParams),
    Gwo(GwoParams),
    Sca(ScaParams),
}

impl Algorithm {
    pub fn dsa() -> Self {
        Algorithm::Dsa(DsaParams::default())
    }

    pub fn pso() -> Self {
        Algorithm::Pso(PsoParams::default())
    }

    pub fn gwo() -> Self {
        Algorithm::Gwo(GwoParams::default())
    }

    pub fn sca() -> Self {
        Algorithm::Sca(ScaParams::default())
    }

    pub fn id(&self) -> &'static str {
        match self {
            Algorithm::Dsa(_) => "dsa",
            Algorithm::Pso(_) => "pso",
            Algorithm::Gwo(_) => "gwo",
            Algorithm::Sca(_) => "sca",
        }
    }

    pub fn all_default() -> Vec<Algorithm> {
        vec![Self::dsa(), Self::pso(), Self::gwo(), Self::sca()]
    }

    fn validate(&self) -> Result<()> {
        match self {
            Algorithm::Dsa(p) => p.validate(),
            Algorithm::Pso(p) => p.validate(),
            Algorithm::Gwo(p) => p.validate(),
            Algorithm::Sca(p) => p.validate(),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dsa" => Ok(Self::dsa()),
            "pso" => Ok(Self::pso()),
            "gwo" => Ok(Self::gwo()),
            "sca" => Ok(Self::sca()),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// One run: algorithm, budget, and seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub n_agents: usize,
    pub max_iter: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, n_agents: usize, max_iter: usize, seed: u64) -> Self {
        Self {
            algorithm,
            n_agents,
            max_iter,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.algorithm.validate()?;
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be >= 1".into()));
        }
        // The duck swarm cooperative move samples two distinct flockmates.
        let min_agents = match self.algorithm {
            Algorithm::Dsa(_) => 3,
            _ => 1,
        };
        if self.n_agents < min_agents {
            return Err(Error::InvalidConfig(format!(
                "{} needs at least {} agents, got {}",
                self.algorithm.id(),
                min_agents,
                self.n_agents
            )));
        }
        Ok(())
    }
}

/// Everything a single run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub best_pos: Vec<f64>,
    pub best_fit: f64,
    /// Leader fitness after each iteration; monotone non-increasing.
    pub convergence: Vec<f64>,
    /// Mean distance of agents from the population centroid after each
    /// iteration.
    pub diversity: Vec<f64>,
    pub elapsed_seconds: f64,
    pub seed: u64,
}

enum Stepper {
    Dsa(DsaParams),
    Pso(PsoState),
    Gwo(GwoState),
    Sca(ScaState),
}

impl Stepper {
    fn new(algorithm: &Algorithm, swarm: &Swarm) -> Self {
        match algorithm {
            Algorithm::Dsa(p) => Stepper::Dsa(*p),
            Algorithm::Pso(p) => Stepper::Pso(PsoState::new(swarm, *p)),
            Algorithm::Gwo(p) => Stepper::Gwo(GwoState::new(swarm, *p)),
            Algorithm::Sca(p) => Stepper::Sca(ScaState::new(*p)),
        }
    }

    fn step(
        &mut self,
        swarm: &mut Swarm,
        problem: &Problem,
        t: usize,
        t_max: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<()> {
        match self {
            Stepper::Dsa(params) => dsa_iteration(swarm, problem, t, t_max, params, rng),
            Stepper::Pso(state) => state.step(swarm, problem, t, t_max, rng),
            Stepper::Gwo(state) => state.step(swarm, problem, t, t_max, rng),
            Stepper::Sca(state) => state.step(swarm, problem, t, t_max, rng),
        }
    }
}

/// Executes one seeded run: init, `max_iter` iterations, trace recording.
/// A single run is sequential; the leader update inside the agent loop
/// makes later agents see earlier improvements.
pub fn run(problem: &Problem, config: &RunConfig) -> Result<RunRecord> {
    config.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut swarm = init_population(problem, config.n_agents, &mut rng)?;
    let mut stepper = Stepper::new(&config.algorithm, &swarm);
    let mut convergence = Vec::with_capacity(config.max_iter);
    let mut diversity_trace = Vec::with_capacity(config.max_iter);
    for t in 0..config.max_iter {
        stepper.step(&mut swarm, problem, t, config.max_iter, &mut rng)?;
        convergence.push(swarm.leader_fit);
        diversity_trace.push(diversity(&swarm));
    }
    Ok(RunRecord {
        best_pos: swarm.leader_pos,
        best_fit: swarm.leader_fit,
        convergence,
        diversity: diversity_trace,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        seed: config.seed,
    })
}
