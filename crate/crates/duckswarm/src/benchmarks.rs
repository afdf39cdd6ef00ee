//! The eighteen classical benchmark objectives (F1-F18) with their ranges,
//! default dimensions, and known optima.

use std::f64::consts::{E, PI};
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::space::SearchSpace;

/// Identifier of one suite member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
}

use BenchmarkId::*;

impl BenchmarkId {
    pub fn all() -> [BenchmarkId; 18] {
        [
            F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18,
        ]
    }

    pub fn id(&self) -> &'static str {
        match self {
            F1 => "F1",
            F2 => "F2",
            F3 => "F3",
            F4 => "F4",
            F5 => "F5",
            F6 => "F6",
            F7 => "F7",
            F8 => "F8",
            F9 => "F9",
            F10 => "F10",
            F11 => "F11",
            F12 => "F12",
            F13 => "F13",
            F14 => "F14",
            F15 => "F15",
            F16 => "F16",
            F17 => "F17",
            F18 => "F18",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            F1 => "Sphere",
            F2 => "Schwefel 2.22",
            F3 => "Schwefel 1.2",
            F4 => "Schwefel 2.21",
            F5 => "Rosenbrock",
            F6 => "Cigar",
            F7 => "Quartic",
            F8 => "Schwefel 2.26",
            F9 => "Rastrigin",
            F10 => "Ackley",
            F11 => "Griewank",
            F12 => "Penalized 1",
            F13 => "Penalized 2",
            F14 => "Weierstrass",
            F15 => "Shekel's Foxholes",
            F16 => "Kowalik's",
            F17 => "Six-hump camel back",
            F18 => "Branin",
        }
    }

    /// Symmetric half-range of the search box.
    pub fn range(&self) -> f64 {
        match self {
            F1 | F3 | F4 | F6 => 100.0,
            F2 => 10.0,
            F5 => 30.0,
            F7 => 1.28,
            F8 => 500.0,
            F9 | F13 | F16 | F17 | F18 => 5.0,
            F10 => 32.0,
            F11 => 600.0,
            F12 => 50.0,
            F14 => 1.0,
            F15 => 65.0,
        }
    }

    pub fn default_dim(&self) -> usize {
        match self {
            F15 | F17 | F18 => 2,
            F16 => 4,
            _ => 30,
        }
    }

    /// True for the suite members whose dimension is fixed by definition.
    pub fn is_fixed_dim(&self) -> bool {
        matches!(self, F15 | F16 | F17 | F18)
    }

    /// Known optimum at dimension `dim`.
    pub fn f_min(&self, dim: usize) -> f64 {
        match self {
            F8 => -418.9829 * dim as f64,
            F15 => 1.0,
            F16 => 0.00030,
            F17 => -1.0316,
            F18 => 0.398,
            _ => 0.0,
        }
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        Self::all()
            .into_iter()
            .find(|b| b.id() == upper)
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut prefix = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn cigar(x: &[f64]) -> f64 {
    x[0] * x[0] + 1e6 * x[1..].iter().map(|v| v * v).sum::<f64>()
}

fn quartic_deterministic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

fn schwefel_2_26(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / d).sqrt()).exp() - (sum_cos / d).exp() + 20.0 + E
}

fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Boundary penalty term of the penalized functions.
fn u_penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

fn penalized_1(x: &[f64]) -> f64 {
    let d = x.len();
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let mut core = 10.0 * (PI * y(x[0])).sin().powi(2);
    for i in 0..d - 1 {
        core += (y(x[i]) - 1.0).powi(2) * (1.0 + 10.0 * (PI * y(x[i + 1])).sin().powi(2));
    }
    core += (y(x[d - 1]) - 1.0).powi(2);
    PI / d as f64 * core + x.iter().map(|&v| u_penalty(v, 10.0, 100.0, 4)).sum::<f64>()
}

fn penalized_2(x: &[f64]) -> f64 {
    let d = x.len();
    let mut core = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..d - 1 {
        core += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    core += (x[d - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[d - 1]).sin().powi(2));
    0.1 * core + x.iter().map(|&v| u_penalty(v, 5.0, 100.0, 4)).sum::<f64>()
}

// Weierstrass with a = 0.5, b = 3, k_max = 20.
fn weierstrass(x: &[f64]) -> f64 {
    const A: f64 = 0.5;
    const B: f64 = 3.0;
    const K_MAX: u32 = 20;
    let mut total = 0.0;
    for &v in x {
        for k in 0..=K_MAX {
            total += A.powi(k as i32) * (2.0 * PI * B.powi(k as i32) * (v + 0.5)).cos();
        }
    }
    let offset: f64 = (0..=K_MAX)
        .map(|k| A.powi(k as i32) * (2.0 * PI * B.powi(k as i32) * 0.5).cos())
        .sum();
    total - x.len() as f64 * offset
}

fn shekel_foxholes(x: &[f64]) -> f64 {
    const OFFSETS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut inv = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = OFFSETS[j % 5];
        let a2 = OFFSETS[j / 5];
        let term = (j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6);
        inv += 1.0 / term;
    }
    1.0 / inv
}

fn kowalik(x: &[f64]) -> f64 {
    const A: [f64; 11] = [
        0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
    ];
    const B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];
    A.iter()
        .zip(&B_INV)
        .map(|(&a, &b_inv)| {
            let b = 1.0 / b_inv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

fn six_hump_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1 * x1 - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2 * x2
        + 4.0 * x2.powi(4)
}

fn branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let a = x2 - 5.1 * x1 * x1 / (4.0 * PI * PI) + 5.0 * x1 / PI - 6.0;
    a * a + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos() + 10.0
}

/// Builds the `Problem` for a suite member. `dim` may override the default
/// dimension for F1-F14 only; the fixed-dimension members reject it.
pub fn make_benchmark(id: BenchmarkId, dim: Option<usize>) -> Result<Problem> {
    if id.is_fixed_dim() && dim.is_some_and(|d| d != id.default_dim()) {
        return Err(Error::InvalidConfig(format!(
            "{} is fixed at dimension {}",
            id.id(),
            id.default_dim()
        )));
    }
    let dim = dim.unwrap_or_else(|| id.default_dim());
    if dim < 2 && matches!(id, F3 | F5 | F6 | F12 | F13) {
        return Err(Error::InvalidConfig(format!(
            "{} needs dimension >= 2",
            id.id()
        )));
    }
    let space = SearchSpace::symmetric(id.range(), dim)?;
    let objective: crate::problem::ObjectiveFn = match id {
        F1 => Arc::new(|x, _: &mut dyn rand::RngCore| sphere(x)),
        F2 => Arc::new(|x, _: &mut dyn rand::RngCore| schwefel_2_22(x)),
        F3 => Arc::new(|x, _: &mut dyn rand::RngCore| schwefel_1_2(x)),
        F4 => Arc::new(|x, _: &mut dyn rand::RngCore| schwefel_2_21(x)),
        F5 => Arc::new(|x, _: &mut dyn rand::RngCore| rosenbrock(x)),
        F6 => Arc::new(|x, _: &mut dyn rand::RngCore| cigar(x)),
        F7 => Arc::new(|x, rng: &mut dyn rand::RngCore| {
            quartic_deterministic(x) + rng.random::<f64>()
        }),
        F8 => Arc::new(|x, _: &mut dyn rand::RngCore| schwefel_2_26(x)),
        F9 => Arc::new(|x, _: &mut dyn rand::RngCore| rastrigin(x)),
        F10 => Arc::new(|x, _: &mut dyn rand::RngCore| ackley(x)),
        F11 => Arc::new(|x, _: &mut dyn rand::RngCore| griewank(x)),
        F12 => Arc::new(|x, _: &mut dyn rand::RngCore| penalized_1(x)),
        F13 => Arc::new(|x, _: &mut dyn rand::RngCore| penalized_2(x)),
        F14 => Arc::new(|x, _: &mut dyn rand::RngCore| weierstrass(x)),
        F15 => Arc::new(|x, _: &mut dyn rand::RngCore| shekel_foxholes(x)),
        F16 => Arc::new(|x, _: &mut dyn rand::RngCore| kowalik(x)),
        F17 => Arc::new(|x, _: &mut dyn rand::RngCore| six_hump_camel(x)),
        F18 => Arc::new(|x, _: &mut dyn rand::RngCore| branin(x)),
    };
    let mut problem = Problem::new(format!("{} ({})", id.id(), id.name()), space, objective)
        .with_known_optimum(id.f_min(dim));
    if id == F7 {
        problem = problem.stochastic();
    }
    Ok(problem)
}

/// Registry lookup by textual id ("F1".."F18").
pub fn benchmark_by_id(id: &str, dim: Option<usize>) -> Result<Problem> {
    make_benchmark(id.parse()?, dim)
}
