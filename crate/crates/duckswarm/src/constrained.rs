//! Penalty-based constraint handling and the six engineering design
//! problems, each carrying its published best solution as a transcription
//! oracle.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::problem::{ConstraintFn, Problem};
use crate::space::SearchSpace;

/// Finite stand-in for a constraint that diverges on the boundary of the
/// box (e.g. a zero cross-section); keeps the penalized objective finite
/// so runs are not aborted by a singular but reachable corner.
const SINGULAR_PENALTY: f64 = 1e30;

/// A problem with inequality constraints `g_i(x) <= 0` handled by a static
/// quadratic penalty.
pub struct ConstrainedProblem {
    /// Raw objective plus the constraint list.
    pub base: Problem,
    pub penalty_coefficient: f64,
    /// Best decision vector reported in the literature, with its objective.
    pub published_best: (Vec<f64>, f64),
    id: &'static str,
}

impl ConstrainedProblem {
    pub fn id(&self) -> &'static str {
        self.id
    }

    /// Raw (unpenalized) objective.
    pub fn objective(&self, x: &[f64]) -> f64 {
        // Engineering objectives here are deterministic; the stream is unused.
        use rand::SeedableRng;
        let mut sink = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        self.base.evaluate(x, &mut sink)
    }

    pub fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        self.base.constraint_values(x)
    }

    /// True when every `g_i(x) <= tol`.
    pub fn is_feasible(&self, x: &[f64], tol: f64) -> bool {
        self.constraint_values(x).iter().all(|&g| g <= tol)
    }

    /// The penalized single-objective view used by the optimizers.
    pub fn to_problem(&self) -> Problem {
        let coefficient = self.penalty_coefficient;
        let inner = self.base.clone();
        let objective: crate::problem::ObjectiveFn =
            Arc::new(move |x: &[f64], rng: &mut dyn rand::RngCore| {
                penalize(inner.evaluate(x, rng), &inner.constraint_values(x), coefficient)
            });
        Problem::new(self.base.name().to_string(), self.base.space().clone(), objective)
            .with_constraints(self.base.constraints().to_vec())
            .with_known_optimum(self.published_best.1)
    }
}

fn penalize(f: f64, constraint_values: &[f64], coefficient: f64) -> f64 {
    let mut penalty = 0.0;
    for &g in constraint_values {
        if !g.is_finite() {
            return SINGULAR_PENALTY;
        }
        let v = g.max(0.0);
        penalty += v * v;
    }
    f + coefficient * penalty
}

/// `f(x)` plus `penalty_coefficient * sum(max(0, g_i(x))^2)`.
pub fn penalized_objective(cp: &ConstrainedProblem, x: &[f64]) -> f64 {
    penalize(cp.objective(x), &cp.constraint_values(x), cp.penalty_coefficient)
}

fn build(
    id: &'static str,
    name: &str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    constraints: Vec<ConstraintFn>,
    published_x: Vec<f64>,
    published_f: f64,
) -> ConstrainedProblem {
    let space = SearchSpace::new(lower, upper).expect("static bounds");
    let base = Problem::new(
        name,
        space,
        Arc::new(move |x: &[f64], _: &mut dyn rand::RngCore| objective(x)),
    )
    .with_constraints(constraints)
    .with_known_optimum(published_f);
    ConstrainedProblem {
        base,
        penalty_coefficient: 1e10,
        published_best: (published_x, published_f),
        id,
    }
}

/// Minimize the volume of a statically loaded three-bar truss subject to
/// stress limits on each member. Decision variables are the two
/// cross-sectional areas.
pub fn three_bar_truss() -> ConstrainedProblem {
    const L: f64 = 100.0;
    const P: f64 = 2.0;
    const SIGMA: f64 = 2.0;
    let sqrt2 = std::f64::consts::SQRT_2;
    build(
        "tbtp",
        "three-bar truss",
        vec![0.0, 0.0],
        vec![1.0, 1.0],
        move |x| (2.0 * sqrt2 * x[0] + x[1]) * L,
        vec![
            Arc::new(move |x: &[f64]| {
                (sqrt2 * x[0] + x[1]) / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * P - SIGMA
            }),
            Arc::new(move |x: &[f64]| {
                x[1] / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * P - SIGMA
            }),
            Arc::new(move |x: &[f64]| 1.0 / (x[0] + sqrt2 * x[1]) * P - SIGMA),
        ],
        vec![0.788675136, 0.408248285],
        263.8958434,
    )
}

/// Minimize the daily cost of shipping logs from two forests to two mills
/// under mill-capacity, forest-supply, and demand constraints.
pub fn sawmill() -> ConstrainedProblem {
    build(
        "sop",
        "sawmill operation",
        vec![0.0; 4],
        vec![200.0; 4],
        |x| 10.0 * (24.0 * x[0] + 20.5 * x[1] + 17.2 * x[2] + 10.0 * x[3]),
        vec![
            Arc::new(|x: &[f64]| x[0] + x[1] - 240.0),
            Arc::new(|x: &[f64]| x[2] + x[3] - 300.0),
            Arc::new(|x: &[f64]| x[0] + x[2] - 200.0),
            Arc::new(|x: &[f64]| x[1] + x[3] - 200.0),
            Arc::new(|x: &[f64]| 300.0 - (x[0] + x[1] + x[2] + x[3])),
        ],
        vec![1.20e-11, 1.63e-6, 100.0001, 199.9999],
        37200.0053,
    )
}

/// Minimize the weight of a tension/compression spring. Variables: wire
/// diameter, mean coil diameter, number of active coils.
pub fn tension_spring() -> ConstrainedProblem {
    build(
        "tsd",
        "tension spring design",
        vec![0.05, 0.25, 2.0],
        vec![2.0, 1.3, 15.0],
        |x| (x[2] + 2.0) * x[1] * x[0] * x[0],
        vec![
            Arc::new(|x: &[f64]| 1.0 - x[1].powi(3) * x[2] / (71785.0 * x[0].powi(4))),
            Arc::new(|x: &[f64]| {
                (4.0 * x[1] * x[1] - x[0] * x[1])
                    / (12566.0 * (x[1] * x[0].powi(3) - x[0].powi(4)))
                    + 1.0 / (5108.0 * x[0] * x[0])
                    - 1.0
            }),
            Arc::new(|x: &[f64]| 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2])),
            Arc::new(|x: &[f64]| (x[0] + x[1]) / 1.5 - 1.0),
        ],
        vec![0.052068, 0.365900, 10.770262],
        0.012668,
    )
}

/// Minimize the fabrication cost of a welded beam. Variables: weld
/// thickness, weld length, bar height, bar thickness.
pub fn welded_beam() -> ConstrainedProblem {
    const P: f64 = 6000.0;
    const L: f64 = 14.0;
    const E: f64 = 30e6;
    const G: f64 = 12e6;
    const TAU_MAX: f64 = 13600.0;
    const SIGMA_MAX: f64 = 30000.0;
    const DELTA_MAX: f64 = 0.25;

    fn shear_stress(x: &[f64]) -> f64 {
        let tau_p = P / (std::f64::consts::SQRT_2 * x[0] * x[1]);
        let m = P * (L + x[1] / 2.0);
        let r = (x[1] * x[1] / 4.0 + ((x[0] + x[2]) / 2.0).powi(2)).sqrt();
        let j = 2.0
            * (std::f64::consts::SQRT_2
                * x[0]
                * x[1]
                * (x[1] * x[1] / 12.0 + ((x[0] + x[2]) / 2.0).powi(2)));
        let tau_pp = m * r / j;
        (tau_p * tau_p + 2.0 * tau_p * tau_pp * x[1] / (2.0 * r) + tau_pp * tau_pp).sqrt()
    }

    fn bending_stress(x: &[f64]) -> f64 {
        6.0 * P * L / (x[3] * x[2] * x[2])
    }

    fn deflection(x: &[f64]) -> f64 {
        4.0 * P * L.powi(3) / (E * x[2].powi(3) * x[3])
    }

    fn buckling_load(x: &[f64]) -> f64 {
        4.013 * E * (x[2] * x[2] * x[3].powi(6) / 36.0).sqrt() / (L * L)
            * (1.0 - x[2] / (2.0 * L) * (E / (4.0 * G)).sqrt())
    }

    build(
        "wbd",
        "welded beam design",
        vec![0.1; 4],
        vec![2.0, 10.0, 10.0, 2.0],
        |x| 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]),
        vec![
            Arc::new(|x: &[f64]| shear_stress(x) - TAU_MAX),
            Arc::new(|x: &[f64]| bending_stress(x) - SIGMA_MAX),
            Arc::new(|x: &[f64]| x[0] - x[3]),
            Arc::new(|x: &[f64]| {
                0.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0
            }),
            Arc::new(|x: &[f64]| 0.125 - x[0]),
            Arc::new(|x: &[f64]| deflection(x) - DELTA_MAX),
            Arc::new(|x: &[f64]| P - buckling_load(x)),
        ],
        vec![0.205731, 3.475599, 9.036601, 0.205731],
        1.725555,
    )
}

/// Minimize the material and forming cost of a cylindrical pressure
/// vessel. Treated as fully continuous. Variables: shell thickness, head
/// thickness, inner radius, shell length.
pub fn pressure_vessel() -> ConstrainedProblem {
    use std::f64::consts::PI;
    build(
        "pvd",
        "pressure vessel design",
        vec![0.0, 0.0, 10.0, 10.0],
        vec![99.0, 99.0, 200.0, 200.0],
        |x| {
            0.6224 * x[0] * x[2] * x[3]
                + 1.7781 * x[1] * x[2] * x[2]
                + 3.1661 * x[0] * x[0] * x[3]
                + 19.84 * x[0] * x[0] * x[2]
        },
        vec![
            Arc::new(|x: &[f64]| -x[0] + 0.0193 * x[2]),
            Arc::new(|x: &[f64]| -x[1] + 0.00954 * x[2]),
            Arc::new(|x: &[f64]| {
                -PI * x[2] * x[2] * x[3] - 4.0 / 3.0 * PI * x[2].powi(3) + 1_296_000.0
            }),
            Arc::new(|x: &[f64]| x[3] - 240.0),
        ],
        vec![0.778189, 0.384659, 40.320642, 199.985755],
        5885.374386,
    )
}

/// Minimize the weight of a speed reducer subject to gear and shaft
/// stress, deflection, and dimensional constraints. The tooth count x3 is
/// relaxed to a continuous variable during search.
pub fn speed_reducer() -> ConstrainedProblem {
    build(
        "srd",
        "speed reducer design",
        vec![2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0],
        vec![3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5],
        |x| {
            0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934)
                - 1.508 * x[0] * (x[5] * x[5] + x[6] * x[6])
                + 7.4777 * (x[5].powi(3) + x[6].powi(3))
                + 0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6])
        },
        vec![
            Arc::new(|x: &[f64]| 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0),
            Arc::new(|x: &[f64]| 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0),
            Arc::new(|x: &[f64]| 1.93 * x[3].powi(3) / (x[1] * x[2] * x[5].powi(4)) - 1.0),
            Arc::new(|x: &[f64]| 1.93 * x[4].powi(3) / (x[1] * x[2] * x[6].powi(4)) - 1.0),
            Arc::new(|x: &[f64]| {
                ((745.0 * x[3] / (x[1] * x[2])).powi(2) + 16.9e6).sqrt()
                    / (110.0 * x[5].powi(3))
                    - 1.0
            }),
            Arc::new(|x: &[f64]| {
                ((745.0 * x[4] / (x[1] * x[2])).powi(2) + 157.5e6).sqrt()
                    / (85.0 * x[6].powi(3))
                    - 1.0
            }),
            Arc::new(|x: &[f64]| x[1] * x[2] / 40.0 - 1.0),
            Arc::new(|x: &[f64]| 5.0 * x[1] / x[0] - 1.0),
            Arc::new(|x: &[f64]| x[0] / (12.0 * x[1]) - 1.0),
            Arc::new(|x: &[f64]| (1.5 * x[5] + 1.9) / x[3] - 1.0),
            Arc::new(|x: &[f64]| (1.1 * x[6] + 1.9) / x[4] - 1.0),
        ],
        vec![3.500006, 0.7, 17.0, 7.300490, 7.8, 3.350216, 5.286759],
        2996.403492,
    )
}

pub fn all_problems() -> Vec<ConstrainedProblem> {
    vec![
        three_bar_truss(),
        sawmill(),
        tension_spring(),
        welded_beam(),
        pressure_vessel(),
        speed_reducer(),
    ]
}

/// Registry lookup by textual id.
pub fn constrained_by_id(id: &str) -> Result<ConstrainedProblem> {
    match id.to_ascii_lowercase().as_str() {
        "tbtp" => Ok(three_bar_truss()),
        "sop" => Ok(sawmill()),
        "tsd" => Ok(tension_spring()),
        "wbd" => Ok(welded_beam()),
        "pvd" => Ok(pressure_vessel()),
        "srd" => Ok(speed_reducer()),
        other => Err(Error::UnknownProblem(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn penalized_objective_examples() {
        let cp = sawmill();
        // Feasible point: penalty is exactly zero.
        let x = [0.0, 0.0, 100.0, 200.0];
        assert_eq!(penalized_objective(&cp, &x), cp.objective(&x));
        // Synthetic violations through the shared penalty kernel.
        assert_relative_eq!(penalize(1.0, &[0.1, -5.0], 1e10), 1.0 + 1e8, epsilon = 1e-3);
        assert_relative_eq!(
            penalize(1.0, &[0.1, 0.2], 1e10),
            1.0 + 1e10 * 0.05,
            max_relative = 1e-12
        );
    }

    #[test]
    fn three_bar_truss_oracles() {
        let cp = three_bar_truss();
        // Published CSO solution sits on the active constraint.
        let cso = [0.788816646, 0.407848187];
        assert_relative_eq!(cp.objective(&cso), 263.8958586, max_relative = 1e-6);
        let g = cp.constraint_values(&cso);
        assert!(g[0].abs() < 1e-6, "g1 = {} should be active", g[0]);
        // Interior sanity point.
        let corner = [1.0, 1.0];
        assert_relative_eq!(
            cp.objective(&corner),
            2.0 * std::f64::consts::SQRT_2 * 100.0 + 100.0,
            max_relative = 1e-12
        );
        assert!(cp.is_feasible(&corner, 0.0));
    }

    #[test]
    fn sawmill_oracles() {
        let cp = sawmill();
        let x = [0.0, 0.0, 100.0, 200.0];
        assert_eq!(cp.objective(&x), 37200.0);
        let g = cp.constraint_values(&x);
        assert_eq!(g[1], 0.0);
        assert_eq!(g[2], -100.0);
        assert_eq!(g[4], 0.0);
        // Demand unmet.
        assert_eq!(cp.constraint_values(&[0.0; 4])[4], 300.0);
        // Forest capacities blown.
        assert_eq!(cp.constraint_values(&[200.0, 200.0, 0.0, 0.0])[0], 160.0);
    }

    #[test]
    fn published_vectors_reproduce_published_objectives() {
        for cp in all_problems() {
            let (x, f) = cp.published_best.clone();
            let got = cp.objective(&x);
            assert_relative_eq!(got, f, max_relative = 1e-3);
        }
    }

    #[test]
    fn published_vectors_are_feasible() {
        // Published vectors are rounded to ~6 decimals, so an active
        // constraint can be violated by rounding noise; 1e-2 absolute
        // covers the worst case (a ~1e6-scale volume constraint).
        for cp in all_problems() {
            let (x, _) = cp.published_best.clone();
            let g = cp.constraint_values(&x);
            for (i, &gi) in g.iter().enumerate() {
                assert!(
                    gi <= 1e-2,
                    "{}: g{} = {gi} violated at published best",
                    cp.id(),
                    i + 1
                );
            }
        }
    }

    #[test]
    fn penalty_dominates_known_optimum() {
        // A grossly infeasible point must score far worse than the
        // published optimum, so the optimizer cannot camp on violations.
        let cp = sawmill();
        let infeasible = penalized_objective(&cp, &[0.0; 4]);
        assert!(infeasible > 100.0 * cp.published_best.1);
    }

    #[test]
    fn singular_boundary_is_finite() {
        let cp = three_bar_truss();
        let v = penalized_objective(&cp, &[0.0, 0.0]);
        assert!(v.is_finite());
        assert!(v >= SINGULAR_PENALTY);
    }

    #[test]
    fn registry_roundtrip() {
        for id in ["tbtp", "sop", "tsd", "wbd", "pvd", "srd"] {
            assert_eq!(constrained_by_id(id).unwrap().id(), id);
        }
        assert!(constrained_by_id("nope").is_err());
    }
}
