//! Summary statistics, nonparametric comparison tests, and population
//! diversity instrumentation.

use itertools::Itertools;
use statrs::function::erf::erfc;

use crate::error::{Error, Result};
use crate::swarm::Swarm;

/// Best/mean/std/time summary over `m` independent runs. The standard
/// deviation uses the population (1/m) divisor.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryStats {
    pub best: f64,
    pub mean: f64,
    pub std: f64,
    pub mean_time_seconds: f64,
    pub m: usize,
}

pub fn summarize(run_fitnesses: &[f64], run_times: &[f64]) -> Result<SummaryStats> {
    if run_fitnesses.is_empty() || run_times.is_empty() {
        return Err(Error::EmptyInput("summarize needs at least one run"));
    }
    if run_fitnesses.len() != run_times.len() {
        return Err(Error::RaggedInput(format!(
            "fitness count {} != time count {}",
            run_fitnesses.len(),
            run_times.len()
        )));
    }
    let m = run_fitnesses.len() as f64;
    let best = run_fitnesses.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = run_fitnesses.iter().sum::<f64>() / m;
    let var = run_fitnesses.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / m;
    Ok(SummaryStats {
        best,
        mean,
        std: var.sqrt(),
        mean_time_seconds: run_times.iter().sum::<f64>() / m,
        m: run_fitnesses.len(),
    })
}

/// Two-sided rank-sum test outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct WilcoxonResult {
    pub p_value: f64,
    /// 1 iff the 5% significance level is reached and the samples are not
    /// identical.
    pub h: u8,
    /// Signed like (mean rank of `a`) - (mean rank of `b`): positive when
    /// `a` tends to rank higher (be larger).
    pub z_value: f64,
    /// All values of both samples equal; reported as p = 1, z = 0.
    pub identical: bool,
}

/// Midranks of the pooled sample, returned per input slot.
fn midranks(pooled: &[f64]) -> Vec<f64> {
    let n = pooled.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pooled[a].partial_cmp(&pooled[b]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && pooled[order[j + 1]] == pooled[order[i]] {
            j += 1;
        }
        let mid = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = mid;
        }
        i = j + 1;
    }
    ranks
}

/// Tie-corrected normal-approximation z for rank sum `w` of a sample of
/// size `n` against size `m`, with continuity correction.
fn rank_sum_z(w: f64, n: usize, m: usize, pooled: &[f64]) -> f64 {
    let nn = n as f64;
    let mm = m as f64;
    let total = nn + mm;
    let mean = nn * (total + 1.0) / 2.0;
    // Tie correction: subtract sum(t^3 - t) / (N (N - 1)) from N + 1.
    let mut sorted = pooled.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = nn * mm / 12.0 * (total + 1.0 - tie_term / (total * (total - 1.0)));
    if var <= 0.0 {
        return 0.0;
    }
    let diff = w - mean;
    if diff == 0.0 {
        // signum(0.0) is 1.0 in Rust; without this guard a dead-even rank
        // sum would pick up a spurious -0.5 continuity correction.
        return 0.0;
    }
    let cc = 0.5 * diff.signum();
    (diff - cc) / var.sqrt()
}

fn normal_two_sided_p(z: f64) -> f64 {
    erfc(z.abs() / std::f64::consts::SQRT_2)
}

/// Exact two-sided p by enumerating every assignment of `n` of the pooled
/// midranks to the first sample.
fn exact_two_sided_p(w_obs: f64, n: usize, ranks: &[f64]) -> f64 {
    let total = ranks.len();
    let mean = n as f64 * (total as f64 + 1.0) / 2.0;
    let dev = (w_obs - mean).abs();
    let mut extreme = 0u64;
    let mut count = 0u64;
    for combo in (0..total).combinations(n) {
        let w: f64 = combo.iter().map(|&i| ranks[i]).sum();
        // Tolerance guards midrank sums that differ only by rounding.
        if (w - mean).abs() >= dev - 1e-9 {
            extreme += 1;
        }
        count += 1;
    }
    (extreme as f64 / count as f64).min(1.0)
}

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) test with midranks for ties.
/// Small samples (`n * m <= 64`) use exact enumeration of the rank-sum
/// distribution; larger ones use the tie-corrected normal approximation
/// with continuity correction.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<WilcoxonResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("wilcoxon_rank_sum needs nonempty samples"));
    }
    let first = a[0];
    if a.iter().chain(b.iter()).all(|&v| v == first) {
        return Ok(WilcoxonResult {
            p_value: 1.0,
            h: 0,
            z_value: 0.0,
            identical: true,
        });
    }
    let n = a.len();
    let m = b.len();
    let pooled: Vec<f64> = a.iter().chain(b.iter()).cloned().collect();
    let ranks = midranks(&pooled);
    let w_a: f64 = ranks[..n].iter().sum();
    let z = rank_sum_z(w_a, n, m, &pooled);
    let p = if n * m <= 64 {
        exact_two_sided_p(w_a, n, &ranks)
    } else {
        normal_two_sided_p(z)
    };
    Ok(WilcoxonResult {
        p_value: p,
        h: u8::from(p < 0.05),
        z_value: z,
        identical: false,
    })
}

/// Friedman rank table over a `functions x algorithms x runs` tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct FriedmanTable {
    /// `[function][algorithm]` mean rank; each row sums to k(k+1)/2.
    pub per_function_mean_ranks: Vec<Vec<f64>>,
    pub totals: Vec<f64>,
    pub averages: Vec<f64>,
    /// 1 = smallest average rank.
    pub final_rank: Vec<usize>,
}

/// Ranks algorithms ascending per (function, run index) with midranks,
/// pairing the r-th run of each algorithm, then averages over runs.
pub fn friedman(results: &[Vec<Vec<f64>>]) -> Result<FriedmanTable> {
    if results.is_empty() {
        return Err(Error::EmptyInput("friedman needs at least one function"));
    }
    let k = results[0].len();
    if k < 2 {
        return Err(Error::InvalidConfig(
            "friedman needs at least two algorithms".into(),
        ));
    }
    let runs = results[0].first().map(|r| r.len()).unwrap_or(0);
    if runs == 0 {
        return Err(Error::EmptyInput("friedman needs at least one run"));
    }
    for (f, per_algo) in results.iter().enumerate() {
        if per_algo.len() != k {
            return Err(Error::RaggedInput(format!(
                "function {f} has {} algorithms, expected {k}",
                per_algo.len()
            )));
        }
        for (a, r) in per_algo.iter().enumerate() {
            if r.len() != runs {
                return Err(Error::RaggedInput(format!(
                    "function {f}, algorithm {a} has {} runs, expected {runs}",
                    r.len()
                )));
            }
        }
    }

    let mut per_function_mean_ranks: Vec<Vec<f64>> = Vec::with_capacity(results.len());
    for per_algo in results {
        let mut sums = vec![0.0; k];
        for r in 0..runs {
            let row: Vec<f64> = per_algo.iter().map(|alg| alg[r]).collect();
            let ranks = midranks(&row);
            for (s, rank) in sums.iter_mut().zip(&ranks) {
                *s += rank;
            }
        }
        per_function_mean_ranks.push(sums.into_iter().map(|s| s / runs as f64).collect());
    }

    let totals: Vec<f64> = (0..k)
        .map(|a| per_function_mean_ranks.iter().map(|row| row[a]).sum())
        .collect();
    let averages: Vec<f64> = totals.iter().map(|t| t / results.len() as f64).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| averages[a].partial_cmp(&averages[b]).unwrap().then(a.cmp(&b)));
    let mut final_rank = vec![0; k];
    for (place, &alg) in order.iter().enumerate() {
        final_rank[alg] = place + 1;
    }
    Ok(FriedmanTable {
        per_function_mean_ranks,
        totals,
        averages,
        final_rank,
    })
}

/// Mean Euclidean distance of agents from the population centroid.
pub fn diversity(swarm: &Swarm) -> f64 {
    let n = swarm.len();
    if n == 0 {
        return 0.0;
    }
    let dim = swarm.positions[0].len();
    let mut centroid = vec![0.0; dim];
    for pos in &swarm.positions {
        for (c, x) in centroid.iter_mut().zip(pos) {
            *c += x;
        }
    }
    for c in &mut centroid {
        *c /= n as f64;
    }
    let mut total = 0.0;
    for pos in &swarm.positions {
        let sq: f64 = pos
            .iter()
            .zip(&centroid)
            .map(|(x, c)| (x - c) * (x - c))
            .sum();
        total += sq.sqrt();
    }
    total / n as f64
}

/// Exploration/exploitation percentages for one iteration's diversity
/// against the running maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSplit {
    pub exploration_pct: f64,
    pub exploitation_pct: f64,
    /// Set when the swarm never dispersed (`div_max = 0`); both
    /// percentages are reported as zero.
    pub degenerate: bool,
}

pub fn xpl_xpt(div_t: f64, div_max: f64) -> PhaseSplit {
    if div_max <= 0.0 {
        return PhaseSplit {
            exploration_pct: 0.0,
            exploitation_pct: 0.0,
            degenerate: true,
        };
    }
    PhaseSplit {
        exploration_pct: 100.0 * div_t / div_max,
        exploitation_pct: 100.0 * (div_t - div_max).abs() / div_max,
        degenerate: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn summarize_singleton_and_zeros() {
        let s = summarize(&[5.0], &[0.1]).unwrap();
        assert_eq!((s.best, s.mean, s.std), (5.0, 5.0, 0.0));
        let z = summarize(&[0.0; 4], &[0.0; 4]).unwrap();
        assert_eq!((z.best, z.std), (0.0, 0.0));
    }

    #[test]
    fn summarize_population_divisor() {
        let s = summarize(&[1.0, 2.0, 3.0], &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(s.mean, 2.0);
        assert_relative_eq!(s.std, (2.0f64 / 3.0).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn summarize_rejects_empty() {
        assert!(summarize(&[], &[]).is_err());
    }

    #[test]
    fn wilcoxon_identical_samples() {
        let r = wilcoxon_rank_sum(&[7.0, 7.0, 7.0], &[7.0, 7.0, 7.0]).unwrap();
        assert!(r.identical);
        assert_eq!(r.h, 0);
        assert_eq!(r.p_value, 1.0);
        assert_eq!(r.z_value, 0.0);
    }

    #[test]
    fn wilcoxon_exact_small_sample() {
        // Fully separated 3-vs-3: 2 of the 20 equally likely rank
        // assignments are at least this extreme.
        let r = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert_relative_eq!(r.p_value, 0.1, epsilon = 1e-12);
        assert_eq!(r.h, 0);
        assert!(r.z_value < 0.0);
    }

    #[test]
    fn wilcoxon_separated_thirty_vs_thirty() {
        let a: Vec<f64> = (0..30).map(|i| 100.0 + i as f64).collect();
        let b: Vec<f64> = (0..30).map(|i| i as f64 / 100.0).collect();
        let r = wilcoxon_rank_sum(&a, &b).unwrap();
        assert_eq!(r.h, 1);
        assert_relative_eq!(r.z_value, 6.6456, epsilon = 1e-3);
        assert_relative_eq!(r.p_value, 3.02e-11, max_relative = 1e-2);
    }

    #[test]
    fn wilcoxon_swap_symmetry() {
        let a = vec![3.0, 1.0, 4.0, 1.5, 9.0, 2.6, 5.0, 3.5, 8.0, 9.7];
        let b = vec![2.0, 7.0, 1.8, 2.8, 1.0, 8.2, 8.2, 4.5, 9.0, 6.4];
        let ab = wilcoxon_rank_sum(&a, &b).unwrap();
        let ba = wilcoxon_rank_sum(&b, &a).unwrap();
        assert_relative_eq!(ab.z_value, -ba.z_value, epsilon = 1e-12);
        assert_relative_eq!(ab.p_value, ba.p_value, epsilon = 1e-12);
    }

    #[test]
    fn friedman_total_order() {
        // Algorithm 0 always smaller: mean ranks 1.0 and 2.0 everywhere.
        let results = vec![
            vec![vec![1.0, 1.0, 1.0], vec![2.0, 2.0, 2.0]],
            vec![vec![0.5, 0.4, 0.3], vec![5.0, 6.0, 7.0]],
        ];
        let table = friedman(&results).unwrap();
        for row in &table.per_function_mean_ranks {
            assert_eq!(row, &vec![1.0, 2.0]);
        }
        assert_eq!(table.final_rank, vec![1, 2]);
    }

    #[test]
    fn friedman_full_tie_gives_midranks() {
        let results = vec![vec![vec![3.0; 5]; 4]];
        let table = friedman(&results).unwrap();
        for row in &table.per_function_mean_ranks {
            for &r in row {
                assert_eq!(r, 2.5); // (k+1)/2 for k = 4
            }
        }
    }

    #[test]
    fn friedman_rejects_ragged() {
        let results = vec![vec![vec![1.0, 2.0], vec![1.0]]];
        assert!(friedman(&results).is_err());
    }

    #[test]
    fn diversity_examples() {
        let collapsed = Swarm {
            positions: vec![vec![1.0, 2.0]; 3],
            fitness: vec![0.0; 3],
            leader_pos: vec![1.0, 2.0],
            leader_fit: 0.0,
        };
        assert_eq!(diversity(&collapsed), 0.0);

        let pair = Swarm {
            positions: vec![vec![0.0, 0.0], vec![2.0, 0.0]],
            fitness: vec![0.0; 2],
            leader_pos: vec![0.0, 0.0],
            leader_fit: 0.0,
        };
        assert_eq!(diversity(&pair), 1.0);
    }

    #[test]
    fn diversity_is_homogeneous() {
        let base = vec![vec![0.5, -1.0], vec![2.0, 3.0], vec![-1.5, 0.25]];
        let make = |c: f64| Swarm {
            positions: base
                .iter()
                .map(|p| p.iter().map(|x| x * c).collect())
                .collect(),
            fitness: vec![0.0; 3],
            leader_pos: vec![0.0, 0.0],
            leader_fit: 0.0,
        };
        let d1 = diversity(&make(1.0));
        let d3 = diversity(&make(3.0));
        assert_relative_eq!(d3, 3.0 * d1, epsilon = 1e-12);
    }

    #[test]
    fn phase_split_extremes() {
        let peak = xpl_xpt(2.0, 2.0);
        assert_eq!((peak.exploration_pct, peak.exploitation_pct), (100.0, 0.0));
        let collapsed = xpl_xpt(0.0, 2.0);
        assert_eq!(
            (collapsed.exploration_pct, collapsed.exploitation_pct),
            (0.0, 100.0)
        );
        let quarter = xpl_xpt(0.5, 2.0);
        assert_eq!(
            (quarter.exploration_pct, quarter.exploitation_pct),
            (25.0, 75.0)
        );
        let degenerate = xpl_xpt(0.0, 0.0);
        assert!(degenerate.degenerate);
        assert_eq!(degenerate.exploration_pct, 0.0);
    }
}
