//! Property-based checks over the benchmark functions, the statistics
//! layer, and the search-space utilities.

use duckswarm::benchmarks::{benchmark_by_id, BenchmarkId};
use duckswarm::metrics::{friedman, wilcoxon_rank_sum, xpl_xpt};
use duckswarm::space::{clamp_to_space, SearchSpace};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn eval(id: &str, x: &[f64], seed: u64) -> f64 {
    let p = benchmark_by_id(id, Some(x.len())).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    p.evaluate(x, &mut rng)
}

proptest! {
    /// Sphere, Schwefel 2.22, sum-of-weighted-quartics (minus its noise),
    /// Rastrigin, Ackley, and Griewank are all even functions.
    #[test]
    fn benchmarks_are_symmetric(x in prop::collection::vec(-5.0f64..5.0, 2..8)) {
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        for id in ["f1", "f2", "f9", "f10", "f11"] {
            let a = eval(id, &x, 0);
            let b = eval(id, &neg, 0);
            prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0), "{id}: {a} vs {b}");
        }
    }

    /// Nonnegative-by-construction benchmarks never go below zero.
    #[test]
    fn benchmarks_are_nonnegative(x in prop::collection::vec(-5.0f64..5.0, 2..8)) {
        for id in ["f1", "f2", "f3", "f4", "f9", "f11"] {
            prop_assert!(eval(id, &x, 0) >= 0.0, "{id}");
        }
    }

    /// The noisy quartic gives different values under different RNG
    /// streams and identical values under the same stream.
    #[test]
    fn noisy_quartic_is_stochastic(x in prop::collection::vec(-1.0f64..1.0, 2..8)) {
        let (a, b, c) = (eval("f7", &x, 1), eval("f7", &x, 2), eval("f7", &x, 1));
        prop_assert_eq!(a, c);
        prop_assert_ne!(a, b);
    }

    /// Swapping the two samples flips the z sign and keeps p, h, and the
    /// identical flag.
    #[test]
    fn wilcoxon_is_symmetric(
        a in prop::collection::vec(-10.0f64..10.0, 1..20),
        b in prop::collection::vec(-10.0f64..10.0, 1..20),
    ) {
        let ab = wilcoxon_rank_sum(&a, &b).unwrap();
        let ba = wilcoxon_rank_sum(&b, &a).unwrap();
        prop_assert!((ab.p_value - ba.p_value).abs() <= 1e-12);
        prop_assert_eq!(ab.h, ba.h);
        prop_assert_eq!(ab.identical, ba.identical);
        prop_assert!((ab.z_value + ba.z_value).abs() <= 1e-12);
    }

    /// Adding the same constant to both samples does not change the test.
    #[test]
    fn wilcoxon_is_shift_invariant(
        a in prop::collection::vec(-10.0f64..10.0, 2..15),
        b in prop::collection::vec(-10.0f64..10.0, 2..15),
        shift in -100.0f64..100.0,
    ) {
        let plain = wilcoxon_rank_sum(&a, &b).unwrap();
        let sa: Vec<f64> = a.iter().map(|v| v + shift).collect();
        let sb: Vec<f64> = b.iter().map(|v| v + shift).collect();
        let shifted = wilcoxon_rank_sum(&sa, &sb).unwrap();
        prop_assert!((plain.p_value - shifted.p_value).abs() <= 1e-9);
        prop_assert_eq!(plain.h, shifted.h);
    }

    /// Each per-function rank row sums to k(k+1)/2 and the final ranking
    /// is a permutation of 1..=k.
    #[test]
    fn friedman_rows_sum_correctly(
        k in 2usize..6,
        runs in 1usize..8,
        funcs in 1usize..5,
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tensor: Vec<Vec<Vec<f64>>> = (0..funcs)
            .map(|_| (0..k).map(|_| (0..runs).map(|_| rng.random_range(-5.0..5.0)).collect()).collect())
            .collect();
        let table = friedman(&tensor).unwrap();
        let expect = k as f64 * (k as f64 + 1.0) / 2.0;
        for row in &table.per_function_mean_ranks {
            let sum: f64 = row.iter().sum();
            prop_assert!((sum - expect).abs() <= 1e-9, "row sum {sum} != {expect}");
        }
        let mut final_sorted = table.final_rank.clone();
        final_sorted.sort_unstable();
        prop_assert_eq!(final_sorted, (1..=k).collect::<Vec<_>>());
    }

    /// Clamping is idempotent and always lands inside the box.
    #[test]
    fn clamp_is_idempotent(
        x in prop::collection::vec(-500.0f64..500.0, 1..10),
        half in 0.5f64..100.0,
    ) {
        let space = SearchSpace::symmetric(half, x.len()).unwrap();
        let once = clamp_to_space(&x, &space);
        prop_assert!(space.contains(&once));
        prop_assert_eq!(clamp_to_space(&once, &space), once);
    }

    /// The phase split is a partition of 100% with each side in [0, 100].
    #[test]
    fn phase_split_partitions(div in 0.0f64..10.0, div_max in 0.01f64..10.0) {
        let div = div.min(div_max);
        let s = xpl_xpt(div, div_max);
        prop_assert!((s.exploration_pct + s.exploitation_pct - 100.0).abs() <= 1e-9);
        prop_assert!((-1e-9..=100.0 + 1e-9).contains(&s.exploration_pct));
        prop_assert!((-1e-9..=100.0 + 1e-9).contains(&s.exploitation_pct));
    }
}

/// Every benchmark id round-trips through the registry and reports a
/// finite value at its own known optimum bound.
#[test]
fn registry_round_trips_all_ids() {
    for id in BenchmarkId::all() {
        let p = benchmark_by_id(id.id(), None).unwrap();
        assert_eq!(p.dim(), id.default_dim());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mid: Vec<f64> = p
            .space()
            .lower()
            .iter()
            .zip(p.space().upper())
            .map(|(l, u)| (l + u) / 2.0)
            .collect();
        assert!(p.evaluate(&mid, &mut rng).is_finite(), "{}", id.id());
    }
}
