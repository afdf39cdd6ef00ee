//! Statistical comparison of four algorithms: runs a campaign, then
//! builds rank-sum (vs. the flock algorithm) and multi-sample rank tables.
//! Also shows a lookup into the bundled literature results.

use duckswarm::benchmarks::BenchmarkId;
use duckswarm::harness::{cmd_bench, cmd_compare, published_value, ExperimentSpec};

fn main() -> duckswarm::Result<()> {
    let mut spec = ExperimentSpec::new("campaign_compare");
    spec.problems = vec!["f1".into(), "f2".into()];
    spec.algorithms = vec!["dsa".into(), "pso".into(), "gwo".into(), "sca".into()];
    spec.runs = 10;
    spec.max_iter = 100;

    cmd_bench(&spec)?;
    let report = cmd_compare(&spec)?;

    println!("rank-sum vs dsa:");
    for w in &report.wilcoxon {
        println!(
            "  {} {:<4}: p = {:.3e}, h = {}, z = {:+.3}",
            w.problem, w.algorithm, w.p_value, w.h, w.z_value
        );
    }

    println!("\nmean ranks (lower is better):");
    for (problem, ranks) in report.problems.iter().zip(&report.friedman.per_function_mean_ranks) {
        let cells: Vec<String> = report
            .algorithms
            .iter()
            .zip(ranks)
            .map(|(a, r)| format!("{a}={r:.2}"))
            .collect();
        println!("  {problem}: {}", cells.join("  "));
    }

    let printed = published_value(BenchmarkId::F1, "dsa", "mean").unwrap();
    println!("\nliterature mean for f1 (dsa): {printed:e}");
    Ok(())
}
