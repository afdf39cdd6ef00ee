//! A small multi-run campaign over several benchmarks, written as CSV
//! files (results, per-cell summaries, per-run traces, manifest).

use duckswarm::harness::{cmd_bench, ExperimentSpec};

fn main() -> duckswarm::Result<()> {
    let mut spec = ExperimentSpec::new("campaign");
    spec.problems = vec!["f1".into(), "f9".into(), "f11".into()];
    spec.algorithms = vec!["dsa".into(), "gwo".into()];
    spec.runs = 5;
    spec.max_iter = 100;

    let rows = cmd_bench(&spec)?;
    println!("{} runs written to {}/", rows.len(), spec.output_dir.display());
    for row in &rows {
        println!(
            "{:<4} {:<4} run {}: best {:e}",
            row.problem, row.algorithm, row.run, row.best_fitness
        );
    }
    Ok(())
}
