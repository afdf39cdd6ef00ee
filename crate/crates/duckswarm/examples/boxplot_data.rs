//! Plot-ready five-number summaries per problem x algorithm: runs a small
//! campaign and extracts nearest-rank quantiles from its results file.

use duckswarm::harness::{cmd_bench, cmd_boxplot, ExperimentSpec};

fn main() -> duckswarm::Result<()> {
    let mut spec = ExperimentSpec::new("campaign_boxplot");
    spec.problems = vec!["f9".into(), "f10".into()];
    spec.algorithms = vec!["dsa".into(), "sca".into()];
    spec.runs = 10;
    spec.max_iter = 100;

    cmd_bench(&spec)?;
    let rows = cmd_boxplot(&spec)?;
    println!("{:<5} {:<5} {:>12} {:>12} {:>12} {:>12} {:>12}", "prob", "algo", "min", "q1", "med", "q3", "max");
    for b in &rows {
        println!(
            "{:<5} {:<5} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e}",
            b.problem, b.algorithm, b.min, b.q1, b.median, b.q3, b.max
        );
    }
    Ok(())
}
