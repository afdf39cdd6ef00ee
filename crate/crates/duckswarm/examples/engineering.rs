//! Constrained engineering design via the penalty method: optimizes the
//! three-bar truss and the tension spring, reporting the best decision
//! vector, objective, and constraint slack.

use duckswarm::harness::{cmd_engineer, ExperimentSpec};

fn main() -> duckswarm::Result<()> {
    let mut spec = ExperimentSpec::new("campaign_engineer");
    spec.runs = 10;
    spec.n_agents = 30;
    spec.max_iter = 500;

    for id in ["tbtp", "tsd"] {
        let report = cmd_engineer(id, &spec)?;
        println!("{id}:");
        println!("  x           = {:?}", report.best_x);
        println!("  objective   = {:.6}", report.best_objective);
        println!("  constraints = {:?}", report.constraint_values);
        println!("  feasible    = {}", report.feasible);
        println!(
            "  over {} runs: best {:.6}, worst {:.6}, mean {:.6}, std {:.3e}",
            spec.runs, report.best, report.worst, report.stats.mean, report.stats.std
        );
    }
    Ok(())
}
