//! Parameter sensitivity: how population size and iteration budget affect
//! solution quality on a multimodal benchmark.

use duckswarm::harness::{cmd_sensitivity, ExperimentSpec};

fn main() -> duckswarm::Result<()> {
    let mut spec = ExperimentSpec::new("campaign_sensitivity");
    spec.problems = vec!["f9".into()];
    spec.runs = 5;

    // Small sweep for a quick demo; the CLI default sweeps
    // N in {30,50,80,100} and T in {200,500,1000,2000}.
    let cells = cmd_sensitivity(&spec, &[10, 30], &[50, 200])?;
    for c in &cells {
        println!(
            "{} N={:<3} T={:<4}: mean {:e}, std {:e}",
            c.problem, c.n_agents, c.max_iter, c.mean, c.std
        );
    }
    Ok(())
}
