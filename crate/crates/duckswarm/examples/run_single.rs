//! One seeded optimization run on a single benchmark, printing the
//! convergence trace every 20 iterations.

use duckswarm::benchmarks::benchmark_by_id;
use duckswarm::{run, Algorithm, RunConfig};

fn main() -> duckswarm::Result<()> {
    let problem = benchmark_by_id("f9", Some(30))?;
    let config = RunConfig::new(Algorithm::dsa(), 30, 200, 42);
    let record = run(&problem, &config)?;

    println!("problem: {} (dim {})", problem.name(), problem.dim());
    for (t, best) in record.convergence.iter().enumerate() {
        if (t + 1) % 20 == 0 {
            println!("iter {:>4}: best {:e}", t + 1, best);
        }
    }
    println!("final best: {:e} (seed {})", record.best_fit, record.seed);
    Ok(())
}
