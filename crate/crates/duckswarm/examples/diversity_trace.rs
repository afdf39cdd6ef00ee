//! Exploration/exploitation balance over a run: converts the population
//! diversity trace into percentage splits against the running maximum.

use duckswarm::benchmarks::benchmark_by_id;
use duckswarm::metrics::xpl_xpt;
use duckswarm::{run, Algorithm, RunConfig};

fn main() -> duckswarm::Result<()> {
    let problem = benchmark_by_id("f10", Some(30))?;
    let config = RunConfig::new(Algorithm::dsa(), 30, 200, 7);
    let record = run(&problem, &config)?;

    println!("iter  diversity      exploration%  exploitation%");
    let mut div_max = 0.0f64;
    for (t, &div) in record.diversity.iter().enumerate() {
        div_max = div_max.max(div);
        let split = xpl_xpt(div, div_max);
        if (t + 1) % 25 == 0 || t == 0 {
            println!(
                "{:>4}  {:<13.6e} {:>10.2}    {:>10.2}",
                t + 1,
                div,
                split.exploration_pct,
                split.exploitation_pct
            );
        }
    }
    println!("\nfinal best: {:e}", record.best_fit);
    Ok(())
}
