//! Thin command-line front end over [`duckswarm::harness`].
//!
//! Exit status: 0 on success, 2 on configuration errors (unknown ids, bad
//! flags or config files), 1 on runtime failures.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use duckswarm::harness::{
    apply_config, cmd_bench, cmd_boxplot, cmd_compare, cmd_engineer, cmd_sensitivity,
    parse_config_file, ExperimentSpec, SENSITIVITY_AGENTS, SENSITIVITY_ITERS,
};

#[derive(Parser)]
#[command(name = "dsa-harness", version, about = "Seeded swarm-optimization experiment campaigns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonFlags {
    /// Comma-separated problem ids (f1..f18, tbtp, sop, tsd, wbd, pvd, srd)
    #[arg(long, value_delimiter = ',')]
    problems: Vec<String>,
    /// Comma-separated algorithm ids (dsa, pso, gwo, sca)
    #[arg(long, value_delimiter = ',')]
    algos: Vec<String>,
    /// Independent runs per cell
    #[arg(long)]
    runs: Option<usize>,
    /// Population size
    #[arg(long)]
    agents: Option<usize>,
    /// Iterations per run
    #[arg(long)]
    iters: Option<usize>,
    /// Root seed; run r uses seed root+r
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for CSV files
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value config file; explicit flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a multi-run campaign and write results/summary/trace CSVs
    Bench(CommonFlags),
    /// Rank-sum and rank-table reports over an existing campaign
    Compare(CommonFlags),
    /// Constrained design problems with penalty handling
    Engineer(CommonFlags),
    /// Population-size and iteration-count sweeps
    Sensitivity(CommonFlags),
    /// Five-number summaries per problem x algorithm
    Boxplot(CommonFlags),
}

fn build_spec(flags: &CommonFlags) -> Result<ExperimentSpec, duckswarm::Error> {
    let mut spec = ExperimentSpec::new("campaign");
    if let Some(path) = &flags.config {
        let file: BTreeMap<String, String> = parse_config_file(path)?;
        apply_config(&mut spec, &file)?;
    }
    if !flags.problems.is_empty() {
        spec.problems = flags.problems.clone();
    }
    if !flags.algos.is_empty() {
        spec.algorithms = flags.algos.clone();
    }
    if let Some(runs) = flags.runs {
        spec.runs = runs;
    }
    if let Some(agents) = flags.agents {
        spec.n_agents = agents;
    }
    if let Some(iters) = flags.iters {
        spec.max_iter = iters;
    }
    if let Some(seed) = flags.seed {
        spec.root_seed = seed;
    }
    if let Some(out) = &flags.out {
        spec.output_dir = out.clone();
    }
    Ok(spec)
}

fn dispatch(command: &Command) -> Result<(), duckswarm::Error> {
    match command {
        Command::Bench(flags) => {
            let spec = build_spec(flags)?;
            let rows = cmd_bench(&spec)?;
            println!("wrote {} result rows to {}", rows.len(), spec.output_dir.display());
        }
        Command::Compare(flags) => {
            let spec = build_spec(flags)?;
            let report = cmd_compare(&spec)?;
            for (problem, ranks) in report.problems.iter().zip(&report.friedman.per_function_mean_ranks) {
                let cells: Vec<String> = report
                    .algorithms
                    .iter()
                    .zip(ranks)
                    .map(|(a, r)| format!("{a}={r:.2}"))
                    .collect();
                println!("{problem}: {}", cells.join(" "));
            }
            println!("wrote wilcoxon.csv and friedman.csv to {}", spec.output_dir.display());
        }
        Command::Engineer(flags) => {
            let spec = build_spec(flags)?;
            if spec.problems.is_empty() {
                return Err(duckswarm::Error::InvalidConfig("no problems selected".into()));
            }
            for id in &spec.problems {
                let report = cmd_engineer(id, &spec)?;
                println!(
                    "{id}: best {:.6} (feasible: {}), mean {:.6}, std {:.3e}",
                    report.best_objective, report.feasible, report.stats.mean, report.stats.std
                );
            }
        }
        Command::Sensitivity(flags) => {
            let spec = build_spec(flags)?;
            let cells = cmd_sensitivity(&spec, &SENSITIVITY_AGENTS, &SENSITIVITY_ITERS)?;
            for c in &cells {
                println!(
                    "{} N={} T={}: mean {:e} std {:e}",
                    c.problem, c.n_agents, c.max_iter, c.mean, c.std
                );
            }
        }
        Command::Boxplot(flags) => {
            let spec = build_spec(flags)?;
            let rows = cmd_boxplot(&spec)?;
            println!("wrote boxplot.csv ({} cells) to {}", rows.len(), spec.output_dir.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
