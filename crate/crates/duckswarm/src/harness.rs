//! CSV experiment campaigns: seeded multi-run benchmarks, statistical
//! comparison reports, constrained-design runs, parameter sensitivity
//! sweeps, and box-plot data extraction.
//!
//! Every campaign writes flat files under [`ExperimentSpec::output_dir`]
//! with one-line headers and a `manifest.txt` recording the spec, the root
//! seed, and the crate version. Numeric columns use shortest round-trip
//! scientific notation, so re-reading a CSV reproduces the exact `f64`s.
//! Run `r` of a campaign always uses seed `root_seed + r`, which makes
//! campaigns reproducible cell by cell.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::benchmarks::{self, BenchmarkId};
use crate::constrained::{self, ConstrainedProblem};
use crate::error::{Error, Result};
use crate::metrics::{self, friedman, summarize, wilcoxon_rank_sum, SummaryStats};
use crate::problem::Problem;
use crate::run::{run, Algorithm, RunConfig, RunRecord};

/// A multi-run campaign description shared by all subcommands.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    /// Problem ids: benchmark ids (`f1`..`f18`) or constrained-design ids
    /// (`tbtp`, `sop`, `tsd`, `wbd`, `pvd`, `srd`).
    pub problems: Vec<String>,
    /// Algorithm ids: `dsa`, `pso`, `gwo`, `sca`.
    pub algorithms: Vec<String>,
    pub runs: usize,
    pub n_agents: usize,
    pub max_iter: usize,
    pub root_seed: u64,
    pub output_dir: PathBuf,
}

impl ExperimentSpec {
    /// Defaults: 30 agents, 200 iterations, 30 independent runs.
    pub fn new(output_dir: impl Into<PathBuf>) -> Self {
        Self {
            problems: Vec::new(),
            algorithms: vec!["dsa".to_string()],
            runs: 30,
            n_agents: 30,
            max_iter: 200,
            root_seed: 42,
            output_dir: output_dir.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() {
            return Err(Error::InvalidConfig("no problems selected".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected".into()));
        }
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be >= 1".into()));
        }
        // Resolve every id up front so typos fail before any work runs.
        for p in &self.problems {
            resolve_problem(p)?;
        }
        for a in &self.algorithms {
            Algorithm::from_str(a)?;
        }
        Ok(())
    }
}

/// One line of `results.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub problem: String,
    pub algorithm: String,
    pub run: usize,
    pub seed: u64,
    pub best_fitness: f64,
    pub elapsed_seconds: f64,
}

/// Looks an id up in the benchmark registry first (scalable functions at
/// their default dimension), then among the constrained designs (run in
/// their penalized form).
pub fn resolve_problem(id: &str) -> Result<Problem> {
    match benchmarks::benchmark_by_id(id, None) {
        Ok(p) => Ok(p),
        Err(Error::UnknownProblem(_)) => Ok(constrained::constrained_by_id(id)?.to_problem()),
        Err(e) => Err(e),
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:e}")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}

fn write_manifest(spec: &ExperimentSpec, command: &str) -> Result<()> {
    let mut m = String::new();
    writeln!(m, "command: {command}").unwrap();
    writeln!(m, "version: {}", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(m, "problems: {}", spec.problems.join(",")).unwrap();
    writeln!(m, "algorithms: {}", spec.algorithms.join(",")).unwrap();
    writeln!(m, "runs: {}", spec.runs).unwrap();
    writeln!(m, "agents: {}", spec.n_agents).unwrap();
    writeln!(m, "iters: {}", spec.max_iter).unwrap();
    writeln!(m, "seed: {}", spec.root_seed).unwrap();
    write_file(&spec.output_dir, "manifest.txt", &m)?;
    Ok(())
}

fn trace_csv(record: &RunRecord) -> String {
    let mut out = String::from("iteration,best_fitness,diversity,exploration_pct,exploitation_pct\n");
    let mut div_max = 0.0f64;
    for (t, (&fit, &div)) in record.convergence.iter().zip(&record.diversity).enumerate() {
        div_max = div_max.max(div);
        let split = metrics::xpl_xpt(div, div_max);
        writeln!(
            out,
            "{},{},{},{},{}",
            t + 1,
            fmt_f64(fit),
            fmt_f64(div),
            fmt_f64(split.exploration_pct),
            fmt_f64(split.exploitation_pct)
        )
        .unwrap();
    }
    out
}

/// Executes `runs × algorithms × problems` cells with derived seeds and
/// writes `results.csv`, `summary.csv`, per-run trace files, and
/// `manifest.txt`. Returns the result rows in file order.
pub fn cmd_bench(spec: &ExperimentSpec) -> Result<Vec<ResultRow>> {
    spec.validate()?;
    let mut rows = Vec::new();
    let mut results_csv =
        String::from("problem,algorithm,run,seed,best_fitness,elapsed_seconds\n");
    let mut summary_csv =
        String::from("problem,algorithm,runs,best,mean,std,mean_time_seconds\n");

    for problem_id in &spec.problems {
        let problem = resolve_problem(problem_id)?;
        for algo_id in &spec.algorithms {
            let algorithm = Algorithm::from_str(algo_id)?;
            let mut fits = Vec::with_capacity(spec.runs);
            let mut times = Vec::with_capacity(spec.runs);
            for r in 0..spec.runs {
                let seed = spec.root_seed + r as u64;
                let config = RunConfig::new(algorithm.clone(), spec.n_agents, spec.max_iter, seed);
                let record = run(&problem, &config)?;
                write_file(
                    &spec.output_dir,
                    &format!("trace_{problem_id}_{algo_id}_{r}.csv"),
                    &trace_csv(&record),
                )?;
                writeln!(
                    results_csv,
                    "{problem_id},{algo_id},{r},{seed},{},{}",
                    fmt_f64(record.best_fit),
                    fmt_f64(record.elapsed_seconds)
                )
                .unwrap();
                fits.push(record.best_fit);
                times.push(record.elapsed_seconds);
                rows.push(ResultRow {
                    problem: problem_id.clone(),
                    algorithm: algo_id.clone(),
                    run: r,
                    seed,
                    best_fitness: record.best_fit,
                    elapsed_seconds: record.elapsed_seconds,
                });
            }
            let stats = summarize(&fits, &times)?;
            writeln!(
                summary_csv,
                "{problem_id},{algo_id},{},{},{},{},{}",
                stats.m,
                fmt_f64(stats.best),
                fmt_f64(stats.mean),
                fmt_f64(stats.std),
                fmt_f64(stats.mean_time_seconds)
            )
            .unwrap();
        }
    }

    write_file(&spec.output_dir, "results.csv", &results_csv)?;
    write_file(&spec.output_dir, "summary.csv", &summary_csv)?;
    write_manifest(spec, "bench")?;
    Ok(rows)
}

/// Reads `results.csv` back from a campaign directory.
pub fn read_results(dir: &Path) -> Result<Vec<ResultRow>> {
    let path = dir.join("results.csv");
    let text = fs::read_to_string(&path)?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(Error::MalformedData(format!(
                "{}: line {} has {} fields, expected 6",
                path.display(),
                i + 1,
                fields.len()
            )));
        }
        let parse_err = |what: &str| {
            Error::MalformedData(format!("{}: line {}: bad {what}", path.display(), i + 1))
        };
        rows.push(ResultRow {
            problem: fields[0].to_string(),
            algorithm: fields[1].to_string(),
            run: fields[2].parse().map_err(|_| parse_err("run"))?,
            seed: fields[3].parse().map_err(|_| parse_err("seed"))?,
            best_fitness: fields[4].parse().map_err(|_| parse_err("best_fitness"))?,
            elapsed_seconds: fields[5].parse().map_err(|_| parse_err("elapsed_seconds"))?,
        });
    }
    Ok(rows)
}

/// Grouped view of result rows: problem -> algorithm -> fitness-by-run.
fn group_results(rows: &[ResultRow]) -> BTreeMap<String, BTreeMap<String, Vec<f64>>> {
    let mut grouped: BTreeMap<String, BTreeMap<String, Vec<f64>>> = BTreeMap::new();
    for row in rows {
        grouped
            .entry(row.problem.clone())
            .or_default()
            .entry(row.algorithm.clone())
            .or_default()
            .push(row.best_fitness);
    }
    grouped
}

/// Pairwise rank-sum comparison of one algorithm against the reference.
#[derive(Debug, Clone)]
pub struct WilcoxonRow {
    pub problem: String,
    pub algorithm: String,
    pub p_value: f64,
    pub h: u8,
    pub z_value: f64,
    pub identical: bool,
}

/// Rank table across algorithms, in the order of [`CompareReport::algorithms`].
#[derive(Debug, Clone)]
pub struct CompareReport {
    pub algorithms: Vec<String>,
    pub problems: Vec<String>,
    pub wilcoxon: Vec<WilcoxonRow>,
    pub friedman: metrics::FriedmanTable,
}

/// Reads a completed campaign from `spec.output_dir` and writes
/// `wilcoxon.csv` (each algorithm against `dsa`) and `friedman.csv`
/// (per-problem mean ranks plus totals, averages, and final ranks).
pub fn cmd_compare(spec: &ExperimentSpec) -> Result<CompareReport> {
    let rows = read_results(&spec.output_dir)?;
    if rows.is_empty() {
        return Err(Error::MalformedData("results.csv has no data rows".into()));
    }
    let grouped = group_results(&rows);
    let problems: Vec<String> = grouped.keys().cloned().collect();
    let algorithms: Vec<String> = grouped
        .values()
        .next()
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();

    let mut wilcoxon_rows = Vec::new();
    let mut wilcoxon_csv = String::from("problem,algorithm,p_value,h,z_value,identical\n");
    for (problem, per_algo) in &grouped {
        let Some(reference) = per_algo.get("dsa") else {
            return Err(Error::MalformedData(format!(
                "no dsa runs for problem {problem}; rank-sum comparisons are against dsa"
            )));
        };
        for (algo, fits) in per_algo {
            if algo == "dsa" {
                continue;
            }
            let w = wilcoxon_rank_sum(fits, reference)?;
            writeln!(
                wilcoxon_csv,
                "{problem},{algo},{},{},{},{}",
                fmt_f64(w.p_value),
                w.h,
                fmt_f64(w.z_value),
                w.identical
            )
            .unwrap();
            wilcoxon_rows.push(WilcoxonRow {
                problem: problem.clone(),
                algorithm: algo.clone(),
                p_value: w.p_value,
                h: w.h,
                z_value: w.z_value,
                identical: w.identical,
            });
        }
    }

    // Friedman input: per problem, per algorithm (fixed order), per run.
    let mut tensor = Vec::with_capacity(problems.len());
    for problem in &problems {
        let per_algo = &grouped[problem];
        let mut by_alg = Vec::with_capacity(algorithms.len());
        for algo in &algorithms {
            let fits = per_algo.get(algo).ok_or_else(|| {
                Error::MalformedData(format!("algorithm {algo} missing for problem {problem}"))
            })?;
            by_alg.push(fits.clone());
        }
        tensor.push(by_alg);
    }
    let table = friedman(&tensor)?;

    let mut friedman_csv = format!("problem,{}\n", algorithms.join(","));
    for (problem, ranks) in problems.iter().zip(&table.per_function_mean_ranks) {
        let cells: Vec<String> = ranks.iter().map(|&r| fmt_f64(r)).collect();
        writeln!(friedman_csv, "{problem},{}", cells.join(",")).unwrap();
    }
    let totals: Vec<String> = table.totals.iter().map(|&v| fmt_f64(v)).collect();
    writeln!(friedman_csv, "total,{}", totals.join(",")).unwrap();
    let averages: Vec<String> = table.averages.iter().map(|&v| fmt_f64(v)).collect();
    writeln!(friedman_csv, "average,{}", averages.join(",")).unwrap();
    let finals: Vec<String> = table.final_rank.iter().map(|r| r.to_string()).collect();
    writeln!(friedman_csv, "final_rank,{}", finals.join(",")).unwrap();

    write_file(&spec.output_dir, "wilcoxon.csv", &wilcoxon_csv)?;
    write_file(&spec.output_dir, "friedman.csv", &friedman_csv)?;

    Ok(CompareReport {
        algorithms,
        problems,
        wilcoxon: wilcoxon_rows,
        friedman: table,
    })
}

/// Outcome of a constrained-design campaign.
#[derive(Debug, Clone)]
pub struct EngineerReport {
    pub problem: String,
    /// Decision vector of the best run.
    pub best_x: Vec<f64>,
    /// Raw (unpenalized) objective at `best_x`.
    pub best_objective: f64,
    pub constraint_values: Vec<f64>,
    pub feasible: bool,
    pub best: f64,
    pub worst: f64,
    pub stats: SummaryStats,
}

/// Runs one constrained design problem through its penalized objective and
/// writes per-run results plus the best decision vector with all
/// constraint values.
pub fn cmd_engineer(problem_id: &str, spec: &ExperimentSpec) -> Result<EngineerReport> {
    let cp: ConstrainedProblem = constrained::constrained_by_id(problem_id)?;
    let problem = cp.to_problem();
    if spec.runs == 0 {
        return Err(Error::InvalidConfig("runs must be >= 1".into()));
    }

    let mut fits = Vec::with_capacity(spec.runs);
    let mut times = Vec::with_capacity(spec.runs);
    let mut best_record: Option<RunRecord> = None;
    let mut runs_csv = String::from("problem,algorithm,run,seed,best_fitness,elapsed_seconds\n");
    for r in 0..spec.runs {
        let seed = spec.root_seed + r as u64;
        let config = RunConfig::new(Algorithm::dsa(), spec.n_agents, spec.max_iter, seed);
        let record = run(&problem, &config)?;
        writeln!(
            runs_csv,
            "{problem_id},dsa,{r},{seed},{},{}",
            fmt_f64(record.best_fit),
            fmt_f64(record.elapsed_seconds)
        )
        .unwrap();
        fits.push(record.best_fit);
        times.push(record.elapsed_seconds);
        if best_record.as_ref().map_or(true, |b| record.best_fit < b.best_fit) {
            best_record = Some(record);
        }
    }
    let best_record = best_record.expect("runs >= 1");
    let stats = summarize(&fits, &times)?;
    let worst = fits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    let best_x = best_record.best_pos.clone();
    let best_objective = cp.objective(&best_x);
    let constraint_values = cp.constraint_values(&best_x);
    let feasible = cp.is_feasible(&best_x, 1e-6);

    let mut solution_csv = String::from("field,value\n");
    for (i, v) in best_x.iter().enumerate() {
        writeln!(solution_csv, "x{},{}", i + 1, fmt_f64(*v)).unwrap();
    }
    writeln!(solution_csv, "objective,{}", fmt_f64(best_objective)).unwrap();
    for (i, g) in constraint_values.iter().enumerate() {
        writeln!(solution_csv, "g{},{}", i + 1, fmt_f64(*g)).unwrap();
    }
    writeln!(solution_csv, "feasible,{feasible}").unwrap();
    writeln!(solution_csv, "best,{}", fmt_f64(stats.best)).unwrap();
    writeln!(solution_csv, "worst,{}", fmt_f64(worst)).unwrap();
    writeln!(solution_csv, "mean,{}", fmt_f64(stats.mean)).unwrap();
    writeln!(solution_csv, "std,{}", fmt_f64(stats.std)).unwrap();

    write_file(&spec.output_dir, &format!("engineer_{problem_id}_runs.csv"), &runs_csv)?;
    write_file(
        &spec.output_dir,
        &format!("engineer_{problem_id}_solution.csv"),
        &solution_csv,
    )?;
    let mut spec_echo = spec.clone();
    spec_echo.problems = vec![problem_id.to_string()];
    write_manifest(&spec_echo, "engineer")?;

    Ok(EngineerReport {
        problem: problem_id.to_string(),
        best_x,
        best_objective,
        constraint_values,
        feasible,
        best: stats.best,
        worst,
        stats,
    })
}

/// One cell of a sensitivity sweep.
#[derive(Debug, Clone)]
pub struct SensitivityCell {
    pub problem: String,
    pub n_agents: usize,
    pub max_iter: usize,
    pub mean: f64,
    pub std: f64,
}

pub const SENSITIVITY_AGENTS: [usize; 4] = [30, 50, 80, 100];
pub const SENSITIVITY_ITERS: [usize; 4] = [200, 500, 1000, 2000];
const SENSITIVITY_FIXED_ITERS: usize = 500;
const SENSITIVITY_FIXED_AGENTS: usize = 30;

/// Population-size sweep at a fixed iteration count plus iteration-count
/// sweep at a fixed population size. Writes `sensitivity_agents.csv` and
/// `sensitivity_iters.csv` with mean/std per cell.
pub fn cmd_sensitivity(
    spec: &ExperimentSpec,
    agents: &[usize],
    iters: &[usize],
) -> Result<Vec<SensitivityCell>> {
    if spec.problems.is_empty() {
        return Err(Error::InvalidConfig("no problems selected".into()));
    }
    let mut cells = Vec::new();
    let mut agents_csv = String::from("problem,n_agents,max_iter,mean,std\n");
    let mut iters_csv = String::from("problem,n_agents,max_iter,mean,std\n");

    let sweep = |problem_id: &str,
                     n_agents: usize,
                     max_iter: usize,
                     out_csv: &mut String,
                     cells: &mut Vec<SensitivityCell>|
     -> Result<()> {
        let problem = resolve_problem(problem_id)?;
        let mut fits = Vec::with_capacity(spec.runs);
        let mut times = Vec::with_capacity(spec.runs);
        for r in 0..spec.runs {
            let config =
                RunConfig::new(Algorithm::dsa(), n_agents, max_iter, spec.root_seed + r as u64);
            let record = run(&problem, &config)?;
            fits.push(record.best_fit);
            times.push(record.elapsed_seconds);
        }
        let stats = summarize(&fits, &times)?;
        writeln!(
            out_csv,
            "{problem_id},{n_agents},{max_iter},{},{}",
            fmt_f64(stats.mean),
            fmt_f64(stats.std)
        )
        .unwrap();
        cells.push(SensitivityCell {
            problem: problem_id.to_string(),
            n_agents,
            max_iter,
            mean: stats.mean,
            std: stats.std,
        });
        Ok(())
    };

    for problem_id in &spec.problems {
        for &n in agents {
            sweep(problem_id, n, SENSITIVITY_FIXED_ITERS, &mut agents_csv, &mut cells)?;
        }
        for &t in iters {
            sweep(problem_id, SENSITIVITY_FIXED_AGENTS, t, &mut iters_csv, &mut cells)?;
        }
    }

    write_file(&spec.output_dir, "sensitivity_agents.csv", &agents_csv)?;
    write_file(&spec.output_dir, "sensitivity_iters.csv", &iters_csv)?;
    write_manifest(spec, "sensitivity")?;
    Ok(cells)
}

/// Five-number summary of one problem × algorithm cell.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxplotRow {
    pub problem: String,
    pub algorithm: String,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

/// Nearest-rank quantile of a sorted sample: the smallest value at rank
/// `ceil(p * n)` (1-based). No interpolation.
pub fn nearest_rank(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let rank = (p * sorted.len() as f64).ceil() as usize;
    sorted[rank.max(1) - 1]
}

/// Reads a completed campaign and writes `boxplot.csv`: per problem ×
/// algorithm, the five-number summary followed by the raw fitness list
/// (space-separated, in run order).
pub fn cmd_boxplot(spec: &ExperimentSpec) -> Result<Vec<BoxplotRow>> {
    let rows = read_results(&spec.output_dir)?;
    if rows.is_empty() {
        return Err(Error::MalformedData("results.csv has no data rows".into()));
    }
    let grouped = group_results(&rows);
    let mut out = Vec::new();
    let mut csv = String::from("problem,algorithm,min,q1,median,q3,max,values\n");
    for (problem, per_algo) in &grouped {
        for (algo, fits) in per_algo {
            let mut sorted = fits.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite fitness"));
            let row = BoxplotRow {
                problem: problem.clone(),
                algorithm: algo.clone(),
                min: sorted[0],
                q1: nearest_rank(&sorted, 0.25),
                median: nearest_rank(&sorted, 0.5),
                q3: nearest_rank(&sorted, 0.75),
                max: *sorted.last().unwrap(),
            };
            let raw: Vec<String> = fits.iter().map(|&v| fmt_f64(v)).collect();
            writeln!(
                csv,
                "{problem},{algo},{},{},{},{},{},{}",
                fmt_f64(row.min),
                fmt_f64(row.q1),
                fmt_f64(row.median),
                fmt_f64(row.q3),
                fmt_f64(row.max),
                raw.join(" ")
            )
            .unwrap();
            out.push(row);
        }
    }
    write_file(&spec.output_dir, "boxplot.csv", &csv)?;
    Ok(out)
}

/// One value from the bundled literature results (best/mean/std/time per
/// benchmark × algorithm, eight algorithms including four that this crate
/// does not implement). `source` is always `"published"`, distinguishing
/// these from live runs when tables are mixed.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedRow {
    pub function: BenchmarkId,
    pub algorithm: String,
    pub statistic: String,
    pub value: f64,
    pub source: String,
}

/// Loads the bundled literature comparison table.
pub fn published_results() -> Vec<PublishedRow> {
    let text = include_str!("../data/published_results.csv");
    text.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            PublishedRow {
                function: f[0].parse().expect("bundled data id"),
                algorithm: f[1].to_string(),
                statistic: f[2].to_string(),
                value: f[3].parse().expect("bundled data value"),
                source: f[4].to_string(),
            }
        })
        .collect()
}

/// Looks one statistic up in the bundled literature table.
pub fn published_value(function: BenchmarkId, algorithm: &str, statistic: &str) -> Option<f64> {
    published_results()
        .into_iter()
        .find(|r| r.function == function && r.algorithm == algorithm && r.statistic == statistic)
        .map(|r| r.value)
}

/// Parses a plain `key=value` configuration file (same keys as the CLI
/// flags: problems, algos, runs, agents, iters, seed, out). Lines starting
/// with `#` and blank lines are ignored.
pub fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::InvalidConfig(format!(
                "{}: line {}: expected key=value, got {line:?}",
                path.display(),
                i + 1
            )));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

/// Applies config-file values to a spec; values already set by flags win,
/// so pass `None` for flags the user did not give.
pub fn apply_config(spec: &mut ExperimentSpec, config: &BTreeMap<String, String>) -> Result<()> {
    let bad = |key: &str, value: &str| {
        Error::InvalidConfig(format!("config key {key}: cannot parse {value:?}"))
    };
    for (key, value) in config {
        match key.as_str() {
            "problems" => {
                spec.problems = value.split(',').map(|s| s.trim().to_string()).collect();
            }
            "algos" => {
                spec.algorithms = value.split(',').map(|s| s.trim().to_string()).collect();
            }
            "runs" => spec.runs = value.parse().map_err(|_| bad(key, value))?,
            "agents" => spec.n_agents = value.parse().map_err(|_| bad(key, value))?,
            "iters" => spec.max_iter = value.parse().map_err(|_| bad(key, value))?,
            "seed" => spec.root_seed = value.parse().map_err(|_| bad(key, value))?,
            "out" => spec.output_dir = PathBuf::from(value),
            other => {
                return Err(Error::InvalidConfig(format!("unknown config key {other:?}")));
            }
        }
    }
    Ok(())
}
