//! Command-line front end: batch runs, reference-set generation, scoring of
//! stored archives and neighborhood/population sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use nimmo::assessment::score;
use nimmo::experiment::{
    export_results, format_value, load_spec, run_experiment, AlgorithmSpec, ExperimentResults,
    ExperimentSpec, RunFailure, SummaryRow,
};
use nimmo::problems::{by_name, generate_reference_sets, read_points, write_points, ReferenceSet};
use nimmo::RngStream;

#[derive(Parser)]
#[command(name = "nimmo", version, about = "Niching indicator-based optimizer and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an experiment batch described by a TOML spec.
    Run(RunArgs),
    /// Generate reference sets for benchmark problems.
    Refset(RefsetArgs),
    /// Score a stored archive against reference-set files.
    Score(ScoreArgs),
    /// Run a neighborhood- or population-size sweep.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct Overrides {
    /// Base seed, overriding the spec.
    #[arg(long)]
    seed: Option<u64>,
    /// Runs per (problem, algorithm) cell, overriding the spec.
    #[arg(long)]
    runs: Option<usize>,
    /// Evaluation budget per run, overriding the spec.
    #[arg(long)]
    budget: Option<usize>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl Overrides {
    fn apply(&self, spec: &mut ExperimentSpec) {
        if let Some(seed) = self.seed {
            spec.seed = seed;
        }
        if let Some(runs) = self.runs {
            spec.runs = runs;
        }
        if let Some(budget) = self.budget {
            spec.budget = budget;
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Experiment spec (TOML).
    #[arg(long)]
    spec: PathBuf,
    /// Output directory for CSV summaries, archives and reference sets.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Args)]
struct RefsetArgs {
    /// Problem name; repeatable.
    #[arg(long = "problem", required = true)]
    problems: Vec<String>,
    /// Points per reference set.
    #[arg(long, default_value_t = 5_000)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory; writes <problem>.sol and <problem>.obj.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ScoreArgs {
    /// Archive solutions (D columns).
    #[arg(long)]
    sol: PathBuf,
    /// Archive objectives (M columns).
    #[arg(long)]
    obj: PathBuf,
    /// Reference Pareto-set points (D columns).
    #[arg(long = "ref-sol")]
    ref_sol: PathBuf,
    /// Reference Pareto-front points (M columns).
    #[arg(long = "ref-obj")]
    ref_obj: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    /// Base spec; its algorithm list is replaced by the sweep.
    #[arg(long)]
    spec: PathBuf,
    /// Swept parameter: `t` (neighborhood fraction) or `mu` (population).
    #[arg(long)]
    param: String,
    /// Comma-separated values of the swept parameter.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<String>,
    /// Archives larger than this are thinned by max-min selection in
    /// normalized solution space before scoring.
    #[arg(long, default_value_t = 100)]
    subset: usize,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    overrides: Overrides,
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<bool> {
    match Cli::parse().cmd {
        Cmd::Run(args) => cmd_run(args),
        Cmd::Refset(args) => cmd_refset(args).map(|()| true),
        Cmd::Score(args) => cmd_score(args).map(|()| true),
        Cmd::Sweep(args) => cmd_sweep(args),
    }
}

fn report(out: &PathBuf, summary: &[SummaryRow], failures: &[RunFailure]) -> bool {
    for row in summary {
        println!(
            "{} {} {}: mean {} median {} rank {}",
            row.problem,
            row.algorithm,
            row.indicator,
            format_value(row.mean),
            format_value(row.median),
            row.rank
        );
    }
    println!("results written to {}", out.display());
    for f in failures {
        eprintln!("run failed: {}/{} run {}: {}", f.problem, f.algorithm, f.run, f.message);
    }
    failures.is_empty()
}

fn cmd_run(args: RunArgs) -> Result<bool> {
    let mut spec = load_spec(&args.spec)?;
    args.overrides.apply(&mut spec);
    let results = run_experiment(&spec, args.overrides.workers)?;
    let summary = export_results(&args.out, &spec, &results)?;
    Ok(report(&args.out, &summary, &results.failures))
}

fn cmd_refset(args: RefsetArgs) -> Result<()> {
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;
    for name in &args.problems {
        let problem = by_name(name)?;
        let mut rng = RngStream::new(args.seed);
        let refs = generate_reference_sets(problem.as_ref(), args.size, &mut rng)?;
        let canonical = problem.name().to_string();
        write_points(&args.out.join(format!("{canonical}.sol")), &refs.sol)?;
        write_points(&args.out.join(format!("{canonical}.obj")), &refs.obj)?;
        println!("{canonical}: {} reference points", args.size);
    }
    Ok(())
}

fn cmd_score(args: ScoreArgs) -> Result<()> {
    let reference =
        ReferenceSet { sol: read_points(&args.ref_sol)?, obj: read_points(&args.ref_obj)? };
    let archive_sol = read_points(&args.sol)?;
    let archive_obj = read_points(&args.obj)?;
    let report = score(&reference, &archive_sol, &archive_obj)?;
    println!("igd,igdx,cr,psp,archive_size");
    println!(
        "{},{},{},{},{}",
        format_value(report.igd),
        format_value(report.igdx),
        format_value(report.cr),
        format_value(report.psp),
        report.archive_size
    );
    Ok(())
}

fn algorithm(name: String, t_fraction: Option<f64>) -> AlgorithmSpec {
    AlgorithmSpec { name, t: None, t_fraction, indicator: None, kappa: None }
}

fn cmd_sweep(args: SweepArgs) -> Result<bool> {
    let mut base = load_spec(&args.spec)?;
    args.overrides.apply(&mut base);
    base.subset_size = Some(args.subset);

    match args.param.as_str() {
        "t" => {
            let mut algorithms = Vec::new();
            for v in &args.values {
                let f: f64 = v.parse().with_context(|| format!("bad t fraction `{v}`"))?;
                algorithms.push(algorithm(format!("t_{v}"), Some(f)));
            }
            base.algorithms = algorithms;
            let results = run_experiment(&base, args.overrides.workers)?;
            let summary = export_results(&args.out, &base, &results)?;
            Ok(report(&args.out, &summary, &results.failures))
        }
        "mu" => {
            // population size is global to a batch, so sweep values run as
            // separate batches and merge into one result set
            let mut merged: Option<ExperimentResults> = None;
            let mut algorithms = Vec::new();
            for v in &args.values {
                let mu: usize = v.parse().with_context(|| format!("bad mu `{v}`"))?;
                let mut spec = base.clone();
                spec.mu = Some(mu);
                spec.algorithms = vec![algorithm(format!("mu_{v}"), None)];
                algorithms.push(algorithm(format!("mu_{v}"), None));
                let results = run_experiment(&spec, args.overrides.workers)?;
                match merged.as_mut() {
                    None => merged = Some(results),
                    Some(m) => {
                        m.records.extend(results.records);
                        m.failures.extend(results.failures);
                    }
                }
            }
            let results = merged.expect("at least one sweep value");
            base.algorithms = algorithms;
            let summary = export_results(&args.out, &base, &results)?;
            Ok(report(&args.out, &summary, &results.failures))
        }
        other => bail!("unknown sweep parameter `{other}` (expected `t` or `mu`)"),
    }
}
