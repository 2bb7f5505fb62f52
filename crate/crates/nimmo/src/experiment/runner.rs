//! Seeded parallel execution of a batch.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rayon::prelude::*;

use crate::algorithm::{run, AlgorithmConfig};
use crate::assessment::{score, subset_select, IndicatorReport};
use crate::error::{Error, Result};
use crate::experiment::spec::{mu_for_objectives, ExperimentSpec};
use crate::problems::{by_name, generate_reference_sets, Problem, ReferenceSet};
use crate::rng::{derive_seed, RngStream};

/// One successfully scored run.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub problem: String,
    pub algorithm: String,
    pub run: usize,
    pub seed: u64,
    pub report: IndicatorReport,
    pub archive_sol: Vec<Vec<f64>>,
    pub archive_obj: Vec<Vec<f64>>,
}

/// One run that errored or panicked; the rest of the batch continues.
#[derive(Debug, Clone)]
pub struct RunFailure {
    pub problem: String,
    pub algorithm: String,
    pub run: usize,
    pub message: String,
}

#[derive(Debug)]
pub struct ExperimentResults {
    /// Successful runs, sorted by (problem, algorithm, run) in spec order.
    pub records: Vec<RunRecord>,
    pub failures: Vec<RunFailure>,
    /// Reference sets per problem, in spec order.
    pub references: Vec<(String, ReferenceSet)>,
}

/// Resolves the spec's problem names and runs the batch on `workers`
/// threads (0 = one per core).
pub fn run_experiment(spec: &ExperimentSpec, workers: usize) -> Result<ExperimentResults> {
    spec.validate()?;
    let problems: Vec<Box<dyn Problem>> =
        spec.problems.iter().map(|n| by_name(n)).collect::<Result<_>>()?;
    run_experiment_on(&problems, spec, workers)
}

/// Runs the batch on pre-built problem instances (paired positionally with
/// `spec.problems` for naming in the output).
pub fn run_experiment_on(
    problems: &[Box<dyn Problem>],
    spec: &ExperimentSpec,
    workers: usize,
) -> Result<ExperimentResults> {
    spec.validate()?;
    if problems.len() != spec.problems.len() {
        return Err(Error::contract("problem instances must match the spec list"));
    }

    // reference sets are generated up front, one derived seed per problem
    let references: Vec<(String, ReferenceSet)> = problems
        .iter()
        .enumerate()
        .map(|(p, problem)| {
            let mut rng = RngStream::new(derive_seed(spec.seed, &[p as u64]));
            let refs = generate_reference_sets(problem.as_ref(), spec.reference_size, &mut rng)?;
            Ok((problem.name().to_string(), refs))
        })
        .collect::<Result<_>>()?;

    let mut tasks = Vec::new();
    for p in 0..problems.len() {
        for a in 0..spec.algorithms.len() {
            for r in 0..spec.runs {
                tasks.push((p, a, r));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::config(format!("worker pool: {e}")))?;
    let outcomes: Vec<std::result::Result<RunRecord, RunFailure>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(p, a, r)| {
                let problem = problems[p].as_ref();
                let alg = &spec.algorithms[a];
                let seed = derive_seed(spec.seed, &[p as u64, a as u64, r as u64]);
                let attempt = catch_unwind(AssertUnwindSafe(|| {
                    single_run(problem, spec, a, seed, &references[p].1)
                }));
                let flat = match attempt {
                    Ok(Ok(record)) => Ok(record),
                    Ok(Err(e)) => Err(e.to_string()),
                    Err(panic) => Err(panic_message(panic)),
                };
                flat.map(|(report, archive_sol, archive_obj)| RunRecord {
                    problem: problem.name().to_string(),
                    algorithm: alg.name.clone(),
                    run: r,
                    seed,
                    report,
                    archive_sol,
                    archive_obj,
                })
                .map_err(|message| RunFailure {
                    problem: problem.name().to_string(),
                    algorithm: alg.name.clone(),
                    run: r,
                    message,
                })
            })
            .collect()
    });

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(rec) => records.push(rec),
            Err(fail) => failures.push(fail),
        }
    }
    // par_iter preserves task order, but sort anyway so the contract does
    // not depend on rayon internals
    let pos = |problem: &str, algorithm: &str| {
        let p = spec.problems.iter().position(|n| by_name_alias(n) == by_name_alias(problem));
        let a = spec.algorithms.iter().position(|s| s.name == algorithm);
        (p, a)
    };
    records.sort_by_key(|rec| {
        let (p, a) = pos(&rec.problem, &rec.algorithm);
        (p, a, rec.run)
    });
    failures.sort_by_key(|f| {
        let (p, a) = pos(&f.problem, &f.algorithm);
        (p, a, f.run)
    });
    Ok(ExperimentResults { records, failures, references })
}

/// Canonical lowercase form so spec names and `Problem::name` compare equal.
fn by_name_alias(name: &str) -> String {
    name.to_ascii_lowercase().replace('-', "")
}

type RunPayload = (IndicatorReport, Vec<Vec<f64>>, Vec<Vec<f64>>);

fn single_run(
    problem: &dyn Problem,
    spec: &ExperimentSpec,
    alg_index: usize,
    seed: u64,
    references: &ReferenceSet,
) -> Result<RunPayload> {
    let alg = &spec.algorithms[alg_index];
    let mu = spec.mu.unwrap_or_else(|| mu_for_objectives(problem.num_objectives()));
    let t = alg.neighborhood(mu)?.min(mu);
    let mut cfg = AlgorithmConfig::new(mu, t, spec.budget, seed);
    cfg.scheme = alg.scheme();
    let result = run(problem, &cfg)?;

    let mut archive_sol: Vec<Vec<f64>> =
        result.nondominated.iter().map(|ind| ind.x.clone()).collect();
    let mut archive_obj: Vec<Vec<f64>> =
        result.nondominated.iter().map(|ind| ind.f.clone()).collect();
    if let Some(k) = spec.subset_size {
        if archive_sol.len() > k {
            let picked = subset_select(&archive_sol, k, problem.bounds())?;
            archive_sol = picked.iter().map(|&i| archive_sol[i].clone()).collect();
            archive_obj = picked.iter().map(|&i| archive_obj[i].clone()).collect();
        }
    }
    let report = score(references, &archive_sol, &archive_obj)?;
    Ok((report, archive_sol, archive_obj))
}

fn panic_message(panic: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = panic.downcast_ref::<&str>() {
        format!("panic: {s}")
    } else if let Some(s) = panic.downcast_ref::<String>() {
        format!("panic: {s}")
    } else {
        "panic: <non-string payload>".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::spec::parse_spec;
    use crate::space::Bounds;

    fn tiny_spec() -> ExperimentSpec {
        parse_spec(
            r#"
            problems = ["sympart1", "mmf2"]
            runs = 2
            budget = 120
            seed = 11
            reference_size = 60
            mu = 12

            [[algorithm]]
            name = "nimmo"

            [[algorithm]]
            name = "ibea"
            t_fraction = 1.0
            "#,
        )
        .unwrap()
    }

    #[test]
    fn batch_runs_all_cells_in_order() {
        let spec = tiny_spec();
        let results = run_experiment(&spec, 2).unwrap();
        assert!(results.failures.is_empty());
        assert_eq!(results.records.len(), 8);
        assert_eq!(results.references.len(), 2);
        let coords: Vec<(String, String, usize)> = results
            .records
            .iter()
            .map(|r| (r.problem.clone(), r.algorithm.clone(), r.run))
            .collect();
        let mut expected = Vec::new();
        for p in ["sympart1", "mmf2"] {
            for a in ["nimmo", "ibea"] {
                for r in 0..2 {
                    expected.push((p.to_string(), a.to_string(), r));
                }
            }
        }
        assert_eq!(coords, expected);
        for rec in &results.records {
            assert!(rec.report.igd.is_finite());
            assert!(rec.report.igdx.is_finite());
            assert!(!rec.archive_sol.is_empty());
            assert_eq!(rec.archive_sol.len(), rec.archive_obj.len());
        }
    }

    #[test]
    fn results_do_not_depend_on_worker_count() {
        let spec = tiny_spec();
        let one = run_experiment(&spec, 1).unwrap();
        let four = run_experiment(&spec, 4).unwrap();
        assert_eq!(one.records.len(), four.records.len());
        for (a, b) in one.records.iter().zip(&four.records) {
            assert_eq!(a.seed, b.seed);
            assert_eq!(a.archive_sol, b.archive_sol);
            assert_eq!(a.report, b.report);
        }
    }

    #[test]
    fn subset_size_caps_scored_archives() {
        let mut spec = tiny_spec();
        spec.subset_size = Some(3);
        let results = run_experiment(&spec, 1).unwrap();
        assert!(results.records.iter().all(|r| r.archive_sol.len() <= 3));
        assert!(results.records.iter().all(|r| r.report.archive_size <= 3));
    }

    /// A problem that panics on a marked evaluation, to exercise isolation.
    #[derive(Debug)]
    struct Exploding {
        bounds: Bounds,
    }

    impl Problem for Exploding {
        fn name(&self) -> &str {
            "exploding"
        }
        fn num_objectives(&self) -> usize {
            2
        }
        fn num_variables(&self) -> usize {
            1
        }
        fn bounds(&self) -> &Bounds {
            &self.bounds
        }
        fn n_same(&self) -> usize {
            1
        }
        fn ps_box(&self) -> &Bounds {
            &self.bounds
        }
        fn evaluate(&self, x: &[f64]) -> Vec<f64> {
            assert!(x[0] < 0.95, "synthetic failure");
            vec![x[0], 1.0 - x[0]]
        }
        fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
            Some(vec![rng.range(0.0, 0.9)])
        }
    }

    #[test]
    fn panicking_runs_are_isolated_as_failures() {
        let spec = parse_spec(
            r#"
            problems = ["exploding"]
            runs = 6
            budget = 80
            seed = 3
            reference_size = 20
            mu = 8
            [[algorithm]]
            name = "nimmo"
            "#,
        )
        .unwrap();
        let problems: Vec<Box<dyn Problem>> =
            vec![Box::new(Exploding { bounds: Bounds::uniform(1, 0.0, 1.0).unwrap() })];
        let results = run_experiment_on(&problems, &spec, 2).unwrap();
        assert!(!results.failures.is_empty(), "some run must hit the panic");
        assert_eq!(results.records.len() + results.failures.len(), 6);
        for f in &results.failures {
            assert!(f.message.contains("synthetic failure"), "{}", f.message);
        }
    }

    #[test]
    fn unknown_problem_is_rejected_up_front() {
        let spec = parse_spec(
            "problems = [\"nope\"]\n[[algorithm]]\nname = \"a\"",
        )
        .unwrap();
        assert!(run_experiment(&spec, 1).is_err());
    }
}
