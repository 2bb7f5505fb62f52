//! Experiment harness: declarative batch specs, a seeded parallel runner,
//! mean/median/rank aggregation and CSV export.
//!
//! A batch is a cross product of problems, algorithm settings and run
//! indices. Every run gets an independent seed derived from the base seed
//! and its `(problem, algorithm, run)` coordinates, so results are
//! reproducible row by row regardless of worker count or scheduling.

mod aggregate;
mod export;
mod runner;
mod spec;

pub use aggregate::{friedman_ranks, indicator_direction, summarize, Direction, SummaryRow, INDICATORS};
pub use export::{export_results, format_value, read_csv, write_csv};
pub use runner::{run_experiment, run_experiment_on, ExperimentResults, RunFailure, RunRecord};
pub use spec::{load_spec, mu_for_objectives, parse_spec, AlgorithmSpec, ExperimentSpec};
