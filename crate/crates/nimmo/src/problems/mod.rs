//! Multi-modal benchmark problems and reference-set generation.
//!
//! Every problem is a bounded vector-to-vector objective function with
//! metadata: objective count `M`, variable count `D`, the number of
//! equivalent Pareto subsets `n_same`, and the per-variable bounding box of
//! the true Pareto set (used by the cover-rate indicator).

mod mmf;
mod omnitest;
mod polygon;
mod refset;
mod sympart;
mod twoonone;

pub use mmf::{make_mmf, Mmf};
pub use omnitest::{make_omnitest, OmniTest};
pub use polygon::{make_polygon, PolygonLayout, PolygonProblem};
pub use refset::{
    farthest_point_subset, generate_reference_sets, read_points, write_points, ReferenceSet,
};
pub use sympart::{make_sympart, SymPart};
pub use twoonone::{make_two_on_one, TwoOnOne};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::space::Bounds;

/// A benchmark problem. Evaluation is pure, total on the bounds, and
/// thread-safe.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;
    fn num_objectives(&self) -> usize;
    fn num_variables(&self) -> usize;
    fn bounds(&self) -> &Bounds;
    /// Number of equivalent Pareto subsets.
    fn n_same(&self) -> usize;
    /// Per-variable range of the true Pareto set.
    fn ps_box(&self) -> &Bounds;
    fn evaluate(&self, x: &[f64]) -> Vec<f64>;
    /// One point drawn uniformly from the (analytic) Pareto set, or `None`
    /// if the problem has no sampler.
    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>>;
}

/// Builds a suite problem from its canonical name, e.g. `sympart1`,
/// `omni-test`, `two-on-one`, `mmf4`, `polygon-15`, `rpolygon-3`.
pub fn by_name(name: &str) -> Result<Box<dyn Problem>> {
    let lower = name.to_ascii_lowercase();
    let parse_m = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::config(format!("bad objective count in problem `{name}`")))
    };
    match lower.as_str() {
        "two-on-one" | "twoonone" => Ok(Box::new(make_two_on_one())),
        "omni-test" | "omnitest" => Ok(Box::new(make_omnitest(5)?)),
        "sympart1" | "sym-part1" => make_sympart(1),
        "sympart2" | "sym-part2" => make_sympart(2),
        "sympart3" | "sym-part3" => make_sympart(3),
        _ => {
            if let Some(id) = lower.strip_prefix("mmf") {
                let id: usize = id
                    .parse()
                    .map_err(|_| Error::config(format!("unknown problem `{name}`")))?;
                return Ok(Box::new(make_mmf(id)?));
            }
            if let Some(m) = lower.strip_prefix("polygon-") {
                return make_polygon(parse_m(m)?, 9, PolygonLayout::default(), false);
            }
            if let Some(m) = lower.strip_prefix("rpolygon-") {
                return make_polygon(parse_m(m)?, 9, PolygonLayout::default(), true);
            }
            Err(Error::config(format!("unknown problem `{name}`")))
        }
    }
}

/// All 23 instances of the benchmark suite.
pub fn suite_names() -> Vec<String> {
    let mut names = vec![
        "two-on-one".to_string(),
        "omni-test".to_string(),
        "sympart1".to_string(),
        "sympart2".to_string(),
        "sympart3".to_string(),
    ];
    names.extend((1..=8).map(|i| format!("mmf{i}")));
    for m in [3, 5, 8, 10, 15] {
        names.push(format!("polygon-{m}"));
    }
    for m in [3, 5, 8, 10, 15] {
        names.push(format!("rpolygon-{m}"));
    }
    names
}
