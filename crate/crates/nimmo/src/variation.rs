//! Variation operators: uniform initialization, SBX crossover and
//! polynomial mutation.

use crate::error::{Error, Result};
use crate::pop::{Individual, Population};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::{clip_to_bounds, Bounds};

/// Control parameters of the variation operators.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorConfig {
    /// Crossover probability.
    pub p_c: f64,
    /// SBX distribution index.
    pub eta_c: f64,
    /// Per-variable mutation probability.
    pub p_m: f64,
    /// Mutation distribution index.
    pub eta_m: f64,
}

impl OperatorConfig {
    /// Protocol defaults: `p_c = 1`, `eta_c = 20`, `p_m = 1/D`, `eta_m = 20`.
    pub fn for_dimension(dim: usize) -> Self {
        OperatorConfig { p_c: 1.0, eta_c: 20.0, p_m: 1.0 / dim.max(1) as f64, eta_m: 20.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_c) || !(0.0..=1.0).contains(&self.p_m) {
            return Err(Error::config("crossover/mutation probabilities must lie in [0, 1]"));
        }
        if !(self.eta_c > 0.0) || !(self.eta_m > 0.0) {
            return Err(Error::config("distribution indices must be positive"));
        }
        Ok(())
    }
}

/// Samples `mu` individuals uniformly within the problem bounds and
/// evaluates each of them.
pub fn init_population(mu: usize, problem: &dyn Problem, rng: &mut RngStream) -> Result<Population> {
    if mu < 2 {
        return Err(Error::config(format!("population size must be at least 2, got {mu}")));
    }
    let b = problem.bounds();
    let mut members = Vec::with_capacity(mu);
    for _ in 0..mu {
        let x: Vec<f64> =
            (0..b.dim()).map(|j| rng.range(b.lower()[j], b.upper()[j])).collect();
        let f = problem.evaluate(&x);
        members.push(Individual::new(x, f));
    }
    Population::new(members)
}

fn sbx_spread_factor(u: f64, eta: f64) -> f64 {
    let exp = 1.0 / (eta + 1.0);
    if u <= 0.5 {
        (2.0 * u).powf(exp)
    } else {
        (1.0 / (2.0 * (1.0 - u))).powf(exp)
    }
}

/// SBX recombination before bound repair. Per variable, the spread-factor
/// formula is applied with probability 0.5 and preserves the parent mean.
fn sbx_recombine(
    p1: &[f64],
    p2: &[f64],
    cfg: &OperatorConfig,
    rng: &mut RngStream,
) -> (Vec<f64>, Vec<f64>) {
    if rng.next_f64() > cfg.p_c {
        return (p1.to_vec(), p2.to_vec());
    }
    let mut c1 = p1.to_vec();
    let mut c2 = p2.to_vec();
    for j in 0..p1.len() {
        if rng.next_f64() <= 0.5 {
            let beta = sbx_spread_factor(rng.next_f64(), cfg.eta_c);
            c1[j] = 0.5 * ((1.0 + beta) * p1[j] + (1.0 - beta) * p2[j]);
            c2[j] = 0.5 * ((1.0 - beta) * p1[j] + (1.0 + beta) * p2[j]);
        }
    }
    (c1, c2)
}

/// Simulated binary crossover with distribution index `eta_c`; children are
/// clipped to the bounds.
pub fn sbx_crossover(
    p1: &[f64],
    p2: &[f64],
    cfg: &OperatorConfig,
    b: &Bounds,
    rng: &mut RngStream,
) -> (Vec<f64>, Vec<f64>) {
    let (c1, c2) = sbx_recombine(p1, p2, cfg, rng);
    (clip_to_bounds(&c1, b), clip_to_bounds(&c2, b))
}

/// Bounded polynomial mutation with distribution index `eta_m`. Every
/// coordinate is perturbed independently with probability `p_m`; the result
/// is always feasible.
pub fn polynomial_mutation(
    x: &[f64],
    cfg: &OperatorConfig,
    b: &Bounds,
    rng: &mut RngStream,
) -> Vec<f64> {
    let mut out = x.to_vec();
    for j in 0..x.len() {
        if rng.next_f64() >= cfg.p_m {
            continue;
        }
        let lo = b.lower()[j];
        let hi = b.upper()[j];
        let width = hi - lo;
        let u = rng.next_f64();
        let exp = 1.0 / (cfg.eta_m + 1.0);
        let delta_q = if u < 0.5 {
            let d = (x[j] - lo) / width;
            let v = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d).powf(cfg.eta_m + 1.0);
            v.powf(exp) - 1.0
        } else {
            let d = (hi - x[j]) / width;
            let v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d).powf(cfg.eta_m + 1.0);
            1.0 - v.powf(exp)
        };
        out[j] = (x[j] + delta_q * width).clamp(lo, hi);
    }
    out
}
