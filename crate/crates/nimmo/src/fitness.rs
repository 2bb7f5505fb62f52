//! Objective normalization, binary quality indicators and exponential
//! fitness assignment over a candidate set.
//!
//! The fitness of `x` in a set `R` is the sum over every other member `y` of
//! `exp(-I(y, x) / (kappa * I_max))`, where `I` is a Pareto dominance
//! preserving binary indicator computed on objectives normalized over
//! exactly `R`, and `I_max` is the largest absolute indicator value among
//! all ordered pairs of `R`. Smaller fitness is better.

use crate::error::{Error, Result};

/// Which binary indicator drives the fitness assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndicatorKind {
    /// Additive epsilon indicator.
    EpsilonPlus,
    /// Pairwise hypervolume-difference indicator.
    Hd,
}

/// Fitness assignment scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct FitnessScheme {
    pub kind: IndicatorKind,
    /// Scale factor of the exponent, conventionally 0.05.
    pub kappa: f64,
    /// Reference point for the HD indicator, in normalized objective space.
    /// `None` uses 1.1 in every objective.
    pub hd_reference: Option<Vec<f64>>,
}

impl Default for FitnessScheme {
    fn default() -> Self {
        FitnessScheme { kind: IndicatorKind::EpsilonPlus, kappa: 0.05, hd_reference: None }
    }
}

impl FitnessScheme {
    pub fn hd() -> Self {
        FitnessScheme { kind: IndicatorKind::Hd, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.kappa > 0.0) {
            return Err(Error::config("kappa must be positive"));
        }
        Ok(())
    }
}

/// Objective vectors affinely mapped per objective to `[0, 1]`, together
/// with the extrema of the source set.
#[derive(Debug, Clone)]
pub struct NormalizedSet {
    pub members: Vec<Vec<f64>>,
    pub f_min: Vec<f64>,
    pub f_max: Vec<f64>,
}

/// Maps every objective of the set to `[0, 1]` using extrema over exactly
/// this set. An objective whose extrema coincide maps to 0 for all members.
pub fn normalize_objectives(r: &[Vec<f64>]) -> Result<NormalizedSet> {
    if r.len() < 2 {
        return Err(Error::contract("normalization requires at least two members"));
    }
    let m = r[0].len();
    let mut f_min = vec![f64::INFINITY; m];
    let mut f_max = vec![f64::NEG_INFINITY; m];
    for v in r {
        if v.len() != m {
            return Err(Error::contract("objective vectors must share one length"));
        }
        for i in 0..m {
            f_min[i] = f_min[i].min(v[i]);
            f_max[i] = f_max[i].max(v[i]);
        }
    }
    let members = r
        .iter()
        .map(|v| {
            (0..m)
                .map(|i| {
                    let w = f_max[i] - f_min[i];
                    if w > 0.0 {
                        (v[i] - f_min[i]) / w
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    Ok(NormalizedSet { members, f_min, f_max })
}

/// Additive epsilon indicator on normalized vectors: the minimal uniform
/// translation after which `y` weakly dominates `x`.
pub fn eps_plus(y_n: &[f64], x_n: &[f64]) -> f64 {
    debug_assert_eq!(y_n.len(), x_n.len());
    let mut best = f64::NEG_INFINITY;
    for (a, b) in y_n.iter().zip(x_n) {
        let d = a - b;
        if d > best {
            best = d;
        }
    }
    best
}

/// Hypervolume (w.r.t. `reference`) of the region dominated by `x_n` and not
/// by `y_n`. Closed form for a pair of points in any dimension.
pub fn hd_indicator(y_n: &[f64], x_n: &[f64], reference: &[f64]) -> Result<f64> {
    if y_n.len() != x_n.len() || x_n.len() != reference.len() {
        return Err(Error::contract("hd indicator requires equal-length vectors"));
    }
    for i in 0..reference.len() {
        if !(reference[i] > x_n[i] && reference[i] > y_n[i]) {
            return Err(Error::contract(
                "hd reference point must be strictly above both points in every objective",
            ));
        }
    }
    let mut vol_x = 1.0;
    let mut overlap = 1.0;
    for i in 0..reference.len() {
        vol_x *= reference[i] - x_n[i];
        overlap *= reference[i] - x_n[i].max(y_n[i]);
    }
    Ok(vol_x - overlap)
}

/// Result of a fitness assignment. `degenerate` flags the all-identical
/// fallback where every member gets fitness `|R| - 1`.
#[derive(Debug, Clone)]
pub struct FitnessOutcome {
    pub values: Vec<f64>,
    pub degenerate: bool,
}

/// Reusable buffers for the per-iteration fitness assignment.
#[derive(Debug, Default)]
pub(crate) struct FitnessScratch {
    norm: Vec<f64>,
    f_min: Vec<f64>,
    f_max: Vec<f64>,
    indicator: Vec<f64>,
    pub(crate) values: Vec<f64>,
}

impl FitnessScratch {
    /// Fitness over the objective vectors in `objs` (n rows of length m),
    /// writing into `self.values`. Returns the degenerate flag.
    pub(crate) fn assign<'a, O>(&mut self, objs: &[O], scheme: &FitnessScheme) -> Result<bool>
    where
        O: AsRef<[f64]>,
    {
        let n = objs.len();
        if n < 2 {
            return Err(Error::contract("fitness assignment requires at least two members"));
        }
        let m = objs[0].as_ref().len();
        self.f_min.clear();
        self.f_min.resize(m, f64::INFINITY);
        self.f_max.clear();
        self.f_max.resize(m, f64::NEG_INFINITY);
        for o in objs {
            let o = o.as_ref();
            if o.len() != m {
                return Err(Error::contract("objective vectors must share one length"));
            }
            for i in 0..m {
                self.f_min[i] = self.f_min[i].min(o[i]);
                self.f_max[i] = self.f_max[i].max(o[i]);
            }
        }
        self.norm.clear();
        self.norm.reserve(n * m);
        for o in objs {
            let o = o.as_ref();
            for i in 0..m {
                let w = self.f_max[i] - self.f_min[i];
                self.norm.push(if w > 0.0 { (o[i] - self.f_min[i]) / w } else { 0.0 });
            }
        }

        // ordered-pair indicator matrix, row y, column x
        self.indicator.clear();
        self.indicator.resize(n * n, 0.0);
        let hd_ref = vec![1.1; m];
        let hd_ref = match (&scheme.kind, &scheme.hd_reference) {
            (IndicatorKind::Hd, Some(r)) => r.clone(),
            _ => hd_ref,
        };
        let mut i_max = 0.0f64;
        for yi in 0..n {
            let y = &self.norm[yi * m..(yi + 1) * m];
            for xi in 0..n {
                if xi == yi {
                    continue;
                }
                let x = &self.norm[xi * m..(xi + 1) * m];
                let v = match scheme.kind {
                    IndicatorKind::EpsilonPlus => eps_plus(y, x),
                    IndicatorKind::Hd => hd_indicator(y, x, &hd_ref)?,
                };
                self.indicator[yi * n + xi] = v;
                let a = v.abs();
                if a > i_max {
                    i_max = a;
                }
            }
        }

        self.values.clear();
        if i_max == 0.0 {
            // all members identical in objective space: flag a flat tie
            self.values.resize(n, (n - 1) as f64);
            return Ok(true);
        }
        let scale = 1.0 / (scheme.kappa * i_max);
        for xi in 0..n {
            let mut fit = 0.0;
            for yi in 0..n {
                if yi != xi {
                    fit += (-self.indicator[yi * n + xi] * scale).exp();
                }
            }
            self.values.push(fit);
        }
        Ok(false)
    }
}

/// Assigns a fitness value to every member of `r` (objective vectors),
/// normalizing over exactly `r`. Smaller is better.
pub fn assign_fitness(r: &[Vec<f64>], scheme: &FitnessScheme) -> Result<FitnessOutcome> {
    scheme.validate()?;
    let mut scratch = FitnessScratch::default();
    let degenerate = scratch.assign(r, scheme)?;
    Ok(FitnessOutcome { values: scratch.values, degenerate })
}
