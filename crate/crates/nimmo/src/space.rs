//! Box-bounded decision space, Pareto dominance and distances.

use crate::error::{Error, Result};

/// Closed per-variable bounds of the decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::contract(format!(
                "bounds need matching nonempty vectors, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) {
                return Err(Error::contract(format!(
                    "bounds require lower < upper, variable {j} has [{lo}, {hi}]"
                )));
            }
        }
        Ok(Bounds { lower, upper })
    }

    /// Same interval `[lo, hi]` for every one of `dim` variables.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Bounds::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| *v >= *lo && *v <= *hi)
    }

    /// Axis-aligned bounding box of a point set.
    pub fn enclosing(points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map(|p| p.len()).ok_or_else(|| Error::contract("empty point set"))?;
        let mut lower = vec![f64::INFINITY; dim];
        let mut upper = vec![f64::NEG_INFINITY; dim];
        for p in points {
            for j in 0..dim {
                lower[j] = lower[j].min(p[j]);
                upper[j] = upper[j].max(p[j]);
            }
        }
        // degenerate axes get a hair of width so the invariant holds
        for j in 0..dim {
            if lower[j] >= upper[j] {
                upper[j] = lower[j] + f64::EPSILON.max(lower[j].abs() * f64::EPSILON);
            }
        }
        Bounds::new(lower, upper)
    }
}

/// Pareto dominance for minimization: `a` dominates `b` iff `a` is no worse
/// in every objective and strictly better in at least one.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    if a.is_empty() || a.len() != b.len() {
        return Err(Error::contract(format!(
            "dominance needs equal-length nonempty vectors, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(dominates_unchecked(a, b))
}

pub(crate) fn dominates_unchecked(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (ai, bi) in a.iter().zip(b) {
        if ai > bi {
            return false;
        }
        if ai < bi {
            strict = true;
        }
    }
    strict
}

/// Plain Euclidean distance.
pub fn euclidean_distance(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Euclidean distance after mapping every coordinate to `[0, 1]` via the
/// bounds. Result lies in `[0, sqrt(D)]`.
pub fn normalized_euclidean_distance(x: &[f64], y: &[f64], b: &Bounds) -> Result<f64> {
    if !b.contains(x) || !b.contains(y) {
        return Err(Error::contract("normalized distance requires in-bounds inputs"));
    }
    Ok(normalized_euclidean_distance_unchecked(x, y, b))
}

pub(crate) fn normalized_euclidean_distance_unchecked(x: &[f64], y: &[f64], b: &Bounds) -> f64 {
    let mut acc = 0.0;
    for j in 0..b.dim() {
        let w = b.upper()[j] - b.lower()[j];
        let d = (x[j] - y[j]) / w;
        acc += d * d;
    }
    acc.sqrt()
}

/// Clamps every coordinate into its bound interval.
pub fn clip_to_bounds(x: &[f64], b: &Bounds) -> Vec<f64> {
    debug_assert_eq!(x.len(), b.dim());
    x.iter()
        .zip(b.lower())
        .zip(b.upper())
        .map(|((v, lo), hi)| v.clamp(*lo, *hi))
        .collect()
}
