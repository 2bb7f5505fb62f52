//! Reference sets for the assessment indicators, plus the plain-text point
//! file format used to persist them: one point per line, columns separated
//! by whitespace, `#` starts a comment line.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::euclidean_distance;

/// Paired reference sets of one problem: `sol` lives in decision space
/// (`D` columns), `obj` in objective space (`M` columns).
#[derive(Debug, Clone)]
pub struct ReferenceSet {
    pub sol: Vec<Vec<f64>>,
    pub obj: Vec<Vec<f64>>,
}

/// Draws `n` points from the problem's Pareto-set sampler for the solution
/// reference, and thins a 4x oversample of their objective images down to `n`
/// by greedy farthest-point selection so the objective reference is spread
/// evenly along the front.
pub fn generate_reference_sets(
    problem: &dyn Problem,
    n: usize,
    rng: &mut RngStream,
) -> Result<ReferenceSet> {
    if n == 0 {
        return Err(Error::config("reference set size must be positive"));
    }
    let sample = |rng: &mut RngStream| -> Result<Vec<f64>> {
        problem
            .sample_pareto_set(rng)
            .ok_or_else(|| Error::Unsupported(problem.name().to_string()))
    };
    let mut sol = Vec::with_capacity(n);
    for _ in 0..n {
        sol.push(sample(rng)?);
    }
    let pool: Vec<Vec<f64>> = (0..4 * n)
        .map(|_| sample(rng).map(|x| problem.evaluate(&x)))
        .collect::<Result<_>>()?;
    let picked = farthest_point_subset(&pool, n);
    let obj = picked.into_iter().map(|i| pool[i].clone()).collect();
    Ok(ReferenceSet { sol, obj })
}

/// Greedy max-min (farthest-point) subset: start from the first point, then
/// repeatedly add the point whose distance to the selected set is largest.
/// Returns indices into `points` in selection order.
pub fn farthest_point_subset(points: &[Vec<f64>], k: usize) -> Vec<usize> {
    if points.is_empty() || k == 0 {
        return Vec::new();
    }
    let k = k.min(points.len());
    let mut selected = Vec::with_capacity(k);
    selected.push(0);
    let mut min_dist: Vec<f64> =
        points.iter().map(|p| euclidean_distance(p, &points[0])).collect();
    while selected.len() < k {
        let (next, _) = min_dist
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap().then(b.0.cmp(&a.0)))
            .unwrap();
        selected.push(next);
        for (d, p) in min_dist.iter_mut().zip(points) {
            *d = d.min(euclidean_distance(p, &points[next]));
        }
    }
    selected
}

/// Number of single-linkage clusters at the given merge threshold.
#[cfg(test)]
pub(crate) fn cluster_count(points: &[Vec<f64>], threshold: f64) -> usize {
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if euclidean_distance(&points[i], &points[j]) <= threshold {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Reads a point file. Lines starting with `#` (after leading whitespace)
/// and blank lines are skipped; every remaining line must have the same
/// number of whitespace-separated finite values.
pub fn read_points(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let row: Vec<f64> = trimmed
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>().map_err(|_| {
                    Error::parse(path, format!("line {}: bad number `{tok}`", lineno + 1))
                })
            })
            .collect::<Result<_>>()?;
        if let Some(first) = points.first() {
            if row.len() != first.len() {
                return Err(Error::parse(
                    path,
                    format!(
                        "line {}: expected {} columns, found {}",
                        lineno + 1,
                        first.len(),
                        row.len()
                    ),
                ));
            }
        }
        points.push(row);
    }
    if points.is_empty() {
        return Err(Error::parse(path, "no points in file"));
    }
    Ok(points)
}

/// Writes a point file in the format accepted by [`read_points`], with 12
/// significant digits per value.
pub fn write_points(path: &Path, points: &[Vec<f64>]) -> Result<()> {
    let mut out = Vec::new();
    for p in points {
        let line: Vec<String> = p.iter().map(|v| format!("{v:.11e}")).collect();
        writeln!(out, "{}", line.join(" ")).expect("in-memory write");
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}
