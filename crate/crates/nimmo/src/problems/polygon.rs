//! Polygon and RPolygon: K congruent regular M-gons, objective `i` is the
//! distance to vertex `i` of the nearest polygon. The Pareto set is the
//! union of the K polygon interiors, each one an equivalent subset.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::{euclidean_distance, Bounds};

/// Placement of the polygon centers on a grid inside a square.
#[derive(Debug, Clone)]
pub struct PolygonLayout {
    pub rows: usize,
    pub cols: usize,
    /// Side length of the square solution space `[0, extent]^2`.
    pub extent: f64,
    /// Circumradius of every polygon.
    pub circumradius: f64,
}

impl Default for PolygonLayout {
    fn default() -> Self {
        // centers 33.3 apart; radius 8 keeps every in-polygon point strictly
        // closer to all of its own vertices than to any other polygon's
        PolygonLayout { rows: 3, cols: 3, extent: 100.0, circumradius: 8.0 }
    }
}

#[derive(Debug, Clone)]
pub struct PolygonProblem {
    name: String,
    m: usize,
    vertices: Vec<Vec<[f64; 2]>>,
    centers: Vec<[f64; 2]>,
    circumradius: f64,
    bounds: Bounds,
    ps_box: Bounds,
}

/// Builds a Polygon (`rotated = false`) or RPolygon (`rotated = true`)
/// instance with `m` objectives and `k` equivalent polygons. Polygon `k` of
/// the rotated variant is turned by `k * pi / (2K)`.
pub fn make_polygon(
    m: usize,
    k: usize,
    layout: PolygonLayout,
    rotated: bool,
) -> Result<Box<dyn Problem>> {
    Ok(Box::new(PolygonProblem::new(m, k, layout, rotated)?))
}

impl PolygonProblem {
    pub fn new(m: usize, k: usize, layout: PolygonLayout, rotated: bool) -> Result<Self> {
        if m < 3 {
            return Err(Error::Construction(format!("polygon needs M >= 3 objectives, got {m}")));
        }
        if k < 1 || layout.rows * layout.cols < k {
            return Err(Error::Construction(format!(
                "layout {}x{} cannot place {k} polygons",
                layout.rows, layout.cols
            )));
        }
        let dx = layout.extent / layout.cols as f64;
        let dy = layout.extent / layout.rows as f64;
        if dx.min(dy) <= 4.0 * layout.circumradius {
            // closer spacing lets a neighbor polygon capture a vertex distance
            return Err(Error::Construction(format!(
                "grid spacing {:.3} must exceed four circumradii ({:.3}); polygons would overlap",
                dx.min(dy),
                4.0 * layout.circumradius
            )));
        }
        let mut centers = Vec::with_capacity(k);
        'outer: for r in 0..layout.rows {
            for c in 0..layout.cols {
                if centers.len() == k {
                    break 'outer;
                }
                centers.push([dx * (c as f64 + 0.5), dy * (r as f64 + 0.5)]);
            }
        }
        let vertices: Vec<Vec<[f64; 2]>> = centers
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let theta = if rotated { idx as f64 * PI / (2.0 * k as f64) } else { 0.0 };
                (0..m)
                    .map(|i| {
                        let a = 2.0 * PI * i as f64 / m as f64 + theta;
                        [c[0] + layout.circumradius * a.cos(), c[1] + layout.circumradius * a.sin()]
                    })
                    .collect()
            })
            .collect();
        let bounds = Bounds::uniform(2, 0.0, layout.extent)?;
        let all: Vec<Vec<f64>> =
            vertices.iter().flatten().map(|v| vec![v[0], v[1]]).collect();
        let ps_box = Bounds::enclosing(&all)?;
        let name = format!("{}polygon-{m}", if rotated { "r" } else { "" });
        Ok(PolygonProblem { name, m, vertices, centers, circumradius: layout.circumradius, bounds, ps_box })
    }

    pub fn polygon_count(&self) -> usize {
        self.centers.len()
    }

    pub fn center(&self, k: usize) -> [f64; 2] {
        self.centers[k]
    }

    pub fn vertices(&self, k: usize) -> &[[f64; 2]] {
        &self.vertices[k]
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    /// Point-in-polygon test for polygon `k` (boundary counts as inside).
    pub fn contains(&self, k: usize, x: &[f64]) -> bool {
        let verts = &self.vertices[k];
        let n = verts.len();
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let cross = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
            if cross < -1e-12 {
                return false;
            }
        }
        true
    }
}

impl Problem for PolygonProblem {
    fn name(&self) -> &str {
        &self.name
    }

    fn num_objectives(&self) -> usize {
        self.m
    }

    fn num_variables(&self) -> usize {
        2
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn n_same(&self) -> usize {
        self.centers.len()
    }

    fn ps_box(&self) -> &Bounds {
        &self.ps_box
    }

    fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        (0..self.m)
            .map(|i| {
                self.vertices
                    .iter()
                    .map(|poly| euclidean_distance(x, &poly[i]))
                    .fold(f64::INFINITY, f64::min)
            })
            .collect()
    }

    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
        // uniform over the union of congruent polygons: pick a polygon, then
        // a fan triangle, then a uniform point in the triangle
        let k = rng.index(self.centers.len());
        let c = self.centers[k];
        let verts = &self.vertices[k];
        let i = rng.index(verts.len());
        let a = verts[i];
        let b = verts[(i + 1) % verts.len()];
        let r1 = rng.next_f64().sqrt();
        let r2 = rng.next_f64();
        let px = (1.0 - r1) * c[0] + r1 * (1.0 - r2) * a[0] + r1 * r2 * b[0];
        let py = (1.0 - r1) * c[1] + r1 * (1.0 - r2) * a[1] + r1 * r2 * b[1];
        Some(vec![px, py])
    }
}
