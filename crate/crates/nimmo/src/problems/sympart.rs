//! The three SYM-PART problems: a quadratic two-objective pair replicated
//! over a 3x3 tile grid, giving nine equivalent Pareto subsets (line
//! segments). Variant 2 rotates the space by 45 degrees; variant 3
//! additionally distorts the rotated coordinates, bending the segments.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::Bounds;

const A: f64 = 1.0;
const B: f64 = 10.0;
const C: f64 = 8.0;
/// Tile pitch along the first axis.
const PITCH: f64 = C + 2.0 * A;

#[derive(Debug, Clone)]
pub struct SymPart {
    variant: u8,
    name: String,
    bounds: Bounds,
    ps_box: Bounds,
    /// Rotation angle (0 for variant 1, pi/4 otherwise).
    angle: f64,
}

/// Builds SYM-PART variant 1, 2 or 3.
pub fn make_sympart(variant: u8) -> Result<Box<dyn Problem>> {
    Ok(Box::new(SymPart::new(variant)?))
}

impl SymPart {
    pub fn new(variant: u8) -> Result<Self> {
        if !(1..=3).contains(&variant) {
            return Err(Error::Construction(format!("SYM-PART variant must be 1..=3, got {variant}")));
        }
        let angle = if variant == 1 { 0.0 } else { PI / 4.0 };
        let bounds = Bounds::uniform(2, -20.0, 20.0)?;
        let mut p = SymPart {
            variant,
            name: format!("sympart{variant}"),
            bounds,
            ps_box: Bounds::uniform(2, -1.0, 1.0)?, // placeholder
            angle,
        };
        // bounding box of the Pareto segments, swept densely in closed form
        let mut pts = Vec::new();
        for ti in -1..=1 {
            for tj in -1..=1 {
                for step in 0..=400 {
                    let s = -A + 2.0 * A * step as f64 / 400.0;
                    pts.push(p.pareto_point(ti, tj, s));
                }
            }
        }
        let mut ps_box = Bounds::enclosing(&pts)?;
        // pad against parameter-sweep discretization
        ps_box = Bounds::new(
            ps_box.lower().iter().map(|v| v - 1e-6).collect(),
            ps_box.upper().iter().map(|v| v + 1e-6).collect(),
        )?;
        p.ps_box = ps_box;
        Ok(p)
    }

    /// Rotated (and, for variant 3, distorted) tile coordinates.
    fn tile_coords(&self, x: &[f64]) -> (f64, f64) {
        let (z1, z2) = if self.angle == 0.0 {
            (x[0], x[1])
        } else {
            let (s, c) = self.angle.sin_cos();
            (c * x[0] - s * x[1], s * x[0] + c * x[1])
        };
        if self.variant == 3 {
            (z1, z2 * (1.0 + z1.abs() / PITCH))
        } else {
            (z1, z2)
        }
    }

    /// Inverse of `tile_coords`, used to place Pareto samples.
    fn from_tile_coords(&self, z1: f64, z2: f64) -> Vec<f64> {
        let (z1, z2) =
            if self.variant == 3 { (z1, z2 / (1.0 + z1.abs() / PITCH)) } else { (z1, z2) };
        if self.angle == 0.0 {
            vec![z1, z2]
        } else {
            let (s, c) = self.angle.sin_cos();
            vec![c * z1 + s * z2, -s * z1 + c * z2]
        }
    }

    /// Pareto point of tile `(ti, tj)` at segment parameter `s in [-A, A]`.
    fn pareto_point(&self, ti: i32, tj: i32, s: f64) -> Vec<f64> {
        self.from_tile_coords(ti as f64 * PITCH + s, tj as f64 * B)
    }

    pub fn tile_pitch() -> (f64, f64) {
        (PITCH, B)
    }
}

fn tile_index(v: f64, half_gap: f64, pitch: f64) -> f64 {
    let t = v.signum() * ((v.abs() - half_gap) / pitch).ceil();
    t.clamp(-1.0, 1.0)
}

impl Problem for SymPart {
    fn name(&self) -> &str {
        &self.name
    }

    fn num_objectives(&self) -> usize {
        2
    }

    fn num_variables(&self) -> usize {
        2
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn n_same(&self) -> usize {
        9
    }

    fn ps_box(&self) -> &Bounds {
        &self.ps_box
    }

    fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        let (z1, z2) = self.tile_coords(x);
        let t1 = tile_index(z1, A + C / 2.0, PITCH);
        let t2 = tile_index(z2, B / 2.0, B);
        let p1 = z1 - t1 * PITCH;
        let p2 = z2 - t2 * B;
        let f1 = (p1 + A) * (p1 + A) + p2 * p2;
        let f2 = (p1 - A) * (p1 - A) + p2 * p2;
        vec![f1, f2]
    }

    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
        let ti = rng.index(3) as i32 - 1;
        let tj = rng.index(3) as i32 - 1;
        let s = rng.range(-A, A);
        Some(self.pareto_point(ti, tj, s))
    }
}
