//! The eight MMF problems: two-variable, two-objective functions whose
//! Pareto sets are two or four equivalent curve sheets related by a mirror
//! symmetry in `x1` and/or a translation in `x2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::Bounds;

#[derive(Debug, Clone)]
pub struct Mmf {
    id: usize,
    name: String,
    bounds: Bounds,
    ps_box: Bounds,
    n_same: usize,
}

pub fn make_mmf(id: usize) -> Result<Mmf> {
    if !(1..=8).contains(&id) {
        return Err(Error::Construction(format!("MMF id must be 1..=8, got {id}")));
    }
    let (bounds, ps_x2, n_same) = match id {
        1 => (Bounds::new(vec![1.0, -1.0], vec![3.0, 1.0])?, (-1.0, 1.0), 2),
        2 => (Bounds::new(vec![0.0, 0.0], vec![1.0, 2.0])?, (0.0, 2.0), 2),
        3 => (Bounds::new(vec![0.0, 0.0], vec![1.0, 1.5])?, (0.0, 1.5), 2),
        4 => (Bounds::new(vec![-1.0, 0.0], vec![1.0, 2.0])?, (0.0, 2.0), 4),
        5 => (Bounds::new(vec![1.0, -1.0], vec![3.0, 3.0])?, (-1.0, 3.0), 4),
        6 => (Bounds::new(vec![1.0, -1.0], vec![3.0, 2.0])?, (-1.0, 2.0), 4),
        7 => (Bounds::new(vec![1.0, -1.0], vec![3.0, 1.0])?, (-0.95, 0.95), 2),
        8 => (Bounds::new(vec![-PI, 0.0], vec![PI, 9.0])?, (0.0, 4.0 + PI), 4),
        _ => unreachable!(),
    };
    let x1 = (bounds.lower()[0], bounds.upper()[0]);
    let ps_box = Bounds::new(vec![x1.0, ps_x2.0], vec![x1.1, ps_x2.1])?;
    Ok(Mmf { id, name: format!("mmf{id}"), bounds, ps_box, n_same })
}

/// Oscillatory penalty term shared by MMF2/MMF3.
fn wave_penalty(t: f64) -> f64 {
    2.0 * (4.0 * t * t - 2.0 * (20.0 * t * PI / 2f64.sqrt()).cos() + 2.0)
}

/// Of the two sheet offsets, the signed deviation with smaller magnitude.
fn nearest_sheet_deviation(x2: f64, base: f64, shift: f64) -> f64 {
    let t0 = x2 - base;
    let t1 = x2 - shift - base;
    if t0.abs() <= t1.abs() {
        t0
    } else {
        t1
    }
}

impl Mmf {
    /// Pareto-set curve of the base sheet, `x2* = base(x1)`.
    fn base_curve(&self, x1: f64) -> f64 {
        match self.id {
            1 | 5 | 6 => (6.0 * PI * (x1 - 2.0).abs() + PI).sin(),
            2 | 3 => x1.sqrt(),
            4 => (PI * x1.abs()).sin(),
            7 => {
                let d = (x1 - 2.0).abs();
                let amp = 0.3 * d * d * (24.0 * PI * d + 4.0 * PI).cos() + 0.6 * d;
                amp * (6.0 * PI * d + PI).sin()
            }
            8 => x1.abs().sin() + x1.abs(),
            _ => unreachable!(),
        }
    }

    /// Translation between equivalent sheets along `x2` (0 if single sheet).
    fn sheet_shift(&self) -> f64 {
        match self.id {
            2 | 4 | 6 => 1.0,
            3 => 0.5,
            5 => 2.0,
            8 => 4.0,
            _ => 0.0,
        }
    }

    /// Mirror map in `x1` relating equivalent sheets, if any.
    pub fn x1_mirror(&self, x1: f64) -> Option<f64> {
        match self.id {
            1 | 5 | 6 | 7 => Some(4.0 - x1),
            4 | 8 => Some(-x1),
            _ => None,
        }
    }
}

impl Problem for Mmf {
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
        self.n_same
    }

    fn ps_box(&self) -> &Bounds {
        &self.ps_box
    }

    fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        let (x1, x2) = (x[0], x[1]);
        match self.id {
            1 => {
                let f1 = (x1 - 2.0).abs();
                let t = x2 - self.base_curve(x1);
                vec![f1, 1.0 - f1.sqrt() + 2.0 * t * t]
            }
            2 => {
                let y = if x2 > 1.0 { x2 - 1.0 } else { x2 };
                let t = y - x1.sqrt();
                vec![x1, 1.0 - x1.sqrt() + wave_penalty(t)]
            }
            3 => {
                let t = nearest_sheet_deviation(x2, x1.sqrt(), 0.5);
                vec![x1, 1.0 - x1.sqrt() + wave_penalty(t)]
            }
            4 => {
                let y = if x2 > 1.0 { x2 - 1.0 } else { x2 };
                let t = y - (PI * x1.abs()).sin();
                vec![x1.abs(), 1.0 - x1 * x1 + 2.0 * t * t]
            }
            5 => {
                let f1 = (x1 - 2.0).abs();
                let y = if x2 > 1.0 { x2 - 2.0 } else { x2 };
                let t = y - self.base_curve(x1);
                vec![f1, 1.0 - f1.sqrt() + 2.0 * t * t]
            }
            6 => {
                let f1 = (x1 - 2.0).abs();
                let t = nearest_sheet_deviation(x2, self.base_curve(x1), 1.0);
                vec![f1, 1.0 - f1.sqrt() + 2.0 * t * t]
            }
            7 => {
                let f1 = (x1 - 2.0).abs();
                let t = x2 - self.base_curve(x1);
                vec![f1, 1.0 - f1.sqrt() + 2.0 * t * t]
            }
            8 => {
                let f1 = x1.abs().sin();
                let y = if x2 > 4.0 { x2 - 4.0 } else { x2 };
                let t = y - self.base_curve(x1);
                vec![f1, (1.0 - f1 * f1).max(0.0).sqrt() + 2.0 * t * t]
            }
            _ => unreachable!(),
        }
    }

    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
        let x1 = rng.range(self.bounds.lower()[0], self.bounds.upper()[0]);
        let shift = self.sheet_shift();
        let mut x2 = self.base_curve(x1);
        if shift != 0.0 && rng.index(2) == 1 {
            x2 += shift;
        }
        Some(vec![x1, x2])
    }
}
