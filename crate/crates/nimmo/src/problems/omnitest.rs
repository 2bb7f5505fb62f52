//! Omni-test: `f1 = sum sin(pi x_j)`, `f2 = sum cos(pi x_j)` on `[0, 6]^D`.
//! The Pareto set consists of all vectors whose coordinates share one phase
//! `y in [1, 1.5]` up to period-2 shifts, giving `3^D` equivalent subsets.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::Bounds;

#[derive(Debug, Clone)]
pub struct OmniTest {
    dim: usize,
    bounds: Bounds,
    ps_box: Bounds,
}

pub fn make_omnitest(dim: usize) -> Result<OmniTest> {
    if dim < 1 {
        return Err(Error::Construction("omni-test needs D >= 1".into()));
    }
    Ok(OmniTest {
        dim,
        bounds: Bounds::uniform(dim, 0.0, 6.0)?,
        ps_box: Bounds::uniform(dim, 1.0, 5.5)?,
    })
}

impl Problem for OmniTest {
    fn name(&self) -> &str {
        "omni-test"
    }

    fn num_objectives(&self) -> usize {
        2
    }

    fn num_variables(&self) -> usize {
        self.dim
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// Reported count of equivalent Pareto subsets for the D=5 instance.
    fn n_same(&self) -> usize {
        if self.dim == 5 {
            360
        } else {
            3usize.pow(self.dim as u32)
        }
    }

    fn ps_box(&self) -> &Bounds {
        &self.ps_box
    }

    fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        let f1 = x.iter().map(|v| (PI * v).sin()).sum();
        let f2 = x.iter().map(|v| (PI * v).cos()).sum();
        vec![f1, f2]
    }

    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
        let phase = rng.range(1.0, 1.5);
        Some((0..self.dim).map(|_| phase + 2.0 * rng.index(3) as f64).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::dominates;

    #[test]
    fn origin_hand_values() {
        let p = make_omnitest(5).unwrap();
        let f = p.evaluate(&[0.0; 5]);
        assert!(f[0].abs() < 1e-12);
        assert!((f[1] - 5.0).abs() < 1e-12);
    }

    #[test]
    fn period_two_translation_invariance() {
        let p = make_omnitest(5).unwrap();
        let mut rng = RngStream::new(2);
        for _ in 0..1000 {
            let x: Vec<f64> = (0..5).map(|_| rng.range(0.0, 4.0)).collect();
            let fx = p.evaluate(&x);
            for j in 0..5 {
                let mut y = x.clone();
                y[j] += 2.0;
                let fy = p.evaluate(&y);
                assert!((fx[0] - fy[0]).abs() < 1e-9 && (fx[1] - fy[1]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn pareto_samples_sit_on_the_shared_front() {
        let p = make_omnitest(5).unwrap();
        let mut rng = RngStream::new(9);
        for _ in 0..500 {
            let x = p.sample_pareto_set(&mut rng).unwrap();
            let f = p.evaluate(&x);
            // front is the circular arc f1^2 + f2^2 = D^2, both negative
            assert!((f[0] * f[0] + f[1] * f[1] - 25.0).abs() < 1e-9);
            assert!(f[0] <= 1e-12 && f[1] <= 1e-12);
        }
    }

    #[test]
    fn pareto_samples_not_dominated_by_random_points() {
        let p = make_omnitest(3).unwrap();
        let mut rng = RngStream::new(77);
        let x = p.sample_pareto_set(&mut rng).unwrap();
        let fx = p.evaluate(&x);
        for _ in 0..20_000 {
            let y: Vec<f64> = (0..3).map(|_| rng.range(0.0, 6.0)).collect();
            assert!(!dominates(&p.evaluate(&y), &fx).unwrap());
        }
    }

    #[test]
    fn brute_force_sweep_finds_many_disjoint_clusters() {
        // D=2 keeps the sweep cheap; the equivalent subsets are translates
        let p = make_omnitest(2).unwrap();
        let n = 300;
        let mut pts = Vec::new();
        let mut objs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let x = vec![6.0 * i as f64 / (n - 1) as f64, 6.0 * j as f64 / (n - 1) as f64];
                objs.push(p.evaluate(&x));
                pts.push(x);
            }
        }
        let keep = crate::assessment::nondominated_indices(&objs);
        let kept: Vec<Vec<f64>> = keep.iter().map(|&i| pts[i].clone()).collect();
        let clusters = crate::problems::refset::cluster_count(&kept, 0.3);
        assert!(clusters >= 6, "expected many clusters, got {clusters}");
    }
}
