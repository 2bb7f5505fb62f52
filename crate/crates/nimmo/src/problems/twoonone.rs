//! Two-On-One, symmetric instance: a two-minimum quartic against a sphere
//! centered at the origin. The two equivalent Pareto subsets are mirror
//! images through the origin (they share the sphere optimum itself).

use std::sync::OnceLock;

use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::Bounds;

#[derive(Debug)]
pub struct TwoOnOne {
    bounds: Bounds,
    /// Dense near-Pareto approximation plus its bounding box, built lazily.
    cache: OnceLock<(Vec<Vec<f64>>, Bounds)>,
}

pub fn make_two_on_one() -> TwoOnOne {
    TwoOnOne { bounds: Bounds::uniform(2, -3.0, 3.0).unwrap(), cache: OnceLock::new() }
}

fn objectives(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let f1 = a.powi(4) + b.powi(4) - a * a + b * b - 10.0 * a * b + 20.0;
    let f2 = a * a + b * b;
    vec![f1, f2]
}

impl TwoOnOne {
    fn pareto_cache(&self) -> &(Vec<Vec<f64>>, Bounds) {
        self.cache.get_or_init(|| {
            // grid sweep + nondominated filter; the Pareto set has no
            // closed form for this instance
            let n = 600;
            let mut pts = Vec::with_capacity(n * n);
            let mut objs = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let x = vec![
                        -3.0 + 6.0 * i as f64 / (n - 1) as f64,
                        -3.0 + 6.0 * j as f64 / (n - 1) as f64,
                    ];
                    objs.push(objectives(&x));
                    pts.push(x);
                }
            }
            let keep = crate::assessment::nondominated_indices(&objs);
            let kept: Vec<Vec<f64>> = keep.iter().map(|&i| pts[i].clone()).collect();
            let ps_box = Bounds::enclosing(&kept).unwrap();
            (kept, ps_box)
        })
    }
}

impl Problem for TwoOnOne {
    fn name(&self) -> &str {
        "two-on-one"
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
        2
    }

    fn ps_box(&self) -> &Bounds {
        &self.pareto_cache().1
    }

    fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        objectives(x)
    }

    fn sample_pareto_set(&self, rng: &mut RngStream) -> Option<Vec<f64>> {
        let (pts, _) = self.pareto_cache();
        Some(pts[rng.index(pts.len())].clone())
    }
}
