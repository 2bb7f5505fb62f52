//! The steady-state niching loop.
//!
//! Each iteration mates two random parents, produces one child, forms a
//! niche of the child's `T` nearest neighbors in normalized solution space,
//! and removes the worst-fitness member of the niche plus child. With
//! `T == mu` the niche is the whole population and the loop is a plain
//! steady-state IBEA.

use crate::error::{Error, Result};
use crate::fitness::{FitnessScheme, FitnessScratch};
use crate::pop::{Individual, Population};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::space::{clip_to_bounds, normalized_euclidean_distance_unchecked, Bounds};
use crate::variation::{init_population, polynomial_mutation, sbx_crossover, OperatorConfig};

/// Full configuration of one run.
#[derive(Debug, Clone)]
pub struct AlgorithmConfig {
    /// Population size.
    pub mu: usize,
    /// Neighborhood (niche) size, `1 ..= mu`.
    pub t: usize,
    pub scheme: FitnessScheme,
    /// Variation parameters; `None` uses the protocol defaults for the
    /// problem's dimension.
    pub operators: Option<OperatorConfig>,
    /// Maximum number of objective function evaluations, including the
    /// initial population.
    pub budget: usize,
    pub seed: u64,
    /// Record a population snapshot every this many evaluations.
    pub snapshot_every: Option<usize>,
}

impl AlgorithmConfig {
    pub fn new(mu: usize, t: usize, budget: usize, seed: u64) -> Self {
        AlgorithmConfig {
            mu,
            t,
            scheme: FitnessScheme::default(),
            operators: None,
            budget,
            seed,
            snapshot_every: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu < 2 {
            return Err(Error::config("mu must be at least 2"));
        }
        if self.t < 1 || self.t > self.mu {
            return Err(Error::config(format!(
                "neighborhood size must satisfy 1 <= T <= mu, got T={} mu={}",
                self.t, self.mu
            )));
        }
        if self.budget < self.mu {
            return Err(Error::config(format!(
                "budget ({}) must cover the initial population ({})",
                self.budget, self.mu
            )));
        }
        self.scheme.validate()?;
        if let Some(op) = &self.operators {
            op.validate()?;
        }
        Ok(())
    }
}

/// Population state captured mid-run when `snapshot_every` is set.
#[derive(Debug, Clone)]
pub struct Snapshot {
    pub evaluations: usize,
    pub population: Vec<Individual>,
}

/// Outcome of a completed run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub final_population: Population,
    /// Nondominated subset of the final population.
    pub nondominated: Vec<Individual>,
    pub evaluations_used: usize,
    pub trace: Option<Vec<Snapshot>>,
}

/// Two distinct member indices, uniform over ordered distinct pairs.
pub fn select_parents(mu: usize, rng: &mut RngStream) -> Result<(usize, usize)> {
    if mu < 2 {
        return Err(Error::config("parent selection needs at least two members"));
    }
    let a = rng.index(mu);
    loop {
        let b = rng.index(mu);
        if b != a {
            return Ok((a, b));
        }
    }
}

/// Indices of the `t` members closest to `u` in normalized solution space.
/// Distance ties break toward the lower member index.
pub fn select_neighbors(pop: &Population, u: &[f64], t: usize, b: &Bounds) -> Vec<usize> {
    debug_assert!(t <= pop.len());
    let mut order: Vec<(f64, usize)> = pop
        .iter()
        .enumerate()
        .map(|(i, ind)| (normalized_euclidean_distance_unchecked(&ind.x, u, b), i))
        .collect();
    order.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    order.into_iter().take(t).map(|(_, i)| i).collect()
}

/// Index of the member removed from the candidate set: the one with the
/// largest (worst) fitness, ties broken uniformly at random.
pub fn environmental_selection<O: AsRef<[f64]>>(
    r_plus: &[O],
    scheme: &FitnessScheme,
    rng: &mut RngStream,
) -> Result<usize> {
    let mut scratch = FitnessScratch::default();
    environmental_selection_with(r_plus, scheme, rng, &mut scratch)
}

fn environmental_selection_with<O: AsRef<[f64]>>(
    r_plus: &[O],
    scheme: &FitnessScheme,
    rng: &mut RngStream,
    scratch: &mut FitnessScratch,
) -> Result<usize> {
    scratch.assign(r_plus, scheme)?;
    let worst = scratch.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut ties: Vec<usize> = Vec::new();
    for (i, v) in scratch.values.iter().enumerate() {
        if *v == worst {
            ties.push(i);
        }
    }
    Ok(if ties.len() == 1 { ties[0] } else { ties[rng.index(ties.len())] })
}

/// Runs the steady-state loop until the evaluation budget is exhausted.
pub fn run(problem: &dyn Problem, cfg: &AlgorithmConfig) -> Result<RunResult> {
    cfg.validate()?;
    let bounds = problem.bounds();
    let operators =
        cfg.operators.clone().unwrap_or_else(|| OperatorConfig::for_dimension(bounds.dim()));
    operators.validate()?;

    let mut rng = RngStream::new(cfg.seed);
    let mut pop = init_population(cfg.mu, problem, &mut rng)?;
    let mut evaluations = cfg.mu;
    let mut scratch = FitnessScratch::default();
    let mut trace: Option<Vec<Snapshot>> = cfg.snapshot_every.map(|_| Vec::new());

    while evaluations < cfg.budget {
        let (a, b) = select_parents(pop.len(), &mut rng)?;
        let (child_x, _) =
            sbx_crossover(&pop.get(a).x, &pop.get(b).x, &operators, bounds, &mut rng);
        let child_x = polynomial_mutation(&child_x, &operators, bounds, &mut rng);
        let child_x = clip_to_bounds(&child_x, bounds);
        let child_f = problem.evaluate(&child_x);
        evaluations += 1;

        let neighbors = select_neighbors(&pop, &child_x, cfg.t, bounds);
        let mut niche_objs: Vec<&[f64]> = Vec::with_capacity(cfg.t + 1);
        for &i in &neighbors {
            niche_objs.push(&pop.get(i).f);
        }
        niche_objs.push(&child_f);

        scratch.assign(&niche_objs, &cfg.scheme)?;
        let worst_fit = scratch.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let ties: Vec<usize> = scratch
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == worst_fit)
            .map(|(i, _)| i)
            .collect();
        let removed = if ties.len() == 1 { ties[0] } else { ties[rng.index(ties.len())] };
        drop(niche_objs);

        if removed < neighbors.len() {
            // a niche member leaves; the child takes its slot
            let slot = neighbors[removed];
            let mut child = Individual::new(child_x, child_f);
            child.fitness = Some(scratch.values[neighbors.len()]);
            pop.replace(slot, child);
        }
        debug_assert_eq!(pop.len(), cfg.mu);

        if let (Some(every), Some(tr)) = (cfg.snapshot_every, trace.as_mut()) {
            if evaluations % every == 0 {
                tr.push(Snapshot { evaluations, population: pop.members().to_vec() });
            }
        }
    }

    let nondominated = crate::assessment::nondominated(pop.members());
    Ok(RunResult { final_population: pop, nondominated, evaluations_used: evaluations, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pop::Individual;
    use crate::problems::make_sympart;

    #[test]
    fn parent_pairs_distinct_and_uniform() {
        let mut rng = RngStream::new(2);
        assert_eq!(select_parents(2, &mut rng).map(|(a, b)| a + b).unwrap(), 1);
        assert!(select_parents(1, &mut rng).is_err());

        let mut counts = std::collections::HashMap::new();
        let n = 1_000_000;
        for _ in 0..n {
            let (a, b) = select_parents(5, &mut rng).unwrap();
            assert_ne!(a, b);
            *counts.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 10);
        for (&pair, &c) in &counts {
            let freq = c as f64 / n as f64;
            assert!((freq - 0.1).abs() < 0.01, "pair {pair:?} freq {freq}");
        }
    }

    fn pop_1d(xs: &[f64]) -> Population {
        Population::new(
            xs.iter().map(|&v| Individual::new(vec![v], vec![v, 1.0 - v])).collect(),
        )
        .unwrap()
    }

    #[test]
    fn neighbor_selection_brute_force_agreement() {
        let b = Bounds::uniform(1, 0.0, 1.0).unwrap();
        let pop = pop_1d(&[0.0, 0.1, 0.5, 0.9]);
        assert_eq!(select_neighbors(&pop, &[0.0], 2, &b), vec![0, 1]);
        assert_eq!(select_neighbors(&pop, &[0.5], 1, &b), vec![2]);
        assert_eq!(select_neighbors(&pop, &[0.3], 4, &b).len(), 4);

        // randomized agreement with a plain sort oracle
        let mut rng = RngStream::new(77);
        for _ in 0..200 {
            let xs: Vec<f64> = (0..12).map(|_| rng.next_f64()).collect();
            let pop = pop_1d(&xs);
            let u = [rng.next_f64()];
            let got = select_neighbors(&pop, &u, 5, &b);
            let mut oracle: Vec<usize> = (0..xs.len()).collect();
            oracle.sort_by(|&i, &j| {
                let di = (xs[i] - u[0]).abs();
                let dj = (xs[j] - u[0]).abs();
                di.partial_cmp(&dj).unwrap().then(i.cmp(&j))
            });
            assert_eq!(got, oracle[..5].to_vec());
        }
    }

    #[test]
    fn neighbor_ties_prefer_lower_index() {
        let b = Bounds::uniform(1, 0.0, 1.0).unwrap();
        let pop = pop_1d(&[0.4, 0.6, 0.5]);
        // members 0 and 1 are equidistant from 0.5
        assert_eq!(select_neighbors(&pop, &[0.5], 2, &b), vec![2, 0]);
    }

    #[test]
    fn environmental_selection_removes_dominated_member() {
        let mut rng = RngStream::new(5);
        let r: Vec<Vec<f64>> =
            vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![0.5, 0.5], vec![2.0, 2.0]];
        let removed =
            environmental_selection(&r, &FitnessScheme::default(), &mut rng).unwrap();
        assert_eq!(removed, 3);
    }

    #[test]
    fn environmental_selection_breaks_duplicate_ties_randomly() {
        // two identical individuals plus one dominating them: a duplicate goes
        let r: Vec<Vec<f64>> = vec![vec![1.0, 1.0], vec![1.0, 1.0], vec![0.0, 0.0]];
        let mut seen = std::collections::HashSet::new();
        for seed in 0..50 {
            let mut rng = RngStream::new(seed);
            let removed =
                environmental_selection(&r, &FitnessScheme::default(), &mut rng).unwrap();
            assert!(removed == 0 || removed == 1);
            seen.insert(removed);
        }
        assert_eq!(seen.len(), 2, "both duplicates should be removable");
    }

    #[test]
    fn fig3_niche_scenario_removes_the_crowded_dominated_member() {
        // child L sits in a crowded niche {L, D, E, K}; D is dominated within
        // the niche and must be the one removed
        let l = vec![0.44, 0.52];
        let d = vec![0.50, 0.55];
        let e = vec![0.25, 0.80];
        let k = vec![0.70, 0.30];
        let r = vec![l, d, e, k];
        let mut rng = RngStream::new(1);
        let removed = environmental_selection(&r, &FitnessScheme::default(), &mut rng).unwrap();
        assert_eq!(removed, 1, "the dominated niche member is the worst");
    }

    #[test]
    fn run_respects_budget_and_population_invariants() {
        let p = make_sympart(1).unwrap();
        let cfg = AlgorithmConfig::new(20, 4, 300, 9);
        let res = run(p.as_ref(), &cfg).unwrap();
        assert_eq!(res.evaluations_used, 300);
        assert_eq!(res.final_population.len(), 20);
        assert!(!res.nondominated.is_empty());
        assert!(res.nondominated.len() <= 20);
        for ind in res.final_population.iter() {
            assert!(p.bounds().contains(&ind.x));
        }
    }

    #[test]
    fn run_with_budget_equal_mu_is_just_the_initial_population() {
        let p = make_sympart(1).unwrap();
        let cfg = AlgorithmConfig::new(16, 4, 16, 123);
        let res = run(p.as_ref(), &cfg).unwrap();
        assert_eq!(res.evaluations_used, 16);
        let mut rng = RngStream::new(123);
        let init = init_population(16, p.as_ref(), &mut rng).unwrap();
        for (a, b) in res.final_population.iter().zip(init.iter()) {
            assert_eq!(a.x, b.x);
        }
    }

    #[test]
    fn run_is_deterministic() {
        let p = make_sympart(2).unwrap();
        let cfg = AlgorithmConfig::new(30, 3, 600, 4242);
        let r1 = run(p.as_ref(), &cfg).unwrap();
        let r2 = run(p.as_ref(), &cfg).unwrap();
        for (a, b) in r1.final_population.iter().zip(r2.final_population.iter()) {
            assert_eq!(a.x, b.x);
            assert_eq!(a.f, b.f);
        }
    }

    #[test]
    fn config_validation_errors() {
        assert!(AlgorithmConfig::new(1, 1, 100, 0).validate().is_err());
        assert!(AlgorithmConfig::new(10, 0, 100, 0).validate().is_err());
        assert!(AlgorithmConfig::new(10, 11, 100, 0).validate().is_err());
        assert!(AlgorithmConfig::new(10, 5, 9, 0).validate().is_err());
        assert!(AlgorithmConfig::new(10, 5, 10, 0).validate().is_ok());
    }

    #[test]
    fn snapshots_record_at_requested_interval() {
        let p = make_sympart(1).unwrap();
        let mut cfg = AlgorithmConfig::new(10, 2, 50, 7);
        cfg.snapshot_every = Some(10);
        let res = run(p.as_ref(), &cfg).unwrap();
        let trace = res.trace.unwrap();
        assert_eq!(trace.len(), 4); // at 20, 30, 40, 50 evaluations
        assert!(trace.iter().all(|s| s.population.len() == 10));
    }
}
