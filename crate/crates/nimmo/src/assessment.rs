//! Assessment indicators: IGD in objective space, IGDX and cover rate in
//! solution space, and their ratio PSP. Also the nondominated filter and the
//! max-min subset selection used before scoring large archives.

use crate::error::{Error, Result};
use crate::pop::Individual;
use crate::problems::{farthest_point_subset, ReferenceSet};
use crate::space::{dominates_unchecked, euclidean_distance, Bounds};

/// Indices of the points not Pareto-dominated by any other point in `objs`.
/// Duplicates are all kept (a point never dominates its copy). Order of the
/// returned indices is ascending.
pub fn nondominated_indices(objs: &[Vec<f64>]) -> Vec<usize> {
    let n = objs.len();
    if n == 0 {
        return Vec::new();
    }
    if objs[0].len() == 2 {
        return nondominated_indices_2d(objs);
    }
    let mut keep = Vec::new();
    'outer: for i in 0..n {
        for j in 0..n {
            if j != i && dominates_unchecked(&objs[j], &objs[i]) {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    keep
}

/// Two-objective sweep in `O(n log n)`: after sorting by `(f1, f2)`, a point
/// survives iff it has the lowest `f2` within its `f1` group and that value
/// strictly improves on everything with smaller `f1`.
fn nondominated_indices_2d(objs: &[Vec<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..objs.len()).collect();
    order.sort_by(|&a, &b| {
        objs[a][0]
            .partial_cmp(&objs[b][0])
            .unwrap()
            .then(objs[a][1].partial_cmp(&objs[b][1]).unwrap())
    });
    let mut keep = Vec::new();
    let mut best_f2 = f64::INFINITY;
    let mut g = 0;
    while g < order.len() {
        let f1 = objs[order[g]][0];
        let mut end = g;
        while end < order.len() && objs[order[end]][0] == f1 {
            end += 1;
        }
        let group_min = objs[order[g]][1];
        if group_min < best_f2 {
            for &i in &order[g..end] {
                if objs[i][1] == group_min {
                    keep.push(i);
                }
            }
            best_f2 = group_min;
        }
        g = end;
    }
    keep.sort_unstable();
    keep
}

/// Test helper: keeps a point unless some other point beats it by more than
/// `eps` in both objectives. Absorbs floating-point asymmetry between
/// equivalent Pareto subsets when filtering dense grid sweeps.
#[cfg(test)]
pub(crate) fn nearly_nondominated_2d(objs: &[Vec<f64>], eps: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..objs.len()).collect();
    order.sort_by(|&a, &b| objs[a][0].partial_cmp(&objs[b][0]).unwrap());
    let mut keep = Vec::new();
    let mut j = 0;
    let mut prefix_min_f2 = f64::INFINITY;
    for k in 0..order.len() {
        let i = order[k];
        while objs[order[j]][0] <= objs[i][0] - eps {
            prefix_min_f2 = prefix_min_f2.min(objs[order[j]][1]);
            j += 1;
        }
        if prefix_min_f2 > objs[i][1] - eps {
            keep.push(i);
        }
    }
    keep.sort_unstable();
    keep
}

/// Nondominated subset of a population by objective vectors.
pub fn nondominated(members: &[Individual]) -> Vec<Individual> {
    let objs: Vec<Vec<f64>> = members.iter().map(|m| m.f.clone()).collect();
    nondominated_indices(&objs).into_iter().map(|i| members[i].clone()).collect()
}

fn check_point_sets(reference: &[Vec<f64>], set: &[Vec<f64>], what: &str) -> Result<usize> {
    let dim = reference
        .first()
        .map(|p| p.len())
        .ok_or_else(|| Error::contract(format!("{what}: empty reference set")))?;
    if set.is_empty() {
        return Err(Error::contract(format!("{what}: empty subject set")));
    }
    if reference.iter().chain(set).any(|p| p.len() != dim) {
        return Err(Error::contract(format!("{what}: mismatched point dimensions")));
    }
    Ok(dim)
}

fn mean_min_distance(reference: &[Vec<f64>], set: &[Vec<f64>]) -> f64 {
    let total: f64 = reference
        .iter()
        .map(|r| set.iter().map(|a| euclidean_distance(r, a)).fold(f64::INFINITY, f64::min))
        .sum();
    total / reference.len() as f64
}

/// Inverted generational distance: mean over reference points of the
/// distance to the nearest archive point, in objective space.
pub fn igd(reference_obj: &[Vec<f64>], archive_obj: &[Vec<f64>]) -> Result<f64> {
    check_point_sets(reference_obj, archive_obj, "igd")?;
    Ok(mean_min_distance(reference_obj, archive_obj))
}

/// IGD in solution space, in raw (unnormalized) variable units.
pub fn igdx(reference_sol: &[Vec<f64>], archive_sol: &[Vec<f64>]) -> Result<f64> {
    check_point_sets(reference_sol, archive_sol, "igdx")?;
    Ok(mean_min_distance(reference_sol, archive_sol))
}

/// Cover rate: per-variable squared overlap ratio between the archive's
/// bounding box and the reference set's bounding box, combined as
/// `(prod delta_i)^(1/(2D))`. A degenerate reference axis contributes 1;
/// disjoint ranges contribute 0.
pub fn cr(reference_sol: &[Vec<f64>], archive_sol: &[Vec<f64>]) -> Result<f64> {
    let dim = check_point_sets(reference_sol, archive_sol, "cr")?;
    let range = |pts: &[Vec<f64>], j: usize| -> (f64, f64) {
        pts.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p[j]), hi.max(p[j]))
        })
    };
    let mut product = 1.0;
    for j in 0..dim {
        let (rlo, rhi) = range(reference_sol, j);
        let (alo, ahi) = range(archive_sol, j);
        let delta = if rhi == rlo {
            1.0
        } else if alo > rhi || ahi < rlo {
            0.0
        } else {
            let overlap = (rhi.min(ahi) - rlo.max(alo)).max(0.0) / (rhi - rlo);
            overlap * overlap
        };
        product *= delta;
    }
    Ok(product.powf(1.0 / (2.0 * dim as f64)))
}

/// Pareto-set proximity: `CR / IGDX`, or `+inf` when IGDX is exactly zero.
pub fn psp(reference_sol: &[Vec<f64>], archive_sol: &[Vec<f64>]) -> Result<f64> {
    let c = cr(reference_sol, archive_sol)?;
    let d = igdx(reference_sol, archive_sol)?;
    if d == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(c / d)
}

/// All indicator values of one archive against one reference-set pair.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorReport {
    pub igd: f64,
    pub igdx: f64,
    pub cr: f64,
    pub psp: f64,
    pub archive_size: usize,
}

/// Scores a paired archive (solutions plus their objective images) against
/// the reference sets.
pub fn score(
    reference: &ReferenceSet,
    archive_sol: &[Vec<f64>],
    archive_obj: &[Vec<f64>],
) -> Result<IndicatorReport> {
    if archive_sol.len() != archive_obj.len() {
        return Err(Error::contract(format!(
            "archive has {} solutions but {} objective vectors",
            archive_sol.len(),
            archive_obj.len()
        )));
    }
    Ok(IndicatorReport {
        igd: igd(&reference.obj, archive_obj)?,
        igdx: igdx(&reference.sol, archive_sol)?,
        cr: cr(&reference.sol, archive_sol)?,
        psp: psp(&reference.sol, archive_sol)?,
        archive_size: archive_sol.len(),
    })
}

/// Greedy max-min subset selection in normalized solution space: keeps `k`
/// spread-out representatives of a large archive before scoring. Returns
/// indices into `points` in selection order.
pub fn subset_select(points: &[Vec<f64>], k: usize, bounds: &Bounds) -> Result<Vec<usize>> {
    for p in points {
        if !bounds.contains(p) {
            return Err(Error::contract("subset selection requires in-bounds points"));
        }
    }
    let normalized: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            p.iter()
                .zip(bounds.lower())
                .zip(bounds.upper())
                .map(|((v, lo), hi)| (v - lo) / (hi - lo))
                .collect()
        })
        .collect();
    Ok(farthest_point_subset(&normalized, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{by_name, generate_reference_sets};
    use crate::rng::RngStream;
    use crate::space::dominates;

    fn brute_force_nondominated(objs: &[Vec<f64>]) -> Vec<usize> {
        (0..objs.len())
            .filter(|&i| {
                (0..objs.len()).all(|j| j == i || !dominates(&objs[j], &objs[i]).unwrap())
            })
            .collect()
    }

    #[test]
    fn fast_2d_filter_matches_brute_force() {
        let mut rng = RngStream::new(31);
        for round in 0..200 {
            // coarse grid values force plenty of exact ties and duplicates
            let n = 1 + rng.index(60);
            let objs: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..2).map(|_| (rng.next_f64() * 5.0).floor()).collect())
                .collect();
            assert_eq!(
                nondominated_indices(&objs),
                brute_force_nondominated(&objs),
                "round {round}: {objs:?}"
            );
        }
    }

    #[test]
    fn general_filter_matches_brute_force_in_3d() {
        let mut rng = RngStream::new(32);
        for _ in 0..100 {
            let n = 1 + rng.index(40);
            let objs: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..3).map(|_| (rng.next_f64() * 4.0).floor()).collect())
                .collect();
            assert_eq!(nondominated_indices(&objs), brute_force_nondominated(&objs));
        }
    }

    #[test]
    fn duplicates_of_a_nondominated_point_are_all_kept() {
        let objs = vec![vec![0.0, 1.0], vec![0.0, 1.0], vec![1.0, 0.0], vec![2.0, 2.0]];
        assert_eq!(nondominated_indices(&objs), vec![0, 1, 2]);
    }

    #[test]
    fn igd_hand_values() {
        let reference = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let archive = vec![vec![0.0, 0.0]];
        let v = igd(&reference, &archive).unwrap();
        assert!((v - 2f64.sqrt() / 2.0).abs() < 1e-12);
        // identical sets score zero
        assert_eq!(igd(&reference, &reference).unwrap(), 0.0);
        assert!(igd(&[], &archive).is_err());
        assert!(igd(&reference, &[]).is_err());
        assert!(igd(&reference, &[vec![1.0]]).is_err());
    }

    #[test]
    fn igd_monotone_under_archive_growth_and_translation_aware() {
        let mut rng = RngStream::new(41);
        let reference: Vec<Vec<f64>> =
            (0..50).map(|_| vec![rng.next_f64(), rng.next_f64()]).collect();
        let mut archive: Vec<Vec<f64>> = vec![vec![rng.next_f64(), rng.next_f64()]];
        let mut last = igd(&reference, &archive).unwrap();
        for _ in 0..50 {
            archive.push(vec![rng.next_f64(), rng.next_f64()]);
            let now = igd(&reference, &archive).unwrap();
            assert!(now <= last + 1e-15, "adding points cannot hurt IGD");
            last = now;
        }
        // joint translation leaves the value unchanged
        let shift = |pts: &[Vec<f64>]| -> Vec<Vec<f64>> {
            pts.iter().map(|p| vec![p[0] + 3.0, p[1] - 7.0]).collect()
        };
        let moved = igd(&shift(&reference), &shift(&archive)).unwrap();
        assert!((moved - last).abs() < 1e-12);
    }

    #[test]
    fn cr_degenerate_and_overlap_cases() {
        // degenerate reference axis contributes 1 regardless of the archive
        let reference = vec![vec![0.0, 2.0], vec![1.0, 2.0]];
        let archive = vec![vec![0.25, 9.0], vec![0.75, -4.0]];
        // axis 0: overlap 0.5 over range 1 -> delta 0.25; axis 1: degenerate -> 1
        let v = cr(&reference, &archive).unwrap();
        assert!((v - 0.25f64.powf(1.0 / 4.0)).abs() < 1e-12);

        // disjoint axis zeroes the whole product
        let far = vec![vec![5.0, 2.0], vec![6.0, 2.0]];
        assert_eq!(cr(&reference, &far).unwrap(), 0.0);

        // full cover scores exactly 1
        assert_eq!(cr(&reference, &reference).unwrap(), 1.0);
        let superset = vec![vec![-1.0, 0.0], vec![2.0, 5.0]];
        assert_eq!(cr(&reference, &superset).unwrap(), 1.0);
    }

    #[test]
    fn psp_is_cr_over_igdx_with_infinite_perfect_match() {
        let mut rng = RngStream::new(43);
        let reference: Vec<Vec<f64>> =
            (0..30).map(|_| vec![rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)]).collect();
        let archive: Vec<Vec<f64>> =
            (0..10).map(|_| vec![rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)]).collect();
        let p = psp(&reference, &archive).unwrap();
        let expected = cr(&reference, &archive).unwrap() / igdx(&reference, &archive).unwrap();
        assert!((p - expected).abs() < 1e-12);
        assert_eq!(psp(&reference, &reference).unwrap(), f64::INFINITY);
    }

    #[test]
    fn subset_select_examples_and_validation() {
        let b = Bounds::uniform(1, 0.0, 10.0).unwrap();
        let pts = vec![vec![0.0], vec![1.0], vec![10.0]];
        assert_eq!(subset_select(&pts, 2, &b).unwrap(), vec![0, 2]);
        assert!(subset_select(&[vec![11.0]], 1, &b).is_err());

        // normalization decides which point is farthest
        let b2 = Bounds::new(vec![0.0, 0.0], vec![1.0, 100.0]).unwrap();
        let pts2 = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 30.0]];
        // raw distance would pick index 2 (30 away); normalized picks index 1
        assert_eq!(subset_select(&pts2, 2, &b2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn spread_versus_dense_archives_trade_igd_against_igdx() {
        let p = by_name("two-on-one").unwrap();
        let mut rng = RngStream::new(51);
        let refs = generate_reference_sets(p.as_ref(), 500, &mut rng).unwrap();

        // sparse archive spanning both equivalent branches
        let pool: Vec<Vec<f64>> =
            (0..400).map(|_| p.sample_pareto_set(&mut rng).unwrap()).collect();
        let spread: Vec<Vec<f64>> = subset_select(&pool, 20, p.bounds())
            .unwrap()
            .into_iter()
            .map(|i| pool[i].clone())
            .collect();

        // dense archive confined to one branch
        let mut dense: Vec<Vec<f64>> = Vec::new();
        while dense.len() < 200 {
            let x = p.sample_pareto_set(&mut rng).unwrap();
            if x[0] + x[1] > 0.1 {
                dense.push(x);
            }
        }

        let images = |xs: &[Vec<f64>]| -> Vec<Vec<f64>> {
            xs.iter().map(|x| p.evaluate(x)).collect()
        };
        let spread_report = score(&refs, &spread, &images(&spread)).unwrap();
        let dense_report = score(&refs, &dense, &images(&dense)).unwrap();

        // both branches share one front: denser coverage wins in objective
        // space, but missing a branch is punished in solution space
        assert!(dense_report.igd < spread_report.igd);
        assert!(spread_report.igdx < dense_report.igdx);
        assert!(spread_report.psp > dense_report.psp);
    }

    #[test]
    fn nondominated_population_filter() {
        let members = vec![
            Individual { x: vec![0.0], f: vec![0.0, 2.0], fitness: None },
            Individual { x: vec![1.0], f: vec![1.0, 1.0], fitness: None },
            Individual { x: vec![2.0], f: vec![1.0, 3.0], fitness: None },
        ];
        let nd = nondominated(&members);
        assert_eq!(nd.len(), 2);
        assert_eq!(nd[0].x, vec![0.0]);
        assert_eq!(nd[1].x, vec![1.0]);
    }
}
