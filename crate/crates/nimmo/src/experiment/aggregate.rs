//! Mean/median aggregation and Friedman-style average ranks.

use crate::assessment::IndicatorReport;
use crate::error::{Error, Result};
use crate::experiment::runner::RunRecord;

/// The four reported indicators, in output order.
pub const INDICATORS: [&str; 4] = ["igd", "igdx", "cr", "psp"];

/// Whether a smaller or a larger indicator value ranks better.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    SmallerBetter,
    LargerBetter,
}

pub fn indicator_direction(indicator: &str) -> Result<Direction> {
    match indicator {
        "igd" | "igdx" => Ok(Direction::SmallerBetter),
        "cr" | "psp" => Ok(Direction::LargerBetter),
        other => Err(Error::contract(format!("unknown indicator `{other}`"))),
    }
}

pub fn indicator_value(report: &IndicatorReport, indicator: &str) -> Result<f64> {
    match indicator {
        "igd" => Ok(report.igd),
        "igdx" => Ok(report.igdx),
        "cr" => Ok(report.cr),
        "psp" => Ok(report.psp),
        other => Err(Error::contract(format!("unknown indicator `{other}`"))),
    }
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Median with the usual midpoint convention for even counts.
pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Friedman-style average ranks. `cells[p][a]` is the statistic of algorithm
/// `a` on problem `p`; ranks start at 1 for the best value per problem, ties
/// share the mean of the ranks they span, and the result is the average over
/// problems per algorithm.
pub fn friedman_ranks(cells: &[Vec<f64>], direction: Direction) -> Result<Vec<f64>> {
    let k = cells.first().map(|row| row.len()).ok_or_else(|| Error::contract("no problems"))?;
    if k == 0 {
        return Err(Error::contract("no algorithms"));
    }
    let mut totals = vec![0.0; k];
    for (p, row) in cells.iter().enumerate() {
        if row.len() != k {
            return Err(Error::contract(format!("problem {p} has {} cells, expected {k}", row.len())));
        }
        if row.iter().any(|v| v.is_nan()) {
            return Err(Error::contract(format!("problem {p} has a missing cell")));
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| {
            let cmp = row[a].partial_cmp(&row[b]).unwrap();
            match direction {
                Direction::SmallerBetter => cmp,
                Direction::LargerBetter => cmp.reverse(),
            }
        });
        let mut i = 0;
        while i < k {
            let mut j = i;
            while j < k && row[order[j]] == row[order[i]] {
                j += 1;
            }
            // ranks i+1 ..= j averaged over the tie group
            let shared = (i + 1 + j) as f64 / 2.0;
            for &a in &order[i..j] {
                totals[a] += shared;
            }
            i = j;
        }
    }
    Ok(totals.into_iter().map(|t| t / cells.len() as f64).collect())
}

/// One output row of `summary.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub problem: String,
    pub algorithm: String,
    pub indicator: String,
    pub mean: f64,
    pub median: f64,
    /// Average rank of this algorithm across all problems for this
    /// indicator (repeated on every problem row for convenience).
    pub rank: f64,
}

/// Aggregates per-cell means/medians and cross-problem ranks. `problems` and
/// `algorithms` fix the output order; every (problem, algorithm) cell must
/// have at least one successful run.
pub fn summarize(
    records: &[RunRecord],
    problems: &[String],
    algorithms: &[String],
) -> Result<Vec<SummaryRow>> {
    if problems.is_empty() || algorithms.is_empty() {
        return Err(Error::contract("summary needs problems and algorithms"));
    }
    let mut rows = Vec::new();
    for indicator in INDICATORS {
        // cell statistics, problem-major
        let mut means = vec![vec![f64::NAN; algorithms.len()]; problems.len()];
        let mut medians = vec![vec![f64::NAN; algorithms.len()]; problems.len()];
        for (p, problem) in problems.iter().enumerate() {
            for (a, algorithm) in algorithms.iter().enumerate() {
                let values: Vec<f64> = records
                    .iter()
                    .filter(|r| &r.problem == problem && &r.algorithm == algorithm)
                    .map(|r| indicator_value(&r.report, indicator))
                    .collect::<Result<_>>()?;
                if values.is_empty() {
                    return Err(Error::contract(format!(
                        "no successful runs for {problem}/{algorithm}"
                    )));
                }
                means[p][a] = mean(&values);
                medians[p][a] = median(&values);
            }
        }
        let ranks = friedman_ranks(&medians, indicator_direction(indicator)?)?;
        for (p, problem) in problems.iter().enumerate() {
            for (a, algorithm) in algorithms.iter().enumerate() {
                rows.push(SummaryRow {
                    problem: problem.clone(),
                    algorithm: algorithm.clone(),
                    indicator: indicator.to_string(),
                    mean: means[p][a],
                    median: medians[p][a],
                    rank: ranks[a],
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_conventions() {
        assert_eq!(median(&[3.0]), 3.0);
        assert_eq!(median(&[1.0, 3.0]), 2.0);
        assert_eq!(median(&[5.0, 1.0, 3.0]), 3.0);
        assert_eq!(median(&[4.0, 1.0, 3.0, 2.0]), 2.5);
        assert_eq!(mean(&[1.0, 2.0, 6.0]), 3.0);
    }

    #[test]
    fn friedman_hand_example() {
        // 3 problems x 3 algorithms, smaller better
        let cells = vec![
            vec![0.1, 0.2, 0.3],
            vec![0.1, 0.3, 0.2],
            vec![0.2, 0.1, 0.3],
        ];
        let ranks = friedman_ranks(&cells, Direction::SmallerBetter).unwrap();
        assert_eq!(ranks, vec![4.0 / 3.0, 2.0, 8.0 / 3.0]);
        // reversing the direction reverses the order
        let rev = friedman_ranks(&cells, Direction::LargerBetter).unwrap();
        assert_eq!(rev, vec![8.0 / 3.0, 2.0, 4.0 / 3.0]);
    }

    #[test]
    fn friedman_ties_share_mean_ranks() {
        let cells = vec![vec![1.0, 1.0, 2.0, 3.0]];
        let ranks = friedman_ranks(&cells, Direction::SmallerBetter).unwrap();
        assert_eq!(ranks, vec![1.5, 1.5, 3.0, 4.0]);
        let all_tied = vec![vec![7.0, 7.0, 7.0]];
        assert_eq!(
            friedman_ranks(&all_tied, Direction::SmallerBetter).unwrap(),
            vec![2.0, 2.0, 2.0]
        );
    }

    #[test]
    fn friedman_rejects_bad_cells() {
        assert!(friedman_ranks(&[], Direction::SmallerBetter).is_err());
        assert!(friedman_ranks(&[vec![1.0], vec![1.0, 2.0]], Direction::SmallerBetter).is_err());
        assert!(friedman_ranks(&[vec![f64::NAN, 1.0]], Direction::SmallerBetter).is_err());
    }

    fn record(problem: &str, algorithm: &str, run: usize, igd: f64) -> RunRecord {
        RunRecord {
            problem: problem.into(),
            algorithm: algorithm.into(),
            run,
            seed: run as u64,
            report: IndicatorReport {
                igd,
                igdx: igd * 2.0,
                cr: 1.0 - igd,
                psp: (1.0 - igd) / (igd * 2.0),
                archive_size: 10,
            },
            archive_sol: vec![],
            archive_obj: vec![],
        }
    }

    #[test]
    fn summarize_orders_rows_and_ranks() {
        let records = vec![
            record("p1", "a", 0, 0.1),
            record("p1", "a", 1, 0.3),
            record("p1", "b", 0, 0.4),
            record("p1", "b", 1, 0.4),
            record("p2", "a", 0, 0.2),
            record("p2", "a", 1, 0.2),
            record("p2", "b", 0, 0.5),
            record("p2", "b", 1, 0.5),
        ];
        let rows = summarize(
            &records,
            &["p1".into(), "p2".into()],
            &["a".into(), "b".into()],
        )
        .unwrap();
        assert_eq!(rows.len(), 16); // 4 indicators x 2 problems x 2 algorithms
        let igd_p1_a = &rows[0];
        assert_eq!(
            (igd_p1_a.problem.as_str(), igd_p1_a.algorithm.as_str(), igd_p1_a.indicator.as_str()),
            ("p1", "a", "igd")
        );
        assert!((igd_p1_a.mean - 0.2).abs() < 1e-15);
        assert!((igd_p1_a.median - 0.2).abs() < 1e-15);
        assert_eq!(igd_p1_a.rank, 1.0); // a beats b on both problems
        let igd_p1_b = &rows[1];
        assert_eq!(igd_p1_b.rank, 2.0);
        // cr is larger-better, so a still ranks first
        let cr_rows: Vec<&SummaryRow> =
            rows.iter().filter(|r| r.indicator == "cr").collect();
        assert_eq!(cr_rows[0].rank, 1.0);

        // missing cell is an error
        assert!(summarize(&records[..2], &["p1".into()], &["a".into(), "b".into()]).is_err());
    }
}
