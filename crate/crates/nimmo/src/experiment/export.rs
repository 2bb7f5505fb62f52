//! CSV and point-file export of a finished batch.
//!
//! All floating-point values are written with 12 significant digits, comma
//! separators and `.` as the decimal mark, so reruns with the same seed
//! produce byte-identical files.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::experiment::aggregate::{summarize, SummaryRow};
use crate::experiment::runner::ExperimentResults;
use crate::experiment::spec::ExperimentSpec;
use crate::problems::write_points;

/// Canonical 12-significant-digit rendering of one value.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

/// Writes a comma-separated file with a header row. Fields must not contain
/// commas or newlines (ours never do).
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut text = String::new();
    text.push_str(&header.join(","));
    text.push('\n');
    for row in rows {
        if row.len() != header.len() {
            return Err(Error::contract(format!(
                "csv row has {} fields, header has {}",
                row.len(),
                header.len()
            )));
        }
        text.push_str(&row.join(","));
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Reads a file written by [`write_csv`]; returns the header and the rows.
pub fn read_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::parse(path, "empty csv"))?
        .split(',')
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row: Vec<String> = line.split(',').map(str::to_string).collect();
        if row.len() != header.len() {
            return Err(Error::parse(
                path,
                format!("row {}: {} fields, expected {}", i + 2, row.len(), header.len()),
            ));
        }
        rows.push(row);
    }
    Ok((header, rows))
}

/// Writes `summary.csv`, `runs.csv`, per-run archives and the reference sets
/// under `out`. Returns the summary rows. Failed runs appear in no file;
/// the caller decides how to surface them.
pub fn export_results(
    out: &Path,
    spec: &ExperimentSpec,
    results: &ExperimentResults,
) -> Result<Vec<SummaryRow>> {
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;

    let problems: Vec<String> = results.references.iter().map(|(n, _)| n.clone()).collect();
    let algorithms: Vec<String> = spec.algorithms.iter().map(|a| a.name.clone()).collect();
    let summary = summarize(&results.records, &problems, &algorithms)?;

    let summary_rows: Vec<Vec<String>> = summary
        .iter()
        .map(|r| {
            vec![
                r.problem.clone(),
                r.algorithm.clone(),
                r.indicator.clone(),
                format_value(r.mean),
                format_value(r.median),
                format_value(r.rank),
            ]
        })
        .collect();
    write_csv(
        &out.join("summary.csv"),
        &["problem", "algorithm", "indicator", "mean", "median", "rank"],
        &summary_rows,
    )?;

    let run_rows: Vec<Vec<String>> = results
        .records
        .iter()
        .map(|r| {
            vec![
                r.problem.clone(),
                r.algorithm.clone(),
                r.run.to_string(),
                r.seed.to_string(),
                r.report.archive_size.to_string(),
                format_value(r.report.igd),
                format_value(r.report.igdx),
                format_value(r.report.cr),
                format_value(r.report.psp),
            ]
        })
        .collect();
    write_csv(
        &out.join("runs.csv"),
        &["problem", "algorithm", "run", "seed", "archive_size", "igd", "igdx", "cr", "psp"],
        &run_rows,
    )?;

    for rec in &results.records {
        let dir = out.join("archives").join(&rec.problem).join(&rec.algorithm);
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        write_points(&dir.join(format!("run_{}.sol", rec.run)), &rec.archive_sol)?;
        write_points(&dir.join(format!("run_{}.obj", rec.run)), &rec.archive_obj)?;
    }

    let ref_dir = out.join("refsets");
    fs::create_dir_all(&ref_dir).map_err(|e| Error::io(&ref_dir, e))?;
    for (name, refs) in &results.references {
        write_points(&ref_dir.join(format!("{name}.sol")), &refs.sol)?;
        write_points(&ref_dir.join(format!("{name}.obj")), &refs.obj)?;
    }
    Ok(summary)
}
