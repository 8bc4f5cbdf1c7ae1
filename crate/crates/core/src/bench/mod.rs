//! Benchmark harness: runs every (dataset, method) cell, computes initial
//! SSE, final SSE and iteration counts, normalizes SSEs against the worst
//! method per dataset and summarizes each method across datasets.
//!
//! Cells run concurrently; results are assembled in dataset order, then in
//! the canonical method order, so reports do not depend on scheduling.

mod config;
mod report;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{load_csv, minmax_normalize, sniff_header, Dataset};
use crate::error::Result;
use crate::init::{initialize, Method};
use crate::lloyd::{kmeans, ConvergedBy, KMeansConfig};
use crate::metrics::{five_number_summary, normalize_vs_worst, sse, SummaryStats};

pub use config::{BenchConfig, DatasetEntry, ReportFormat};
pub use report::{emit_report, format_sig6};

/// Scores of one successful cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellScores {
    pub initial_sse: f64,
    pub final_sse: f64,
    pub iterations: usize,
    pub converged_by: ConvergedBy,
    /// Initial SSE divided by the worst initial SSE on this dataset.
    pub is_pct: f64,
    /// Final SSE divided by the worst final SSE on this dataset.
    pub fs_pct: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub method: Method,
    pub scores: Option<CellScores>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetResult {
    pub name: String,
    /// Points after dropping rows with missing values.
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub cells: Vec<Cell>,
}

/// Statistics of one method over all datasets where it succeeded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodSummary {
    pub method: Method,
    pub is_pct: Option<SummaryStats>,
    pub fs_pct: Option<SummaryStats>,
    pub iterations: Option<SummaryStats>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub normalized: bool,
    pub epsilon: f64,
    pub max_iterations: usize,
    pub methods: Vec<Method>,
    pub datasets: Vec<DatasetResult>,
    pub summary: Vec<MethodSummary>,
}

impl BenchReport {
    pub fn has_errors(&self) -> bool {
        self.datasets
            .iter()
            .flat_map(|d| &d.cells)
            .any(|c| c.error.is_some())
    }

    pub fn cell(&self, dataset: &str, method: Method) -> Option<&Cell> {
        self.datasets
            .iter()
            .find(|d| d.name == dataset)?
            .cells
            .iter()
            .find(|c| c.method == method)
    }
}

/// One initialization followed by k-means, with the raw measurements.
#[derive(Debug, Clone)]
pub struct CellRun {
    pub initial_sse: f64,
    pub run: crate::lloyd::RunResult,
}

/// Runs one cell on already prepared (normalized) data.
pub fn run_cell(
    data: &Dataset,
    method: Method,
    k: usize,
    config: &KMeansConfig,
) -> Result<CellRun> {
    let seeds = initialize(method, data, k)?;
    let initial_sse = sse(data, &seeds, None)?;
    let run = kmeans(data, &seeds, config)?;
    Ok(CellRun { initial_sse, run })
}

/// Loads a dataset as described by the entry and resolves its K.
pub fn prepare_dataset(entry: &DatasetEntry, normalize: bool) -> Result<(Dataset, usize)> {
    let has_header = match entry.header {
        Some(h) => h,
        None => sniff_header(&entry.path, entry.delimiter_byte()?, entry.class_column)?,
    };
    let data =
        load_csv(&entry.path, &entry.csv_options(has_header)?)?.with_name(entry.display_name());
    let k = match (entry.k, data.class_count()) {
        (Some(k), _) | (None, Some(k)) => k,
        (None, None) => {
            return Err(crate::Error::Config(format!(
                "{}: cannot resolve K without a class column",
                entry.display_name()
            )))
        }
    };
    let data = if normalize {
        minmax_normalize(&data)
    } else {
        data
    };
    Ok((data, k))
}

/// Runs the whole grid. Configuration errors abort; failures of a single
/// dataset or cell are recorded in the report.
pub fn run_benchmark(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| config.methods.contains(m))
        .collect();

    let datasets: Vec<DatasetResult> = config
        .datasets
        .par_iter()
        .map(|entry| run_dataset(entry, &methods, config))
        .collect();

    let summary = methods
        .iter()
        .map(|&method| {
            let scores: Vec<&CellScores> = datasets
                .iter()
                .flat_map(|d| &d.cells)
                .filter(|c| c.method == method)
                .filter_map(|c| c.scores.as_ref())
                .collect();
            let stats = |f: fn(&CellScores) -> f64| {
                let v: Vec<f64> = scores.iter().map(|s| f(s)).collect();
                five_number_summary(&v).ok()
            };
            MethodSummary {
                method,
                is_pct: stats(|s| s.is_pct),
                fs_pct: stats(|s| s.fs_pct),
                iterations: stats(|s| s.iterations as f64),
            }
        })
        .collect();

    Ok(BenchReport {
        normalized: config.normalize,
        epsilon: config.kmeans.epsilon,
        max_iterations: config.kmeans.max_iterations,
        methods,
        datasets,
        summary,
    })
}

fn run_dataset(entry: &DatasetEntry, methods: &[Method], config: &BenchConfig) -> DatasetResult {
    let name = entry.display_name();
    let (data, k) = match prepare_dataset(entry, config.normalize) {
        Ok(v) => v,
        Err(e) => {
            let error = e.to_string();
            return DatasetResult {
                name,
                n: None,
                d: None,
                k: entry.k,
                cells: methods
                    .iter()
                    .map(|&method| Cell {
                        method,
                        scores: None,
                        error: Some(error.clone()),
                    })
                    .collect(),
            };
        }
    };

    let runs: Vec<Result<CellRun>> = methods
        .par_iter()
        .map(|&m| run_cell(&data, m, k, &config.kmeans))
        .collect();

    let ok: Vec<&CellRun> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let is_pct = normalize_vs_worst(&ok.iter().map(|r| r.initial_sse).collect::<Vec<_>>()).ok();
    let fs_pct = normalize_vs_worst(&ok.iter().map(|r| r.run.final_sse()).collect::<Vec<_>>()).ok();

    let mut next_ok = 0;
    let cells = methods
        .iter()
        .zip(runs)
        .map(|(&method, run)| match run {
            Ok(r) => {
                let i = next_ok;
                next_ok += 1;
                Cell {
                    method,
                    scores: Some(CellScores {
                        initial_sse: r.initial_sse,
                        final_sse: r.run.final_sse(),
                        iterations: r.run.iterations,
                        converged_by: r.run.converged_by,
                        is_pct: is_pct.as_ref().map_or(0.0, |p| p[i]),
                        fs_pct: fs_pct.as_ref().map_or(0.0, |p| p[i]),
                    }),
                    error: None,
                }
            }
            Err(e) => Cell {
                method,
                scores: None,
                error: Some(e.to_string()),
            },
        })
        .collect();

    DatasetResult {
        name,
        n: Some(data.len()),
        d: Some(data.dim()),
        k: Some(k),
        cells,
    }
}
