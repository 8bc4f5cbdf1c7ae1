//! Batch k-means (Lloyd's algorithm).
//!
//! One iteration is one assignment step followed by one update step.
//! `SSE_i` is the SSE of the clustering at the end of iteration `i` (points
//! as assigned in that iteration, measured against the updated centers).
//! From the second iteration on, the run stops once
//! `(SSE_{i-1} - SSE_i) / SSE_i <= epsilon`; a zero SSE stops at once, and
//! the iteration cap stops unconditionally.

use serde::{Deserialize, Serialize};

use crate::dataset::{sq_dist, Dataset};
use crate::error::{Error, Result};
use crate::init::Centers;
use crate::sum::{exact_sum, ExactSum};

/// What happens to the center of a cluster that loses all its points.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyClusterPolicy {
    #[default]
    KeepPreviousCenter,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KMeansConfig {
    pub max_iterations: usize,
    /// Relative SSE improvement threshold.
    pub epsilon: f64,
    #[serde(default)]
    pub empty_cluster_policy: EmptyClusterPolicy,
}

impl Default for KMeansConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100,
            epsilon: 1e-6,
            empty_cluster_policy: EmptyClusterPolicy::KeepPreviousCenter,
        }
    }
}

impl KMeansConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::Config("max_iterations must be at least 1".into()));
        }
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(Error::Config(format!(
                "epsilon must be a finite non-negative number, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }
}

/// Cluster index per point and the cluster sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    labels: Vec<usize>,
    counts: Vec<usize>,
}

impl Assignment {
    /// Builds an assignment of `labels.len()` points to `k` clusters.
    pub fn from_labels(labels: Vec<usize>, k: usize) -> Result<Self> {
        let mut counts = vec![0; k];
        for &l in &labels {
            if l >= k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: l + 1,
                });
            }
            counts[l] += 1;
        }
        Ok(Self { labels, counts })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergedBy {
    Epsilon,
    MaxIterations,
}

impl ConvergedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            ConvergedBy::Epsilon => "epsilon",
            ConvergedBy::MaxIterations => "max_iterations",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub centers: Centers,
    pub assignment: Assignment,
    /// SSE at the end of each iteration.
    pub sse_trace: Vec<f64>,
    pub iterations: usize,
    pub converged_by: ConvergedBy,
}

impl RunResult {
    pub fn final_sse(&self) -> f64 {
        *self.sse_trace.last().expect("at least one iteration")
    }
}

fn check_dims(data: &Dataset, centers: &Centers) -> Result<()> {
    if centers.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            found: centers.dim(),
        });
    }
    Ok(())
}

/// Assigns every point to its nearest center; ties go to the lowest center index.
pub fn assign(data: &Dataset, centers: &Centers) -> Result<Assignment> {
    check_dims(data, centers)?;
    let k = centers.len();
    let mut counts = vec![0; k];
    let labels = data
        .points()
        .map(|p| {
            let (best, _) = nearest(p, centers);
            counts[best] += 1;
            best
        })
        .collect();
    Ok(Assignment { labels, counts })
}

pub(crate) fn nearest(p: &[f64], centers: &Centers) -> (usize, f64) {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, c) in centers.iter().enumerate() {
        let d = sq_dist(p, c);
        if d < best_d {
            best = i;
            best_d = d;
        }
    }
    (best, best_d)
}

/// Moves every center to the centroid of its cluster. Empty clusters keep
/// their previous center.
pub fn update_centers(
    data: &Dataset,
    assignment: &Assignment,
    previous: &Centers,
) -> Result<Centers> {
    check_dims(data, previous)?;
    if assignment.labels.len() != data.len() {
        return Err(Error::DimensionMismatch {
            expected: data.len(),
            found: assignment.labels.len(),
        });
    }
    if assignment.k() != previous.len() {
        return Err(Error::DimensionMismatch {
            expected: previous.len(),
            found: assignment.k(),
        });
    }
    let dim = data.dim();
    let mut sums = vec![ExactSum::new(); previous.len() * dim];
    for (p, &l) in data.points().zip(&assignment.labels) {
        for (s, &v) in sums[l * dim..(l + 1) * dim].iter_mut().zip(p) {
            s.add(v);
        }
    }
    let mut coords = Vec::with_capacity(sums.len());
    for (i, &count) in assignment.counts.iter().enumerate() {
        if count == 0 {
            coords.extend_from_slice(previous.get(i));
        } else {
            coords.extend(
                sums[i * dim..(i + 1) * dim]
                    .iter()
                    .map(|s| s.value() / count as f64),
            );
        }
    }
    Ok(Centers::from_flat(dim, coords, previous.method()))
}

fn assignment_sse(data: &Dataset, assignment: &Assignment, centers: &Centers) -> f64 {
    exact_sum(
        data.points()
            .zip(&assignment.labels)
            .map(|(p, &l)| sq_dist(p, centers.get(l))),
    )
}

/// Runs k-means from the given initial centers.
pub fn kmeans(data: &Dataset, initial: &Centers, config: &KMeansConfig) -> Result<RunResult> {
    config.validate()?;
    check_dims(data, initial)?;
    if initial.len() > data.len() {
        return Err(Error::TooManyClusters {
            k: initial.len(),
            n: data.len(),
        });
    }

    let mut centers = initial.clone();
    let mut sse_trace: Vec<f64> = Vec::new();
    loop {
        let assignment = assign(data, &centers)?;
        centers = update_centers(data, &assignment, &centers)?;
        let sse = assignment_sse(data, &assignment, &centers);
        let iteration = sse_trace.len() + 1;

        let converged_by = if sse == 0.0 {
            Some(ConvergedBy::Epsilon)
        } else if let Some(&prev) = sse_trace.last() {
            ((prev - sse) / sse <= config.epsilon).then_some(ConvergedBy::Epsilon)
        } else {
            None
        }
        .or((iteration >= config.max_iterations).then_some(ConvergedBy::MaxIterations));

        sse_trace.push(sse);
        if let Some(converged_by) = converged_by {
            return Ok(RunResult {
                centers,
                assignment,
                sse_trace,
                iterations: iteration,
                converged_by,
            });
        }
    }
}
