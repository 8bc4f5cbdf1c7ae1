//! Clustering quality and summary statistics.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dataset::{sq_dist, Dataset};
use crate::error::{Error, Result};
use crate::init::Centers;
use crate::lloyd::{nearest, Assignment};
use crate::sum::exact_sum;

/// Sum of squared distances from each point to its cluster center.
///
/// Without an explicit assignment every point is measured against its
/// nearest center.
pub fn sse(data: &Dataset, centers: &Centers, assignment: Option<&Assignment>) -> Result<f64> {
    if centers.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            found: centers.dim(),
        });
    }
    match assignment {
        None => Ok(exact_sum(data.points().map(|p| nearest(p, centers).1))),
        Some(a) => {
            if a.labels().len() != data.len() {
                return Err(Error::DimensionMismatch {
                    expected: data.len(),
                    found: a.labels().len(),
                });
            }
            if a.k() != centers.len() {
                return Err(Error::DimensionMismatch {
                    expected: centers.len(),
                    found: a.k(),
                });
            }
            Ok(exact_sum(
                data.points()
                    .zip(a.labels())
                    .map(|(p, &l)| sq_dist(p, centers.get(l))),
            ))
        }
    }
}

/// Divides every value by the largest one.
pub fn normalize_vs_worst(values: &[f64]) -> Result<Vec<f64>> {
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if worst <= 0.0 {
        return Err(Error::AllZero);
    }
    Ok(values.iter().map(|v| v / worst).collect())
}

/// Five-number summary plus mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
}

/// Quartiles use linear interpolation between order statistics: the
/// p-quantile of sorted `x[0..n]` sits at position `p * (n - 1)`.
pub fn five_number_summary(values: &[f64]) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let quantile = |p: f64| {
        let pos = p * (sorted.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        let frac = pos - lo as f64;
        sorted[lo] + (sorted[hi] - sorted[lo]) * frac
    };
    let mean = exact_sum(values.iter().copied()) / values.len() as f64;
    let (min, max) = (sorted[0], sorted[sorted.len() - 1]);
    Ok(SummaryStats {
        min,
        q1: quantile(0.25),
        median: quantile(0.5),
        q3: quantile(0.75),
        max,
        mean: mean.clamp(min, max),
    })
}

/// Stirling number of the second kind: the number of partitions of `n`
/// items into `k` non-empty groups, by the recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroClusters);
    }
    if k > n {
        return Err(Error::TooManyClusters { k, n });
    }
    // row[j] holds S(i, j) for the current i
    let mut row = vec![BigUint::from(0u32); k + 1];
    row[0] = BigUint::from(1u32);
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let carried = &row[j] * BigUint::from(j);
            row[j] = carried + &row[j - 1];
        }
        row[0] = BigUint::from(0u32);
    }
    Ok(row.swap_remove(k))
}
