//! Maximin (farthest-first) seeding and the Katsavounidis variant.

use crate::dataset::{centroid_of, sq_dist, Dataset};
use crate::error::{Error, Result};

use super::{argmax_point, check_k, distinct_count, Centers, Method};

/// Maximin seeding with the data centroid as the first center.
///
/// Each further center is the data point with the greatest minimum squared
/// distance to the centers chosen so far. The first center gives the optimal
/// SSE for K = 1.
pub fn maximin_init(data: &Dataset, k: usize) -> Result<Centers> {
    check_k(data, k)?;
    let all: Vec<usize> = (0..data.len()).collect();
    let first = centroid_of(data, &all);
    farthest_first(data, first, k, Method::Maximin)
}

/// Maximin seeding that starts from the point with the greatest norm.
pub fn katsavounidis_init(data: &Dataset, k: usize) -> Result<Centers> {
    check_k(data, k)?;
    let norms: Vec<f64> = data
        .points()
        .map(|p| p.iter().map(|v| v * v).sum())
        .collect();
    let j = argmax_point(data, &norms, |_| true).expect("dataset is nonempty");
    farthest_first(data, data.point(j).to_vec(), k, Method::Katsavounidis)
}

/// Fails when every point already coincides with a center, since a further
/// center would duplicate one.
fn farthest_first(data: &Dataset, first: Vec<f64>, k: usize, method: Method) -> Result<Centers> {
    let dim = data.dim();
    let mut min_dist: Vec<f64> = data.points().map(|p| sq_dist(p, &first)).collect();
    let mut coords = first;
    coords.reserve((k - 1) * dim);
    for _ in 1..k {
        let j = argmax_point(data, &min_dist, |_| true).expect("dataset is nonempty");
        if min_dist[j] == 0.0 {
            return Err(Error::TooFewDistinctPoints {
                k,
                distinct: distinct_count(data),
            });
        }
        let c = data.point(j);
        coords.extend_from_slice(c);
        for (m, p) in min_dist.iter_mut().zip(data.points()) {
            let d = sq_dist(p, c);
            if d < *m {
                *m = d;
            }
        }
    }
    Ok(Centers::from_flat(dim, coords, Some(method)))
}
