//! Maxisum seeding, in a two-attribute projection (MS) or in the full
//! attribute space (MS+).

use crate::dataset::{sq_dist, Dataset};
use crate::error::{Error, Result};
use crate::sum::{exact_sum, ExactSum};

use super::{argmax_point, check_k, distinct_count, Centers, Method};

/// The two attributes MS projects onto, and the projected points.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionPlan {
    /// Attribute with the greatest absolute coefficient of variation.
    pub primary: usize,
    /// Non-constant attribute least correlated with `primary`.
    pub secondary: usize,
    projected: Vec<f64>,
}

impl ProjectionPlan {
    /// Projection of point `j`: `(x[primary], x[secondary])`.
    pub fn point(&self, j: usize) -> &[f64] {
        &self.projected[2 * j..2 * j + 2]
    }

    pub fn len(&self) -> usize {
        self.projected.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.projected.is_empty()
    }
}

/// Chooses the projection attributes.
///
/// The primary attribute maximizes `|s_d / m_d|` over non-constant
/// attributes, where a zero mean counts as an infinite ratio. The secondary
/// attribute minimizes the sum of standardized products with the primary
/// (Pearson correlation up to the positive factor N - 1). Constant
/// attributes are never chosen; ties go to the lowest index.
pub fn pick_projection_axes(data: &Dataset) -> Result<ProjectionPlan> {
    let d = data.dim();
    if d < 2 {
        return Err(Error::TooFewAttributes(d));
    }
    let stats = data.attribute_stats();
    let varying: Vec<usize> = (0..d)
        .filter(|&a| stats.max[a] > stats.min[a] && stats.std_dev[a] > 0.0)
        .collect();
    if varying.len() < 2 {
        return Err(Error::TooFewVaryingAttributes(varying.len()));
    }

    let cov = |a: usize| {
        if stats.mean[a] == 0.0 {
            f64::INFINITY
        } else {
            (stats.std_dev[a] / stats.mean[a]).abs()
        }
    };
    let primary = varying[1..].iter().fold(
        varying[0],
        |best, &a| if cov(a) > cov(best) { a } else { best },
    );

    let (m1, s1) = (stats.mean[primary], stats.std_dev[primary]);
    let corr = |a: usize| {
        let (m, s) = (stats.mean[a], stats.std_dev[a]);
        exact_sum(
            data.points()
                .map(|p| ((p[primary] - m1) / s1) * ((p[a] - m) / s)),
        )
    };
    let mut secondary = None;
    let mut best = f64::INFINITY;
    for &a in varying.iter().filter(|&&a| a != primary) {
        let r = corr(a);
        if secondary.is_none() || r < best {
            secondary = Some(a);
            best = r;
        }
    }
    let secondary = secondary.expect("at least two varying attributes");

    let projected = data
        .points()
        .flat_map(|p| [p[primary], p[secondary]])
        .collect();
    Ok(ProjectionPlan {
        primary,
        secondary,
        projected,
    })
}

/// Maxisum seeding.
///
/// The first center is the point farthest from the centroid of the working
/// space; each further center is the not-yet-chosen point with the greatest
/// sum of (unsquared) distances to the chosen centers. With `projected` the
/// working space is the two-attribute projection (MS), otherwise the full
/// space (MS+). Returned centers are always the full-dimensional points.
/// Copies of a chosen point are never chosen again, so K above the number
/// of distinct points is an error.
pub fn maxisum_init(data: &Dataset, k: usize, projected: bool) -> Result<Centers> {
    check_k(data, k)?;
    let plan = if projected {
        Some(pick_projection_axes(data)?)
    } else {
        None
    };
    let space = |j: usize| match &plan {
        Some(p) => p.point(j),
        None => data.point(j),
    };
    let method = if projected {
        Method::Maxisum
    } else {
        Method::MaxisumFull
    };
    let n = data.len();
    let width = space(0).len();

    let mut sums = vec![ExactSum::new(); width];
    for j in 0..n {
        for (s, &v) in sums.iter_mut().zip(space(j)) {
            s.add(v);
        }
    }
    let mean: Vec<f64> = sums.iter().map(|s| s.value() / n as f64).collect();
    let spread: Vec<f64> = (0..n).map(|j| sq_dist(space(j), &mean)).collect();
    let first = argmax_point(data, &spread, |_| true).expect("dataset is nonempty");

    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(k);
    let mut cumulative = vec![0.0; n];
    let mut current = first;
    loop {
        // exclude every copy of the chosen point so no center is duplicated
        let picked = data.point(current);
        for (j, c) in chosen.iter_mut().enumerate() {
            if !*c && data.point(j) == picked {
                *c = true;
            }
        }
        order.push(current);
        if order.len() == k {
            break;
        }
        let c = space(current);
        for (j, acc) in cumulative.iter_mut().enumerate() {
            *acc += sq_dist(space(j), c).sqrt();
        }
        current = argmax_point(data, &cumulative, |j| !chosen[j]).ok_or_else(|| {
            Error::TooFewDistinctPoints {
                k,
                distinct: distinct_count(data),
            }
        })?;
    }

    Ok(Centers::from_points(
        data.dim(),
        order.iter().map(|&j| data.point(j)),
        method,
    ))
}
