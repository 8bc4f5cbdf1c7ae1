//! Divisive hierarchical seeding (Var-Part and PCA-Part).
//!
//! Starting from one cluster holding every point, the cluster with the
//! greatest SSE is repeatedly cut in two by a hyperplane through its
//! centroid. Var-Part orients the hyperplane orthogonal to the coordinate
//! axis of greatest variance; PCA-Part orthogonal to the principal
//! eigenvector of the cluster covariance. A point goes to the first child
//! when its projection is `<=` the centroid's projection.

use crate::dataset::{centroid_of, dot, sq_dist, Dataset};
use crate::error::{Error, Result};
use crate::sum::{exact_sum, ExactSum};

use super::power::principal_eigenvector;
use super::{check_k, Centers, Method};

/// One cluster of the divisive partition.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitState {
    /// Row indices of the members, ascending.
    pub members: Vec<usize>,
    pub centroid: Vec<f64>,
    pub sse: f64,
    /// At least two distinct points.
    pub splittable: bool,
}

impl SplitState {
    pub fn from_members(data: &Dataset, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        let centroid = centroid_of(data, &members);
        let sse = exact_sum(members.iter().map(|&j| sq_dist(data.point(j), &centroid)));
        let first = data.point(members[0]);
        let splittable = members[1..].iter().any(|&j| data.point(j) != first);
        Self {
            members,
            centroid,
            sse,
            splittable,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SplitDirection {
    /// Coordinate axis index.
    Axis(usize),
    /// Unit vector.
    Vector(Vec<f64>),
}

impl SplitDirection {
    fn project(&self, p: &[f64]) -> f64 {
        match self {
            SplitDirection::Axis(a) => p[*a],
            SplitDirection::Vector(v) => dot(p, v),
        }
    }
}

/// One executed split.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitRecord {
    /// Position of the split cluster in the cluster list at the time of the split.
    pub cluster: usize,
    pub direction: SplitDirection,
    /// Projection of the cluster centroid onto the direction.
    pub threshold: f64,
    /// PCA-Part fell back to the max-variance axis.
    pub used_fallback: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRule {
    MaxVarianceAxis,
    PrincipalAxis,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisivePartition {
    /// Clusters in creation order: a split replaces the parent with its first
    /// child and appends the second child.
    pub clusters: Vec<SplitState>,
    pub splits: Vec<SplitRecord>,
}

impl DivisivePartition {
    pub fn centers(&self, dim: usize, method: Method) -> Centers {
        Centers::from_points(
            dim,
            self.clusters.iter().map(|c| c.centroid.as_slice()),
            method,
        )
    }
}

/// Picks the splittable cluster with the greatest SSE; ties go to the lowest position.
pub fn select_split_cluster(states: &[SplitState]) -> Result<usize> {
    states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.splittable)
        .fold(None, |best: Option<(usize, f64)>, (i, s)| match best {
            Some((_, b)) if s.sse <= b => best,
            _ => Some((i, s.sse)),
        })
        .map(|(i, _)| i)
        .ok_or(Error::NoSplittableCluster)
}

/// Runs `k - 1` select-and-split rounds.
pub fn divisive_partition(data: &Dataset, k: usize, rule: SplitRule) -> Result<DivisivePartition> {
    check_k(data, k)?;
    let mut clusters = vec![SplitState::from_members(data, (0..data.len()).collect())];
    let mut splits = Vec::with_capacity(k - 1);
    while clusters.len() < k {
        let i = select_split_cluster(&clusters).map_err(|_| Error::TooFewDistinctPoints {
            k,
            distinct: clusters.len(),
        })?;
        match split(data, &clusters[i], rule) {
            Some((first, second, record)) => {
                clusters[i] = first;
                clusters.push(second);
                splits.push(SplitRecord {
                    cluster: i,
                    ..record
                });
            }
            None => clusters[i].splittable = false,
        }
    }
    Ok(DivisivePartition { clusters, splits })
}

/// Var-Part seeding: centroids of the final `k` clusters.
pub fn var_part_init(data: &Dataset, k: usize) -> Result<Centers> {
    Ok(divisive_partition(data, k, SplitRule::MaxVarianceAxis)?
        .centers(data.dim(), Method::VarPart))
}

/// PCA-Part seeding: centroids of the final `k` clusters.
pub fn pca_part_init(data: &Dataset, k: usize) -> Result<Centers> {
    Ok(divisive_partition(data, k, SplitRule::PrincipalAxis)?.centers(data.dim(), Method::PcaPart))
}

fn split(
    data: &Dataset,
    cluster: &SplitState,
    rule: SplitRule,
) -> Option<(SplitState, SplitState, SplitRecord)> {
    let axis = SplitDirection::Axis(max_variance_axis(data, cluster));
    if rule == SplitRule::PrincipalAxis {
        if let Ok(v) = principal_eigenvector(&covariance(data, cluster), data.dim()) {
            if let Some(done) = split_along(data, cluster, SplitDirection::Vector(v), false) {
                return Some(done);
            }
        }
        return split_along(data, cluster, axis, true);
    }
    split_along(data, cluster, axis, false)
}

fn split_along(
    data: &Dataset,
    cluster: &SplitState,
    direction: SplitDirection,
    used_fallback: bool,
) -> Option<(SplitState, SplitState, SplitRecord)> {
    let threshold = direction.project(&cluster.centroid);
    let (first, second): (Vec<usize>, Vec<usize>) = cluster
        .members
        .iter()
        .partition(|&&j| direction.project(data.point(j)) <= threshold);
    if first.is_empty() || second.is_empty() {
        return None;
    }
    Some((
        SplitState::from_members(data, first),
        SplitState::from_members(data, second),
        SplitRecord {
            cluster: 0,
            direction,
            threshold,
            used_fallback,
        },
    ))
}

fn max_variance_axis(data: &Dataset, cluster: &SplitState) -> usize {
    let mut best = 0;
    let mut best_var = f64::NEG_INFINITY;
    for a in 0..data.dim() {
        let c = cluster.centroid[a];
        let var = exact_sum(cluster.members.iter().map(|&j| {
            let t = data.point(j)[a] - c;
            t * t
        }));
        if var > best_var {
            best = a;
            best_var = var;
        }
    }
    best
}

/// Scatter matrix of the cluster (covariance up to the 1/(n-1) factor,
/// which does not change eigenvectors).
fn covariance(data: &Dataset, cluster: &SplitState) -> Vec<f64> {
    let d = data.dim();
    let mut sums = vec![ExactSum::new(); d * (d + 1) / 2];
    let mut dev = vec![0.0; d];
    for &j in &cluster.members {
        for (t, (x, c)) in dev
            .iter_mut()
            .zip(data.point(j).iter().zip(&cluster.centroid))
        {
            *t = x - c;
        }
        let mut idx = 0;
        for a in 0..d {
            for b in 0..=a {
                sums[idx].add(dev[a] * dev[b]);
                idx += 1;
            }
        }
    }
    let mut m = vec![0.0; d * d];
    let mut idx = 0;
    for a in 0..d {
        for b in 0..=a {
            let v = sums[idx].value();
            m[a * d + b] = v;
            m[b * d + a] = v;
            idx += 1;
        }
    }
    m
}
