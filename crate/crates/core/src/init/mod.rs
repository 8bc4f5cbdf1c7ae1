//! Deterministic, order-invariant seeding methods.
//!
//! All six methods are pure functions of `(dataset, K)`. Argmax/argmin over
//! points break ties by lexicographic coordinate order, never by row index;
//! argmax/argmin over attributes break ties to the lowest attribute index.

mod divisive;
mod maximin;
mod maxisum;
mod power;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dataset::{lex_cmp, Dataset};
use crate::error::{Error, Result};

pub use divisive::{
    divisive_partition, pca_part_init, select_split_cluster, var_part_init, DivisivePartition,
    SplitDirection, SplitRecord, SplitRule, SplitState,
};
pub use maximin::{katsavounidis_init, maximin_init};
pub use maxisum::{maxisum_init, pick_projection_axes, ProjectionPlan};
pub use power::{principal_eigenvector, POWER_MAX_ITERATIONS, POWER_TOLERANCE};

/// Seeding method identifier. The string ids (`mm`, `kk`, `vp`, `pp`, `ms`,
/// `ms+`) are stable and used by the CLI, config files and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "mm")]
    Maximin,
    #[serde(rename = "kk")]
    Katsavounidis,
    #[serde(rename = "vp")]
    VarPart,
    #[serde(rename = "pp")]
    PcaPart,
    #[serde(rename = "ms")]
    Maxisum,
    #[serde(rename = "ms+")]
    MaxisumFull,
}

impl Method {
    /// Report order.
    pub const ALL: [Method; 6] = [
        Method::Maximin,
        Method::Katsavounidis,
        Method::VarPart,
        Method::PcaPart,
        Method::Maxisum,
        Method::MaxisumFull,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Method::Maximin => "mm",
            Method::Katsavounidis => "kk",
            Method::VarPart => "vp",
            Method::PcaPart => "pp",
            Method::Maxisum => "ms",
            Method::MaxisumFull => "ms+",
        }
    }

    /// Upper-case label used in tables.
    pub fn label(self) -> &'static str {
        match self {
            Method::Maximin => "MM",
            Method::Katsavounidis => "KK",
            Method::VarPart => "VP",
            Method::PcaPart => "PP",
            Method::Maxisum => "MS",
            Method::MaxisumFull => "MS+",
        }
    }

    /// Parses a comma-separated method list such as `mm,kk,ms+`.
    pub fn parse_list(list: &str) -> Result<Vec<Method>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// Runs the given seeding method.
pub fn initialize(method: Method, data: &Dataset, k: usize) -> Result<Centers> {
    match method {
        Method::Maximin => maximin_init(data, k),
        Method::Katsavounidis => katsavounidis_init(data, k),
        Method::VarPart => var_part_init(data, k),
        Method::PcaPart => pca_part_init(data, k),
        Method::Maxisum => maxisum_init(data, k, true),
        Method::MaxisumFull => maxisum_init(data, k, false),
    }
}

/// K points in R^D, in selection/creation order.
#[derive(Debug, Clone, PartialEq)]
pub struct Centers {
    method: Option<Method>,
    dim: usize,
    coords: Vec<f64>,
}

impl Centers {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.first().ok_or(Error::ZeroClusters)?.len();
        if dim == 0 {
            return Err(Error::NoAttributes);
        }
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            if let Some(column) = r.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { row, column });
            }
            coords.extend(r);
        }
        Ok(Self {
            method: None,
            dim,
            coords,
        })
    }

    pub(crate) fn from_flat(dim: usize, coords: Vec<f64>, method: Option<Method>) -> Self {
        debug_assert!(dim > 0 && !coords.is_empty() && coords.len().is_multiple_of(dim));
        Self {
            method,
            dim,
            coords,
        }
    }

    pub(crate) fn from_points<'a>(
        dim: usize,
        points: impl IntoIterator<Item = &'a [f64]>,
        method: Method,
    ) -> Self {
        let coords = points.into_iter().flatten().copied().collect();
        Self::from_flat(dim, coords, Some(method))
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = Some(method);
        self
    }

    /// The method that produced these centers, if any.
    pub fn method(&self) -> Option<Method> {
        self.method
    }

    /// Number of centers, K.
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.iter().map(<[f64]>::to_vec).collect()
    }

    /// Centers sorted lexicographically, for comparing center sets.
    pub fn sorted_rows(&self) -> Vec<Vec<f64>> {
        let mut rows = self.to_rows();
        rows.sort_by(|a, b| lex_cmp(a, b));
        rows
    }
}

pub(crate) fn check_k(data: &Dataset, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroClusters);
    }
    if k > data.len() {
        return Err(Error::TooManyClusters { k, n: data.len() });
    }
    Ok(())
}

/// Number of distinct points in the dataset.
pub(crate) fn distinct_count(data: &Dataset) -> usize {
    let mut order: Vec<usize> = (0..data.len()).collect();
    order.sort_by(|&a, &b| lex_cmp(data.point(a), data.point(b)));
    order.dedup_by(|a, b| data.point(*a) == data.point(*b));
    order.len()
}

/// Index of the point with the greatest score; ties go to the
/// lexicographically smallest point. `None` when no candidate is eligible.
pub(crate) fn argmax_point(
    data: &Dataset,
    scores: &[f64],
    eligible: impl Fn(usize) -> bool,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (j, &s) in scores.iter().enumerate() {
        if !eligible(j) {
            continue;
        }
        best = match best {
            None => Some(j),
            Some(b) => {
                let better = s > scores[b]
                    || (s == scores[b] && lex_cmp(data.point(j), data.point(b)).is_lt());
                Some(if better { j } else { b })
            }
        };
    }
    best
}
