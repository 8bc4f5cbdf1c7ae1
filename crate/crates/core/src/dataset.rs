//! Tabular numeric data: CSV loading, min-max normalization, and the
//! geometric primitives (squared distance, centroid) shared by every
//! other module.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::{exact_sum, ExactSum};

/// What to do with a row that contains a missing marker (empty cell or `?`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MissingPolicy {
    /// Drop the row.
    #[default]
    Drop,
    /// Fail on the first missing value.
    Strict,
}

#[derive(Debug, Clone)]
pub struct CsvOptions {
    pub delimiter: u8,
    pub has_header: bool,
    /// Zero-based index of the column holding class labels. Excluded from the points.
    pub class_column: Option<usize>,
    pub missing_policy: MissingPolicy,
}

impl Default for CsvOptions {
    fn default() -> Self {
        Self {
            delimiter: b',',
            has_header: true,
            class_column: None,
            missing_policy: MissingPolicy::Drop,
        }
    }
}

/// An immutable N x D matrix of finite values with attribute names and
/// optional class labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    name: String,
    attribute_names: Vec<String>,
    dim: usize,
    values: Vec<f64>,
    class_labels: Option<Vec<u32>>,
    class_names: Vec<String>,
}

impl Dataset {
    /// Builds a dataset from row vectors. Every row must have
    /// `attribute_names.len()` finite values.
    pub fn new(
        name: impl Into<String>,
        attribute_names: Vec<String>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let dim = attribute_names.len();
        if dim == 0 {
            return Err(Error::NoAttributes);
        }
        if rows.is_empty() {
            return Err(Error::NoRows);
        }
        let mut values = Vec::with_capacity(rows.len() * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::RaggedRow {
                    row,
                    expected: dim,
                    found: r.len(),
                });
            }
            if let Some(column) = r.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { row, column });
            }
            values.extend(r);
        }
        Ok(Self {
            name: name.into(),
            attribute_names,
            dim,
            values,
            class_labels: None,
            class_names: Vec::new(),
        })
    }

    /// Like [`Dataset::new`] with attributes named `a1..aD`.
    pub fn from_rows(name: impl Into<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        let names = (1..=dim).map(|d| format!("a{d}")).collect();
        Self::new(name, names, rows)
    }

    /// Attaches one class label per row. Labels are mapped to ids in sorted
    /// label order, so ids do not depend on row order.
    pub fn with_class_labels<S: AsRef<str>>(mut self, labels: &[S]) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: labels.len(),
            });
        }
        let distinct: BTreeSet<&str> = labels.iter().map(AsRef::as_ref).collect();
        let class_names: Vec<String> = distinct.iter().map(|s| s.to_string()).collect();
        let ids = labels
            .iter()
            .map(|l| {
                class_names
                    .binary_search_by(|c| c.as_str().cmp(l.as_ref()))
                    .expect("label is in the distinct set") as u32
            })
            .collect();
        self.class_labels = Some(ids);
        self.class_names = class_names;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of points, N.
    pub fn len(&self) -> usize {
        self.values.len() / self.dim
    }

    /// Always false: a dataset holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of attributes, D.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    pub fn point(&self, index: usize) -> &[f64] {
        &self.values[index * self.dim..(index + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.dim)
    }

    /// Row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn column(&self, attribute: usize) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.values[attribute..].iter().step_by(self.dim).copied()
    }

    pub fn class_labels(&self) -> Option<&[u32]> {
        self.class_labels.as_deref()
    }

    /// Distinct class labels in id order.
    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    /// Number of distinct class labels, K'.
    pub fn class_count(&self) -> Option<usize> {
        self.class_labels.as_ref().map(|_| self.class_names.len())
    }

    /// A copy with rows taken in the given order (indices may repeat or be omitted).
    pub fn select_rows(&self, order: &[usize]) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::NoRows);
        }
        let mut values = Vec::with_capacity(order.len() * self.dim);
        for &i in order {
            values.extend_from_slice(self.point(i));
        }
        let class_labels = self
            .class_labels
            .as_ref()
            .map(|l| order.iter().map(|&i| l[i]).collect());
        Ok(Self {
            values,
            class_labels,
            ..self.clone()
        })
    }

    pub fn attribute_stats(&self) -> AttributeStats {
        AttributeStats::compute(self)
    }
}

/// Per-attribute mean, sample standard deviation (divisor N - 1), min and max.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeStats {
    pub mean: Vec<f64>,
    pub std_dev: Vec<f64>,
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl AttributeStats {
    pub fn compute(data: &Dataset) -> Self {
        let n = data.len();
        let d = data.dim();
        let mut stats = Self {
            mean: Vec::with_capacity(d),
            std_dev: Vec::with_capacity(d),
            min: Vec::with_capacity(d),
            max: Vec::with_capacity(d),
        };
        for a in 0..d {
            let (lo, hi) = data
                .column(a)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v), hi.max(v))
                });
            let mean = (exact_sum(data.column(a)) / n as f64).clamp(lo, hi);
            let std_dev = if n > 1 {
                let ss = exact_sum(data.column(a).map(|v| (v - mean) * (v - mean)));
                (ss / (n - 1) as f64).sqrt()
            } else {
                0.0
            };
            stats.mean.push(mean);
            stats.std_dev.push(std_dev);
            stats.min.push(lo);
            stats.max.push(hi);
        }
        stats
    }
}

/// Loads a CSV file. The dataset name defaults to the file stem.
pub fn load_csv(path: impl AsRef<Path>, options: &CsvOptions) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".to_string());
    read_csv(file, name, options)
}

fn is_missing(cell: &str) -> bool {
    cell.is_empty() || cell == "?"
}

/// Parses CSV from any reader.
pub fn read_csv<R: Read>(
    reader: R,
    name: impl Into<String>,
    options: &CsvOptions,
) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(options.has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let header: Option<Vec<String>> = if options.has_header {
        Some(rdr.headers()?.iter().map(str::to_string).collect())
    } else {
        None
    };

    let mut width = header.as_ref().map(Vec::len);
    let mut rows = Vec::new();
    let mut labels = Vec::new();

    for (i, record) in rdr.records().enumerate() {
        let record = record?;
        let row = record.position().map_or(i + 1, |p| p.line() as usize);
        // Blank lines come through as a single empty field.
        if record.len() == 1 && record[0].is_empty() && width != Some(1) {
            continue;
        }
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(Error::RaggedRow {
                row,
                expected,
                found: record.len(),
            });
        }
        if let Some(c) = options.class_column {
            if c >= expected {
                return Err(Error::ClassColumnOutOfRange {
                    column: c,
                    columns: expected,
                });
            }
        }

        let mut values = Vec::with_capacity(expected);
        let mut label = None;
        let mut missing = None;
        for (column, cell) in record.iter().enumerate() {
            if Some(column) == options.class_column {
                if is_missing(cell) {
                    missing.get_or_insert(column);
                } else {
                    label = Some(cell.to_string());
                }
                continue;
            }
            if is_missing(cell) {
                missing.get_or_insert(column);
                continue;
            }
            let v: f64 = cell.parse().map_err(|_| Error::NonNumeric {
                row,
                column,
                value: cell.to_string(),
            })?;
            if !v.is_finite() {
                return Err(Error::NonFinite { row, column });
            }
            values.push(v);
        }
        if let Some(column) = missing {
            match options.missing_policy {
                MissingPolicy::Drop => continue,
                MissingPolicy::Strict => return Err(Error::MissingValue { row, column }),
            }
        }
        rows.push(values);
        if let Some(l) = label {
            labels.push(l);
        }
    }

    let width = width.ok_or(Error::NoRows)?;
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    let attribute_names: Vec<String> = match header {
        Some(h) => h
            .into_iter()
            .enumerate()
            .filter(|(c, _)| Some(*c) != options.class_column)
            .map(|(_, n)| n)
            .collect(),
        None => (0..width)
            .filter(|c| Some(*c) != options.class_column)
            .enumerate()
            .map(|(d, _)| format!("a{}", d + 1))
            .collect(),
    };
    let data = Dataset::new(name, attribute_names, rows)?;
    if options.class_column.is_some() {
        data.with_class_labels(&labels)
    } else {
        Ok(data)
    }
}

/// Guesses whether the first line of a CSV file is a header: it is when any
/// non-class cell is neither a number nor a missing marker.
pub fn sniff_header(
    path: impl AsRef<Path>,
    delimiter: u8,
    class_column: Option<usize>,
) -> Result<bool> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file);
    let mut first = csv::StringRecord::new();
    if !rdr.read_record(&mut first)? {
        return Ok(false);
    }
    Ok(first
        .iter()
        .enumerate()
        .filter(|(c, _)| Some(*c) != class_column)
        .any(|(_, cell)| !is_missing(cell) && cell.parse::<f64>().is_err()))
}

/// Maps every attribute affinely onto [0, 1]. Constant attributes become 0.
pub fn minmax_normalize(data: &Dataset) -> Dataset {
    let stats = data.attribute_stats();
    let d = data.dim();
    let values = data
        .values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let a = i % d;
            let range = stats.max[a] - stats.min[a];
            if range > 0.0 {
                ((v - stats.min[a]) / range).clamp(0.0, 1.0)
            } else {
                0.0
            }
        })
        .collect();
    Dataset {
        values,
        ..data.clone()
    }
}

/// Squared Euclidean distance.
pub fn sq_euclidean(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(sq_dist(a, b))
}

#[inline]
pub(crate) fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let t = x - y;
            t * t
        })
        .sum()
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Componentwise arithmetic mean of a nonempty set of points.
pub fn centroid(points: &[&[f64]]) -> Result<Vec<f64>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.len(),
        });
    }
    Ok(mean_of(points.iter().copied(), dim, points.len()))
}

/// Centroid of the rows of `data` listed in `members` (nonempty).
pub(crate) fn centroid_of(data: &Dataset, members: &[usize]) -> Vec<f64> {
    mean_of(
        members.iter().map(|&i| data.point(i)),
        data.dim(),
        members.len(),
    )
}

fn mean_of<'a>(points: impl Iterator<Item = &'a [f64]>, dim: usize, count: usize) -> Vec<f64> {
    let mut sums = vec![ExactSum::new(); dim];
    for p in points {
        for (s, &v) in sums.iter_mut().zip(p) {
            s.add(v);
        }
    }
    sums.iter().map(|s| s.value() / count as f64).collect()
}

/// Lexicographic comparison of coordinate vectors. Used to break ties
/// between points independently of their row position.
pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}
