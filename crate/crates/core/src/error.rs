use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("row {row}, column {column}: cannot parse {value:?} as a number")]
    NonNumeric {
        row: usize,
        column: usize,
        value: String,
    },

    #[error("row {row}, column {column}: missing value")]
    MissingValue { row: usize, column: usize },

    #[error("row {row} has {found} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("non-finite value at row {row}, column {column}")]
    NonFinite { row: usize, column: usize },

    #[error("class column {column} is out of range for {columns} columns")]
    ClassColumnOutOfRange { column: usize, columns: usize },

    #[error("no usable rows")]
    NoRows,

    #[error("dataset needs at least one attribute")]
    NoAttributes,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("K must be at least 1")]
    ZeroClusters,

    #[error("K exceeds N (K = {k}, N = {n})")]
    TooManyClusters { k: usize, n: usize },

    #[error("K = {k} exceeds the number of distinct points ({distinct})")]
    TooFewDistinctPoints { k: usize, distinct: usize },

    #[error("no cluster with at least two distinct points")]
    NoSplittableCluster,

    #[error("power method did not converge after {iterations} iterations")]
    NotConverged { iterations: usize },

    #[error("matrix is not square and symmetric")]
    NotSymmetric,

    #[error("projection needs at least two attributes, found {0}")]
    TooFewAttributes(usize),

    #[error("projection needs at least two non-constant attributes, found {0}")]
    TooFewVaryingAttributes(usize),

    #[error("all values are zero")]
    AllZero,

    #[error("unknown initialization method {0:?}")]
    UnknownMethod(String),

    #[error("unsupported report format {0:?}")]
    UnsupportedFormat(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}
