//! Lloyd's k-means with six linear, deterministic, order-invariant seeding
//! methods, plus the evaluation harness used to compare them.
//!
//! The seeding methods are:
//!
//! - **MM** (maximin): first center is the data centroid, every further center
//!   is the point with the greatest minimum distance to the centers so far.
//! - **KK** (Katsavounidis et al.): maximin starting from the point of largest norm.
//! - **VP** (Var-Part): divisive splitting of the max-SSE cluster through its
//!   centroid, orthogonal to its max-variance axis.
//! - **PP** (PCA-Part): the same splitting, orthogonal to the principal
//!   eigenvector of the cluster covariance (power method).
//! - **MS** (maxisum): cumulative-distance farthest-point selection in a
//!   two-attribute projection.
//! - **MS+**: maxisum in the full attribute space.
//!
//! Every reduction that feeds a comparison is computed with exactly rounded
//! summation and every argmax over points breaks ties by lexicographic
//! coordinate order, so seeding and clustering results do not depend on the
//! row order of the input.
//!
//! ```
//! use kmeans_init::{init, lloyd, metrics, Dataset, KMeansConfig, Method};
//!
//! let data = Dataset::from_rows(
//!     "toy",
//!     vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![10.0, 10.0], vec![10.0, 11.0]],
//! )
//! .unwrap();
//! let seeds = init::initialize(Method::VarPart, &data, 2).unwrap();
//! let initial_sse = metrics::sse(&data, &seeds, None).unwrap();
//! let run = lloyd::kmeans(&data, &seeds, &KMeansConfig::default()).unwrap();
//! assert!(run.final_sse() <= initial_sse);
//! assert_eq!(run.final_sse(), 1.0);
//! ```

pub mod bench;
pub mod dataset;
mod error;
pub mod init;
pub mod lloyd;
pub mod metrics;
mod sum;

pub use bench::{BenchConfig, BenchReport, ReportFormat};
pub use dataset::{AttributeStats, CsvOptions, Dataset, MissingPolicy};
pub use error::{Error, Result};
pub use init::{Centers, Method};
pub use lloyd::{Assignment, ConvergedBy, KMeansConfig, RunResult};
pub use metrics::SummaryStats;
pub use sum::ExactSum;
