//! Runs the bundled benchmark configuration and prints the Markdown report.
//!
//! Run with `cargo run --release --example benchmark_report`.

use std::path::Path;

use kmeans_init::bench::{emit_report, run_benchmark};
use kmeans_init::{BenchConfig, ReportFormat};

fn main() -> kmeans_init::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/classic.toml");
    let config = BenchConfig::load(path)?;
    let report = run_benchmark(&config)?;
    print!("{}", emit_report(&report, ReportFormat::Markdown));
    Ok(())
}
