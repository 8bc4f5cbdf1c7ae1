//! Loads a CSV with missing values and a class column, then min-max
//! normalizes it.
//!
//! Run with `cargo run --example load_and_normalize`.

use std::path::Path;

use kmeans_init::dataset::{load_csv, minmax_normalize};
use kmeans_init::{CsvOptions, MissingPolicy};

fn main() -> kmeans_init::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/breast_cancer_wisconsin.csv");
    let mut options = CsvOptions {
        class_column: Some(9),
        ..CsvOptions::default()
    };
    let data = load_csv(&path, &options)?;
    println!(
        "{}: {} rows kept, {} attributes, {} classes {:?}",
        data.name(),
        data.len(),
        data.dim(),
        data.class_count().unwrap_or(0),
        data.class_names()
    );

    let raw = data.attribute_stats();
    let scaled = minmax_normalize(&data).attribute_stats();
    println!(
        "{:<24} {:>6} {:>6} {:>8} {:>8}",
        "attribute", "min", "max", "mean", "scaled"
    );
    for (a, name) in data.attribute_names().iter().enumerate() {
        println!(
            "{name:<24} {:>6} {:>6} {:>8.4} {:>8.4}",
            raw.min[a], raw.max[a], raw.mean[a], scaled.mean[a]
        );
    }

    // the strict policy refuses rows with missing values instead of dropping them
    options.missing_policy = MissingPolicy::Strict;
    if let Err(e) = load_csv(&path, &options) {
        println!("strict loading: {e}");
    }
    Ok(())
}
