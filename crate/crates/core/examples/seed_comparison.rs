//! Seeds Iris with every method, then runs k-means from each seed set.
//!
//! Run with `cargo run --example seed_comparison`.

use std::path::Path;

use kmeans_init::bench::run_cell;
use kmeans_init::dataset::{load_csv, minmax_normalize};
use kmeans_init::{CsvOptions, KMeansConfig, Method};

fn main() -> kmeans_init::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv");
    let options = CsvOptions {
        class_column: Some(4),
        ..CsvOptions::default()
    };
    let data = minmax_normalize(&load_csv(path, &options)?);
    let k = data.class_count().unwrap_or(3);

    println!(
        "{:<4} {:>10} {:>10} {:>4}  stop",
        "", "initial", "final", "NI"
    );
    for method in Method::ALL {
        let cell = run_cell(&data, method, k, &KMeansConfig::default())?;
        println!(
            "{:<4} {:>10.4} {:>10.4} {:>4}  {}",
            method.label(),
            cell.initial_sse,
            cell.run.final_sse(),
            cell.run.iterations,
            cell.run.converged_by.as_str()
        );
    }
    Ok(())
}
