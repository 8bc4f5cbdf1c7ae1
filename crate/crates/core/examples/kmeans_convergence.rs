//! Shows the SSE trace of Lloyd's iterations and the effect of epsilon and
//! the iteration cap.
//!
//! Run with `cargo run --example kmeans_convergence`.

use std::path::Path;

use kmeans_init::dataset::{load_csv, minmax_normalize};
use kmeans_init::init::initialize;
use kmeans_init::lloyd::kmeans;
use kmeans_init::{CsvOptions, KMeansConfig, Method};

fn main() -> kmeans_init::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/wine.csv");
    let options = CsvOptions {
        class_column: Some(13),
        ..CsvOptions::default()
    };
    let data = minmax_normalize(&load_csv(path, &options)?);
    let seeds = initialize(Method::Maxisum, &data, 3)?;

    for config in [
        KMeansConfig::default(),
        KMeansConfig {
            epsilon: 1e-2,
            ..KMeansConfig::default()
        },
        KMeansConfig {
            max_iterations: 3,
            ..KMeansConfig::default()
        },
    ] {
        let run = kmeans(&data, &seeds, &config)?;
        println!(
            "epsilon {:e}, cap {}: {} iterations, stopped by {}",
            config.epsilon,
            config.max_iterations,
            run.iterations,
            run.converged_by.as_str()
        );
        let trace: Vec<String> = run.sse_trace.iter().map(|s| format!("{s:.4}")).collect();
        println!("  SSE trace: {}", trace.join(" > "));
        println!("  cluster sizes: {:?}", run.assignment.counts());
    }
    Ok(())
}
