//! Runs the seeding benchmark over CSV datasets.
//!
//! Exit status: 0 when every cell succeeded, 1 when any cell failed,
//! 2 on configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kmeans_init::bench::{emit_report, run_benchmark, BenchConfig, DatasetEntry};
use kmeans_init::{Error, Method, ReportFormat};

#[derive(Debug, Parser)]
#[command(
    name = "bench",
    version,
    about = "Compare deterministic k-means seeding methods"
)]
struct Args {
    /// TOML config file.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Dataset spec, repeatable: PATH[,class=IDX][,k=K][,name=NAME][,header=yes|no][,delim=C][,missing=drop|strict]
    #[arg(long = "data", value_name = "SPEC")]
    data: Vec<String>,

    /// Comma-separated method ids.
    #[arg(long, value_name = "mm,kk,vp,pp,ms,ms+")]
    methods: Option<String>,

    #[arg(long)]
    epsilon: Option<f64>,

    #[arg(long = "max-iters")]
    max_iters: Option<usize>,

    /// Skip min-max normalization.
    #[arg(long = "no-normalize")]
    no_normalize: bool,

    /// csv, md or json
    #[arg(long)]
    format: Option<String>,

    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn build_config(args: &Args) -> Result<BenchConfig, Error> {
    let mut config = match &args.config {
        Some(path) => BenchConfig::load(path)?,
        None => BenchConfig::default(),
    };
    for spec in &args.data {
        config.datasets.push(DatasetEntry::parse_cli(spec)?);
    }
    if let Some(m) = &args.methods {
        config.methods = Method::parse_list(m)?;
    }
    if let Some(e) = args.epsilon {
        config.kmeans.epsilon = e;
    }
    if let Some(m) = args.max_iters {
        config.kmeans.max_iterations = m;
    }
    if args.no_normalize {
        config.normalize = false;
    }
    if let Some(f) = &args.format {
        config.format = f.parse::<ReportFormat>()?;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bench: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run_benchmark(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bench: {e}");
            return ExitCode::from(2);
        }
    };
    let text = emit_report(&report, config.format);
    let written = match &args.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("bench: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if report.has_errors() {
        for d in &report.datasets {
            for c in d.cells.iter().filter(|c| c.error.is_some()) {
                eprintln!(
                    "bench: {} / {}: {}",
                    d.name,
                    c.method,
                    c.error.as_deref().unwrap_or("")
                );
            }
        }
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
