//! Traces the Var-Part splits on the raw Ruspini data.
//!
//! Run with `cargo run --example var_part_ruspini`.

use std::path::Path;

use kmeans_init::dataset::load_csv;
use kmeans_init::init::{divisive_partition, SplitDirection, SplitRule};
use kmeans_init::{CsvOptions, Method};

fn main() -> kmeans_init::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/ruspini.csv");
    let data = load_csv(path, &CsvOptions::default())?;

    for rule in [SplitRule::MaxVarianceAxis, SplitRule::PrincipalAxis] {
        let part = divisive_partition(&data, 4, rule)?;
        println!("{rule:?}");
        for (i, split) in part.splits.iter().enumerate() {
            let direction = match &split.direction {
                SplitDirection::Axis(a) => data.attribute_names()[*a].clone(),
                SplitDirection::Vector(v) => format!("{v:.4?}"),
            };
            println!(
                "  split {}: cluster {} along {direction} at {:.6}{}",
                i + 1,
                split.cluster,
                split.threshold,
                if split.used_fallback {
                    " (fallback)"
                } else {
                    ""
                }
            );
        }
        let method = match rule {
            SplitRule::MaxVarianceAxis => Method::VarPart,
            SplitRule::PrincipalAxis => Method::PcaPart,
        };
        for (c, cluster) in part.centers(data.dim(), method).iter().zip(&part.clusters) {
            println!(
                "  center {c:.3?}  size {:>2}  SSE {:.1}",
                cluster.members.len(),
                cluster.sse
            );
        }
    }
    Ok(())
}
