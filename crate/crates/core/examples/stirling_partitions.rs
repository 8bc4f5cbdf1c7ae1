//! Counts the ways to partition N points into K nonempty clusters, the size
//! of the search space k-means explores.
//!
//! Run with `cargo run --example stirling_partitions`.

use kmeans_init::metrics::stirling2;

fn main() -> kmeans_init::Result<()> {
    for (n, k) in [(10, 3), (25, 4), (50, 5), (150, 3), (683, 2)] {
        let count = stirling2(n, k)?.to_string();
        let shown = if count.len() > 24 {
            format!(
                "{}...{} ({} digits)",
                &count[..8],
                &count[count.len() - 8..],
                count.len()
            )
        } else {
            count
        };
        println!("S({n}, {k}) = {shown}");
    }
    Ok(())
}
