//! Dominant eigenvector of a covariance matrix, as used by PCA-Part.
//!
//! Run with `cargo run --example power_method`.

use kmeans_init::init::principal_eigenvector;

fn main() -> kmeans_init::Result<()> {
    let matrices: [(&str, usize, Vec<f64>); 3] = [
        ("2x2, eigenvalues 3 and 1", 2, vec![2.0, 1.0, 1.0, 2.0]),
        (
            "diagonal",
            3,
            vec![1.0, 0.0, 0.0, 0.0, 4.0, 0.0, 0.0, 0.0, 2.0],
        ),
        (
            // the largest diagonal entry is not on the dominant direction
            "start vector orthogonal to the answer",
            3,
            vec![1.0, 0.0, 0.0, 0.0, 0.9, 0.9, 0.0, 0.9, 0.9],
        ),
    ];
    for (label, dim, m) in matrices {
        let v = principal_eigenvector(&m, dim)?;
        let av: Vec<f64> = (0..dim)
            .map(|i| (0..dim).map(|j| m[i * dim + j] * v[j]).sum())
            .collect();
        let lambda: f64 = av.iter().zip(&v).map(|(a, b)| a * b).sum();
        println!("{label}: v = {v:.6?}, lambda = {lambda:.6}");
    }
    Ok(())
}
