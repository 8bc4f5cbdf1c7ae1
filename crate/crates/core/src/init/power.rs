//! Dominant eigenvector of a symmetric positive semidefinite matrix by the
//! power method.

use crate::dataset::dot;
use crate::error::{Error, Result};

/// Residual tolerance, relative to the largest absolute matrix entry.
pub const POWER_TOLERANCE: f64 = 1e-8;
pub const POWER_MAX_ITERATIONS: usize = 1000;

/// Returns the unit eigenvector of the largest eigenvalue of the row-major
/// `dim x dim` matrix.
///
/// Iteration starts from the indicator vector of the largest diagonal entry
/// (lowest index on ties) and stops once `|A v - (v.Av) v| <= 1e-8 * max|a_ij|`.
/// If the converged eigenvalue is below half the trace, another eigenvalue
/// could be larger, so the iteration is restarted from a perturbed vector and
/// the larger of the two is kept. The sign is fixed so that the first
/// nonzero component is positive.
pub fn principal_eigenvector(matrix: &[f64], dim: usize) -> Result<Vec<f64>> {
    if dim == 0 || matrix.len() != dim * dim {
        return Err(Error::NotSymmetric);
    }
    if matrix.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { row: 0, column: 0 });
    }
    let scale = matrix.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for i in 0..dim {
        for j in 0..i {
            if (matrix[i * dim + j] - matrix[j * dim + i]).abs() > 1e-9 * scale.max(1.0) {
                return Err(Error::NotSymmetric);
            }
        }
    }

    let diag: Vec<f64> = (0..dim).map(|i| matrix[i * dim + i]).collect();
    let start = diag
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v > diag[best] { i } else { best });
    let mut v = vec![0.0; dim];
    v[start] = 1.0;
    if scale == 0.0 {
        return Ok(v);
    }

    let a: Vec<f64> = matrix.iter().map(|x| x / scale).collect();
    let trace: f64 = diag.iter().sum::<f64>() / scale;
    let (mut v, mut lambda) = iterate(&a, dim, v)?;

    // A start vector orthogonal to the dominant eigenvector converges to a
    // smaller eigenpair. Only possible when lambda < trace / 2.
    for _ in 0..dim {
        if lambda >= 0.5 * trace {
            break;
        }
        let restart = perturb(&v);
        let (w, mu) = iterate(&a, dim, restart)?;
        if mu > lambda + POWER_TOLERANCE {
            v = w;
            lambda = mu;
        } else {
            break;
        }
    }

    if let Some(first) = v.iter().find(|c| c.abs() > 1e-12) {
        if *first < 0.0 {
            v.iter_mut().for_each(|c| *c = -*c);
        }
    }
    Ok(v)
}

fn iterate(a: &[f64], dim: usize, mut v: Vec<f64>) -> Result<(Vec<f64>, f64)> {
    let mut w = vec![0.0; dim];
    for _ in 0..POWER_MAX_ITERATIONS {
        for (i, wi) in w.iter_mut().enumerate() {
            *wi = dot(&a[i * dim..(i + 1) * dim], &v);
        }
        let lambda = dot(&v, &w);
        let residual = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| (wi - lambda * vi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= POWER_TOLERANCE {
            return Ok((v, lambda));
        }
        let norm = dot(&w, &w).sqrt();
        v.iter_mut().zip(&w).for_each(|(vi, wi)| *vi = wi / norm);
    }
    Err(Error::NotConverged {
        iterations: POWER_MAX_ITERATIONS,
    })
}

/// `v` plus a small component along the all-ones direction orthogonalized
/// against `v` (or along the axis where `v` is smallest if ones is parallel).
fn perturb(v: &[f64]) -> Vec<f64> {
    let dim = v.len();
    let mut u = vec![1.0; dim];
    let along = dot(&u, v);
    u.iter_mut().zip(v).for_each(|(ui, vi)| *ui -= along * vi);
    if dot(&u, &u).sqrt() < 1e-6 {
        let k = v.iter().enumerate().fold(
            0,
            |best, (i, x)| if x.abs() < v[best].abs() { i } else { best },
        );
        u = vec![0.0; dim];
        u[k] = 1.0;
        let along = v[k];
        u.iter_mut().zip(v).for_each(|(ui, vi)| *ui -= along * vi);
    }
    let un = dot(&u, &u).sqrt();
    let mut r: Vec<f64> = v
        .iter()
        .zip(&u)
        .map(|(vi, ui)| vi + 1e-3 * ui / un)
        .collect();
    let rn = dot(&r, &r).sqrt();
    r.iter_mut().for_each(|x| *x /= rn);
    r
}
