//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p kmeans-init --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kmeans_init::bench::{emit_report, prepare_dataset, run_benchmark, run_cell, DatasetEntry};
use kmeans_init::dataset::{load_csv, minmax_normalize};
use kmeans_init::init::{
    divisive_partition, initialize, maximin_init, principal_eigenvector, SplitDirection, SplitRule,
};
use kmeans_init::metrics::{sse, stirling2};
use kmeans_init::{
    Assignment, BenchConfig, BenchReport, Centers, CsvOptions, Dataset, KMeansConfig, Method,
    ReportFormat,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn single_dataset_report(entry: DatasetEntry) -> Result<BenchReport, String> {
    let config = BenchConfig {
        datasets: vec![entry],
        ..BenchConfig::default()
    };
    let report = run_benchmark(&config).map_err(|e| e.to_string())?;
    ensure(!report.has_errors(), || format!("cell errors: {report:?}"))?;
    Ok(report)
}

/// Compares rounded initial/final SSEs of one dataset against expected values.
fn check_golden_row(
    report: &BenchReport,
    name: &str,
    initial: &[(Method, f64)],
    fin: &[(Method, f64)],
    tol: f64,
) -> Result<String, String> {
    let mut got = Vec::new();
    let expectations = initial
        .iter()
        .map(|&(m, v)| ("IS", m, v))
        .chain(fin.iter().map(|&(m, v)| ("FS", m, v)));
    for (label, pick, expected) in expectations {
        let s = report
            .cell(name, pick)
            .and_then(|c| c.scores.clone())
            .ok_or_else(|| format!("no scores for {pick}"))?;
        let value = if label == "IS" {
            s.initial_sse
        } else {
            s.final_sse
        };
        got.push(format!("{label} {pick} {value:.2}"));
        ensure((value.round() - expected).abs() <= tol, || {
            format!(
                "{label} {pick}: rounded {} vs expected {expected} +/- {tol}",
                value.round()
            )
        })?;
    }
    Ok(got.join(", "))
}

// 1. Var-Part split thresholds on raw Ruspini.
fn ruspini_splits() -> Check {
    let start = Instant::now();
    let data = load_csv(data_dir().join("ruspini.csv"), &CsvOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(data.len() == 75, || format!("N = {}", data.len()))?;
    let part =
        divisive_partition(&data, 4, SplitRule::MaxVarianceAxis).map_err(|e| e.to_string())?;
    let expected = [(1, 92.026667), (0, 66.975), (0, 41.057143)];
    ensure(part.splits.len() == 3, || {
        format!("{} splits", part.splits.len())
    })?;
    let mut got = Vec::new();
    for (split, (axis, threshold)) in part.splits.iter().zip(expected) {
        ensure(split.direction == SplitDirection::Axis(axis), || {
            format!("split axis {:?}, expected {axis}", split.direction)
        })?;
        ensure((split.threshold - threshold).abs() <= 0.001, || {
            format!("threshold {} vs {threshold}", split.threshold)
        })?;
        got.push(format!("{}@{:.6}", ["x", "y"][axis], split.threshold));
    }
    let t = within_time(start, Duration::from_secs(1))?;
    Ok(format!("{} in {t:.2?}", got.join(", ")))
}

// 2. Iris, normalized, K = 3.
fn iris_row() -> Check {
    use Method::*;
    let start = Instant::now();
    let report =
        single_dataset_report(DatasetEntry::new(data_dir().join("iris.csv")).with_class_column(4))?;
    let initial = [
        (Maximin, 18.0),
        (Katsavounidis, 23.0),
        (VarPart, 8.0),
        (PcaPart, 8.0),
        (Maxisum, 42.0),
        (MaxisumFull, 42.0),
    ];
    let fin = Method::ALL.map(|m| (m, 7.0));
    let detail = check_golden_row(&report, "iris", &initial, &fin, 1.0)?;
    let t = within_time(start, Duration::from_secs(1))?;
    Ok(format!("{detail} in {t:.2?}"))
}

// 3. Wine, normalized, K = 3.
fn wine_row() -> Check {
    use Method::*;
    let start = Instant::now();
    let report = single_dataset_report(
        DatasetEntry::new(data_dir().join("wine.csv")).with_class_column(13),
    )?;
    let initial = [
        (Maximin, 87.0),
        (Katsavounidis, 185.0),
        (VarPart, 51.0),
        (PcaPart, 53.0),
        (Maxisum, 153.0),
        (MaxisumFull, 212.0),
    ];
    let fin = Method::ALL.map(|m| (m, if m == Maximin { 63.0 } else { 49.0 }));
    let detail = check_golden_row(&report, "wine", &initial, &fin, 2.0)?;
    let t = within_time(start, Duration::from_secs(1))?;
    Ok(format!("{detail} in {t:.2?}"))
}

// 4. Breast Cancer Wisconsin: row count after dropping missing values, MM
// initial SSE and its ratio to KK.
fn breast_cancer() -> Check {
    let start = Instant::now();
    let report = single_dataset_report(
        DatasetEntry::new(data_dir().join("breast_cancer_wisconsin.csv")).with_class_column(9),
    )?;
    let d = &report.datasets[0];
    ensure(d.n == Some(683), || format!("N = {:?}", d.n))?;
    let score = |m| {
        report
            .cell("breast_cancer_wisconsin", m)
            .and_then(|c| c.scores.clone())
            .ok_or_else(|| format!("no scores for {m}"))
    };
    let mm = score(Method::Maximin)?;
    let kk = score(Method::Katsavounidis)?;
    ensure((mm.initial_sse.round() - 498.0).abs() <= 2.0, || {
        format!("MM IS {}", mm.initial_sse)
    })?;
    let ratio = mm.initial_sse / kk.initial_sse;
    ensure((ratio - 0.836).abs() <= 0.005, || {
        format!("MM/KK ratio {ratio}")
    })?;
    ensure((mm.is_pct - 0.836).abs() <= 0.005, || {
        format!("MM relative to worst {}", mm.is_pct)
    })?;
    let t = within_time(start, Duration::from_secs(1))?;
    Ok(format!(
        "N 683, MM IS {:.2}, MM/KK {ratio:.4}, MM/worst {:.4} in {t:.2?}",
        mm.initial_sse, mm.is_pct
    ))
}

// 5. Every run respects the iteration cap, has a non-increasing SSE trace
// and records how it stopped.
fn run_invariants() -> Check {
    let config = BenchConfig::load(data_dir().join("classic.toml")).map_err(|e| e.to_string())?;
    let mut runs = 0;
    let mut worst_ni = 0;
    for entry in &config.datasets {
        let (data, k) = prepare_dataset(entry, true).map_err(|e| e.to_string())?;
        for method in Method::ALL {
            let cell = run_cell(&data, method, k, &config.kmeans).map_err(|e| e.to_string())?;
            let run = &cell.run;
            let name = entry.display_name();
            ensure(
                run.iterations <= 100 && run.iterations == run.sse_trace.len(),
                || {
                    format!(
                        "{name}/{method}: NI {} trace {}",
                        run.iterations,
                        run.sse_trace.len()
                    )
                },
            )?;
            ensure(run.sse_trace.windows(2).all(|w| w[1] <= w[0]), || {
                format!("{name}/{method}: trace {:?} increases", run.sse_trace)
            })?;
            ensure(run.final_sse() <= cell.initial_sse, || {
                format!("{name}/{method}: final SSE above initial SSE")
            })?;
            let recorded = serde_json::to_value(run.converged_by).map_err(|e| e.to_string())?;
            ensure(recorded.is_string(), || {
                format!("{name}/{method}: converged_by {recorded}")
            })?;
            worst_ni = worst_ni.max(run.iterations);
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, max NI {worst_ni}"))
}

// 6a. Repeated runs give byte-identical reports in every format.
fn deterministic_reports() -> Check {
    let config = BenchConfig::load(data_dir().join("classic.toml")).map_err(|e| e.to_string())?;
    let a = run_benchmark(&config).map_err(|e| e.to_string())?;
    let b = run_benchmark(&config).map_err(|e| e.to_string())?;
    for format in [
        ReportFormat::Csv,
        ReportFormat::Markdown,
        ReportFormat::Json,
    ] {
        let (x, y) = (emit_report(&a, format), emit_report(&b, format));
        ensure(x == y, || format!("{format:?} reports differ"))?;
    }
    Ok("csv, md and json identical across 2 runs".into())
}

// 6b. Row order does not change any score.
fn shuffled_iris() -> Check {
    let raw = load_csv(
        data_dir().join("iris.csv"),
        &CsvOptions {
            class_column: Some(4),
            ..CsvOptions::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let cfg = KMeansConfig::default();
    let scores = |data: &Dataset| -> Result<Vec<(f64, f64)>, String> {
        let data = minmax_normalize(data);
        Method::ALL
            .iter()
            .map(|&m| {
                let c = run_cell(&data, m, 3, &cfg).map_err(|e| e.to_string())?;
                Ok((c.initial_sse, c.run.final_sse()))
            })
            .collect()
    };
    let reference = scores(&raw)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x1815);
    let mut order: Vec<usize> = (0..raw.len()).collect();
    let mut worst = 0.0f64;
    for round in 0..20 {
        order.shuffle(&mut rng);
        let shuffled = raw.select_rows(&order).map_err(|e| e.to_string())?;
        for (m, (a, b)) in Method::ALL
            .iter()
            .zip(reference.iter().zip(scores(&shuffled)?))
        {
            for (x, y) in [(a.0, b.0), (a.1, b.1)] {
                let rel = (x - y).abs() / x.abs().max(f64::MIN_POSITIVE);
                worst = worst.max(rel);
                ensure(rel <= 1e-9, || format!("shuffle {round}, {m}: {x} vs {y}"))?;
            }
        }
    }
    Ok(format!("20 shuffles, max relative difference {worst:e}"))
}

fn random_points(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| (0..d).map(|_| rng.gen_range(0.0..1.0)).collect())
        .collect()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn radius(points: &[Vec<f64>], centers: &[&[f64]]) -> f64 {
    points
        .iter()
        .map(|p| {
            centers
                .iter()
                .map(|c| dist(p, c))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Smallest K-center radius over all K-subsets of the points.
fn optimal_k_center(points: &[Vec<f64>], k: usize) -> f64 {
    fn rec(points: &[Vec<f64>], k: usize, from: usize, chosen: &mut Vec<usize>, best: &mut f64) {
        if chosen.len() == k {
            let centers: Vec<&[f64]> = chosen.iter().map(|&i| points[i].as_slice()).collect();
            *best = best.min(radius(points, &centers));
            return;
        }
        for i in from..points.len() {
            chosen.push(i);
            rec(points, k, i + 1, chosen, best);
            chosen.pop();
        }
    }
    let mut best = f64::INFINITY;
    rec(points, k, 0, &mut Vec::new(), &mut best);
    best
}

// 6c. Maximin radius is at most twice the optimal K-center radius.
fn maximin_two_approximation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a);
    let mut worst = 0.0f64;
    let mut violations = Vec::new();
    for instance in 0..200 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(k.max(2)..=12);
        let d = rng.gen_range(1..=3);
        let points = random_points(&mut rng, n, d);
        let data = Dataset::from_rows("k-center", points.clone()).map_err(|e| e.to_string())?;
        let centers = maximin_init(&data, k).map_err(|e| e.to_string())?;
        let got = radius(&points, &centers.iter().collect::<Vec<_>>());
        let opt = optimal_k_center(&points, k);
        let ratio = if got == 0.0 { 0.0 } else { got / opt };
        worst = worst.max(ratio);
        if got > 2.0 * opt + 1e-12 {
            violations.push(format!("#{instance} (N {n}, K {k}, ratio {ratio:.3})"));
        }
    }
    // smallest witness: the centroid (50) is not a data point, so the second
    // center (0) leaves 100 at distance 50 while {0, 99} achieves 1
    let witness: Vec<Vec<f64>> = [0.0, 1.0, 99.0, 100.0].iter().map(|&x| vec![x]).collect();
    let data = Dataset::from_rows("witness", witness.clone()).map_err(|e| e.to_string())?;
    let centers = maximin_init(&data, 2).map_err(|e| e.to_string())?;
    let witness_ratio =
        radius(&witness, &centers.iter().collect::<Vec<_>>()) / optimal_k_center(&witness, 2);
    ensure(violations.is_empty(), || {
        format!(
            "{} of 200 instances exceed 2x optimal, worst ratio {worst:.3} ({}{}); \
             on {{0, 1, 99, 100}} with K = 2 the ratio is {witness_ratio}",
            violations.len(),
            violations
                .iter()
                .take(5)
                .cloned()
                .collect::<Vec<_>>()
                .join(", "),
            if violations.len() > 5 { ", ..." } else { "" },
        )
    })?;
    Ok(format!("200 instances, worst ratio {worst:.3}"))
}

fn mat_vec(m: &[f64], v: &[f64]) -> Vec<f64> {
    let d = v.len();
    (0..d)
        .map(|i| (0..d).map(|j| m[i * d + j] * v[j]).sum())
        .collect()
}

fn residual(m: &[f64], v: &[f64]) -> f64 {
    let av = mat_vec(m, v);
    let lambda: f64 = av.iter().zip(v).map(|(a, b)| a * b).sum();
    av.iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Random symmetric PSD matrix `B B^T`, scaled so its largest entry is 1.
fn random_psd(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    let b: Vec<f64> = (0..d * d).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut m: Vec<f64> = (0..d * d)
        .map(|ij| {
            (0..d)
                .map(|t| b[(ij / d) * d + t] * b[(ij % d) * d + t])
                .sum()
        })
        .collect();
    let scale = m.iter().fold(0.0f64, |s, x| s.max(x.abs()));
    m.iter_mut().for_each(|x| *x /= scale);
    m
}

/// Eigenpairs of a symmetric matrix by cyclic Jacobi rotations, sorted by
/// decreasing eigenvalue.
fn jacobi_eigen(m: &[f64], d: usize) -> Vec<(f64, Vec<f64>)> {
    let mut a = m.to_vec();
    let mut v: Vec<f64> = (0..d * d)
        .map(|ij| if ij / d == ij % d { 1.0 } else { 0.0 })
        .collect();
    for _ in 0..100 {
        let off: f64 = (0..d)
            .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * d + j].powi(2))
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                let apq = a[p * d + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..d {
                    let (akp, akq) = (a[k * d + p], a[k * d + q]);
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let (apk, aqk) = (a[p * d + k], a[q * d + k]);
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
                for k in 0..d {
                    let (vkp, vkq) = (v[k * d + p], v[k * d + q]);
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..d)
        .map(|j| (a[j * d + j], (0..d).map(|i| v[i * d + j]).collect()))
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    pairs
}

/// Dominant eigenpair of a symmetric 2x2 matrix in closed form.
fn analytic_2x2(m: &[f64]) -> (f64, f64, Vec<f64>) {
    let (a, b, c) = (m[0], m[1], m[3]);
    let mid = 0.5 * (a + c);
    let r = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    let (l1, l2) = (mid + r, mid - r);
    let v = if (l1 - a).abs() >= (l1 - c).abs() {
        vec![b, l1 - a]
    } else {
        vec![l1 - c, b]
    };
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (l1, l2, v.iter().map(|x| x / n).collect())
}

// 6d. Power method against closed-form 2x2 and Jacobi 3x3 eigenvectors.
fn power_method() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d);
    let mut checked = [0usize; 2];
    let mut worst_residual = 0.0f64;
    let mut worst_alignment = 0.0f64;
    while checked.iter().sum::<usize>() < 200 {
        let d = if checked[0] < 100 { 2 } else { 3 };
        let m = random_psd(&mut rng, d);
        let (l1, l2, expected) = if d == 2 {
            analytic_2x2(&m)
        } else {
            let pairs = jacobi_eigen(&m, 3);
            (pairs[0].0, pairs[1].0, pairs[0].1.clone())
        };
        // a clear spectral gap makes the dominant eigenvector well defined
        if l1 - l2 < 0.1 * l1 {
            continue;
        }
        let v = principal_eigenvector(&m, d).map_err(|e| e.to_string())?;
        let r = residual(&m, &v);
        let align = 1.0
            - v.iter()
                .zip(&expected)
                .map(|(a, b)| a * b)
                .sum::<f64>()
                .abs();
        worst_residual = worst_residual.max(r);
        worst_alignment = worst_alignment.max(align);
        ensure(r < 1e-8, || format!("{d}x{d} {m:?}: residual {r:e}"))?;
        ensure(align < 1e-10, || {
            format!("{d}x{d} {m:?}: got {v:?}, expected {expected:?}")
        })?;
        checked[d - 2] += 1;
    }
    Ok(format!(
        "100 2x2 + 100 3x3, max residual {worst_residual:.1e}, max 1-|cos| {worst_alignment:.1e}"
    ))
}

// 6e. Stirling numbers of the second kind against explicit enumeration.
fn stirling_enumeration() -> Check {
    // counts[k] = number of set partitions of {0..n} into k blocks, via
    // restricted growth strings
    fn enumerate(n: usize) -> Vec<u64> {
        fn rec(pos: usize, n: usize, blocks: usize, counts: &mut [u64]) {
            if pos == n {
                counts[blocks] += 1;
                return;
            }
            for b in 0..=blocks {
                rec(pos + 1, n, blocks.max(b + 1), counts);
            }
        }
        let mut counts = vec![0; n + 1];
        rec(0, n, 0, &mut counts);
        counts
    }
    let mut compared = 0;
    for n in 1..=10 {
        let counts = enumerate(n);
        for (k, &count) in counts.iter().enumerate().skip(1) {
            let s = stirling2(n, k).map_err(|e| e.to_string())?;
            ensure(s == count.into(), || {
                format!("S({n},{k}) = {s}, enumeration {count}")
            })?;
            compared += 1;
        }
    }
    Ok(format!("{compared} values for N <= 10"))
}

// 6f. The nearest-center SSE is the minimum over all assignments.
fn sse_optimality() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f);
    let mut assignments = 0usize;
    for instance in 0..100 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=3);
        let data =
            Dataset::from_rows("sse", random_points(&mut rng, n, d)).map_err(|e| e.to_string())?;
        let centers = Centers::new(random_points(&mut rng, k, d)).map_err(|e| e.to_string())?;
        let nearest = sse(&data, &centers, None).map_err(|e| e.to_string())?;
        let mut best = f64::INFINITY;
        for code in 0..k.pow(n as u32) {
            let labels: Vec<usize> = (0..n).map(|j| code / k.pow(j as u32) % k).collect();
            let a = Assignment::from_labels(labels, k).map_err(|e| e.to_string())?;
            let value = sse(&data, &centers, Some(&a)).map_err(|e| e.to_string())?;
            ensure(nearest <= value, || {
                format!("#{instance}: nearest {nearest} > {value}")
            })?;
            best = best.min(value);
            assignments += 1;
        }
        ensure(nearest == best, || {
            format!("#{instance}: nearest {nearest} vs best {best}")
        })?;
    }
    Ok(format!(
        "100 instances, {assignments} assignments enumerated"
    ))
}

// 6g. With diagonal covariance at every level, PCA-Part splits like Var-Part.
fn pp_matches_vp_on_grids() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x69);
    for instance in 0..50 {
        let d = rng.gen_range(2..=4);
        let levels: Vec<Vec<f64>> = (0..d)
            .map(|a| {
                let scale = 10f64.powi(a);
                (0..rng.gen_range(2..=5))
                    .map(|_| rng.gen_range(0.0..scale))
                    .collect()
            })
            .collect();
        // full factorial grid: covariance is diagonal, and stays diagonal for
        // every axis-aligned child
        let mut rows = vec![Vec::new()];
        for axis in &levels {
            rows = rows
                .into_iter()
                .flat_map(|r: Vec<f64>| {
                    axis.iter().map(move |&x| {
                        let mut r = r.clone();
                        r.push(x);
                        r
                    })
                })
                .collect();
        }
        let data = Dataset::from_rows("grid", rows).map_err(|e| e.to_string())?;
        let k = rng.gen_range(2..=6).min(data.len());
        let vp = initialize(Method::VarPart, &data, k).map_err(|e| e.to_string())?;
        let pp = initialize(Method::PcaPart, &data, k).map_err(|e| e.to_string())?;
        for (a, b) in vp.sorted_rows().iter().zip(pp.sorted_rows()) {
            for (x, y) in a.iter().zip(&b) {
                ensure((x - y).abs() <= 1e-9 * x.abs().max(1.0), || {
                    format!(
                        "#{instance}: VP {:?} vs PP {:?}",
                        vp.sorted_rows(),
                        pp.sorted_rows()
                    )
                })?;
            }
        }
    }
    Ok("50 factorial grids".into())
}

// 7. Six-method sweep over the bundled datasets plus a 20000 x 16 dataset
// with K = 26.
fn large_sweep() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("letters_like.csv");
    let mut text = String::with_capacity(20000 * 40);
    for _ in 0..20000 {
        let label = rng.gen_range(0..26u8);
        // class-dependent offsets give the data some cluster structure
        for a in 0..16u32 {
            let base = (u32::from(label) * (a + 3)) % 16;
            let v = (base as i32 + rng.gen_range(-3..=3)).clamp(0, 15);
            text.push_str(&format!("{v},"));
        }
        text.push((b'A' + label) as char);
        text.push('\n');
    }
    std::fs::write(&path, text).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let entry = DatasetEntry {
        header: Some(false),
        ..DatasetEntry::new(&path).with_class_column(16)
    };
    let mut config =
        BenchConfig::load(data_dir().join("classic.toml")).map_err(|e| e.to_string())?;
    config.datasets.push(entry);
    let report = run_benchmark(&config).map_err(|e| e.to_string())?;
    let t = within_time(start, Duration::from_secs(60))?;
    ensure(!report.has_errors(), || "cell errors".into())?;
    let d = report.datasets.last().expect("five datasets");
    ensure(
        d.n == Some(20000) && d.d == Some(16) && d.k == Some(26),
        || format!("shape {:?} x {:?}, K {:?}", d.n, d.d, d.k),
    )?;
    let ni: Vec<String> = d
        .cells
        .iter()
        .map(|c| {
            format!(
                "{} NI {}",
                c.method,
                c.scores.as_ref().map_or(0, |s| s.iterations)
            )
        })
        .collect();
    Ok(format!(
        "{} datasets x 6 methods in {t:.2?}; N 20000, D 16, K 26: {}",
        report.datasets.len(),
        ni.join(", ")
    ))
}

fn main() -> ExitCode {
    let suite_start = Instant::now();
    let criteria: [Criterion; 7] = [
        ("1 ruspini var-part split thresholds", ruspini_splits),
        ("2 iris initial and final SSE", iris_row),
        ("3 wine initial and final SSE", wine_row),
        ("4 breast cancer row count and MM/KK ratio", breast_cancer),
        (
            "5 iteration cap, monotone trace, stop reason",
            run_invariants,
        ),
        ("6 property suite", property_suite),
        ("7 six-method sweep at N = 20000", large_sweep),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        suite_start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn property_suite() -> Check {
    let start = Instant::now();
    let parts: [Criterion; 7] = [
        ("a determinism", deterministic_reports),
        ("b order invariance", shuffled_iris),
        ("c maximin 2-approximation", maximin_two_approximation),
        ("d power method", power_method),
        ("e stirling2", stirling_enumeration),
        ("f sse optimality", sse_optimality),
        ("g pca-part equals var-part", pp_matches_vp_on_grids),
    ];
    let mut failures = Vec::new();
    for (name, part) in parts {
        match part() {
            Ok(detail) => println!("  ok   6{name}: {detail}"),
            Err(why) => {
                println!("  fail 6{name}: {why}");
                failures.push(name);
            }
        }
    }
    ensure(failures.is_empty(), || {
        format!("failed: {}", failures.join(", "))
    })?;
    let t = within_time(start, Duration::from_secs(30))?;
    Ok(format!("7 properties in {t:.2?}"))
}
