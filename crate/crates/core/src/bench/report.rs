use std::fmt::Write as _;

use super::{BenchReport, Cell, CellScores, MethodSummary, ReportFormat};
use crate::metrics::SummaryStats;

/// Renders a report. CSV has one row per (dataset, method). Markdown has one
/// dataset-by-method grid each for initial SSE, final SSE and iterations,
/// followed by per-method summary statistics. JSON is the full structured report.
pub fn emit_report(report: &BenchReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Markdown => emit_markdown(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is serializable");
            s.push('\n');
            s
        }
    }
}

/// Formats a value with 6 significant digits, like C's `%g`.
pub fn format_sig6(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{value:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{value:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn emit_csv(report: &BenchReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = [
        "dataset",
        "method",
        "K",
        "IS",
        "FS",
        "NI",
        "IS_pct",
        "FS_pct",
        "converged_by",
    ];
    w.write_record(header).expect("in-memory write");
    for d in &report.datasets {
        let k = d.k.map(|k| k.to_string()).unwrap_or_default();
        for c in &d.cells {
            let row: Vec<String> = match (&c.scores, &c.error) {
                (Some(s), _) => vec![
                    d.name.clone(),
                    c.method.id().to_string(),
                    k.clone(),
                    format_sig6(s.initial_sse),
                    format_sig6(s.final_sse),
                    s.iterations.to_string(),
                    format_sig6(s.is_pct),
                    format_sig6(s.fs_pct),
                    s.converged_by.as_str().to_string(),
                ],
                (None, err) => {
                    let mut row = vec![d.name.clone(), c.method.id().to_string(), k.clone()];
                    row.extend(std::iter::repeat_n(String::new(), 5));
                    row.push(format!("error: {}", err.as_deref().unwrap_or("unknown")));
                    row
                }
            };
            w.write_record(&row).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn emit_markdown(report: &BenchReport) -> String {
    let mut out = String::new();
    let norm = if report.normalized { "min-max" } else { "none" };
    let _ = writeln!(out, "# Benchmark report\n");
    let _ = writeln!(
        out,
        "Normalization: {norm}; epsilon: {}; max iterations: {}\n",
        format_sig6(report.epsilon),
        report.max_iterations
    );

    let methods_header = |first: &str| {
        let mut s = format!("| {first} |");
        let mut rule = String::from("|---|");
        for m in &report.methods {
            let _ = write!(s, " {} |", m.label());
            rule.push_str("---:|");
        }
        format!("{s}\n{rule}\n")
    };

    let _ = writeln!(out, "## Datasets\n");
    let _ = writeln!(out, "| Dataset | N | D | K |\n|---|---:|---:|---:|");
    for d in &report.datasets {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            d.name,
            opt(d.n),
            opt(d.d),
            opt(d.k)
        );
    }

    let grid = |out: &mut String, title: &str, f: fn(&CellScores) -> String| {
        let _ = writeln!(out, "\n## {title}\n");
        out.push_str(&methods_header("Dataset"));
        for d in &report.datasets {
            let _ = write!(out, "| {} |", d.name);
            for c in &d.cells {
                let _ = write!(out, " {} |", cell_text(c, f));
            }
            out.push('\n');
        }
    };
    grid(&mut out, "Initial SSE", |s| format!("{:.0}", s.initial_sse));
    grid(&mut out, "Final SSE", |s| format!("{:.0}", s.final_sse));
    grid(&mut out, "Iterations", |s| s.iterations.to_string());

    let _ = writeln!(
        out,
        "\n## Summary statistics\n\nIS and FS are percentages of the worst SSE on each dataset.\n"
    );
    let mut header = methods_header("Criterion | Statistic");
    header = header.replacen("|---|", "|---|---|", 1);
    out.push_str(&header);
    type Pick = fn(&MethodSummary) -> Option<SummaryStats>;
    let criteria: [(&str, Pick, f64); 3] = [
        ("IS", |m| m.is_pct, 100.0),
        ("FS", |m| m.fs_pct, 100.0),
        ("NI", |m| m.iterations, 1.0),
    ];
    type Stat = fn(&SummaryStats) -> f64;
    let stats: [(&str, Stat); 6] = [
        ("Min", |s| s.min),
        ("Q1", |s| s.q1),
        ("Median", |s| s.median),
        ("Q3", |s| s.q3),
        ("Max", |s| s.max),
        ("Mean", |s| s.mean),
    ];
    for (criterion, pick, scale) in criteria {
        for (name, stat) in stats {
            let _ = write!(out, "| {criterion} | {name} |");
            for m in &report.summary {
                match pick(m) {
                    Some(s) => {
                        let _ = write!(out, " {:.2} |", stat(&s) * scale);
                    }
                    None => out.push_str(" - |"),
                }
            }
            out.push('\n');
        }
    }

    let errors: Vec<(&str, &Cell)> = report
        .datasets
        .iter()
        .flat_map(|d| d.cells.iter().map(move |c| (d.name.as_str(), c)))
        .filter(|(_, c)| c.error.is_some())
        .collect();
    if !errors.is_empty() {
        let _ = writeln!(out, "\n## Errors\n");
        for (name, c) in errors {
            let _ = writeln!(
                out,
                "- {name} / {}: {}",
                c.method.label(),
                c.error.as_deref().unwrap_or("")
            );
        }
    }
    out
}

fn cell_text(c: &Cell, f: fn(&CellScores) -> String) -> String {
    c.scores.as_ref().map_or_else(|| "ERR".to_string(), f)
}
