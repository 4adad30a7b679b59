use crate::args::Format;
use gtsf_core::errata::Erratum;
use gtsf_core::report::ReportDocument;
use gtsf_core::verify::{VerificationReport, ALL_PARAMS};
use gtsf_core::Complex64;
use std::fmt::Write as _;

pub const CSV_TAIL: [&str; 5] = ["lhs", "rhs", "abs_residual", "rel_residual", "passed"];

fn complex_cell(z: Option<Complex64>) -> String {
    match z {
        None => String::new(),
        Some(z) if z.im == 0.0 => format!("{:e}", z.re),
        Some(z) => format!("{:e}{:+e}i", z.re, z.im),
    }
}

fn param_cell(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn real_cell(v: Option<f64>) -> String {
    v.map(|v| format!("{v:e}")).unwrap_or_default()
}

fn csv_row(r: &VerificationReport) -> Vec<String> {
    let mut row = vec![r.theorem.to_string()];
    row.extend(
        ALL_PARAMS
            .iter()
            .map(|k| param_cell(r.params.get(*k).copied())),
    );
    row.push(complex_cell(r.lhs));
    row.push(complex_cell(r.rhs));
    row.push(real_cell(r.abs_residual));
    row.push(real_cell(r.rel_residual));
    row.push(r.passed.to_string());
    row
}

pub fn report_csv(doc: &ReportDocument) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = std::iter::once("theorem")
        .chain(ALL_PARAMS)
        .chain(CSV_TAIL)
        .collect();
    w.write_record(&header)?;
    for case in &doc.cases {
        w.write_record(csv_row(case))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string())
}

pub fn report_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for r in &doc.cases {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "theorem: {}", r.theorem);
        let _ = writeln!(out, "params: {}", params.join(" "));
        let _ = writeln!(out, "lhs: {}", opt(r.lhs.map(|z| complex_cell(Some(z)))));
        let _ = writeln!(out, "rhs: {}", opt(r.rhs.map(|z| complex_cell(Some(z)))));
        let _ = writeln!(
            out,
            "abs_residual: {}",
            opt(r.abs_residual.map(|v| format!("{v:e}")))
        );
        let _ = writeln!(
            out,
            "rel_residual: {}",
            opt(r.rel_residual.map(|v| format!("{v:e}")))
        );
        let _ = writeln!(
            out,
            "quad_error: {}",
            opt(r.quad_error.map(|v| format!("{v:e}")))
        );
        let _ = writeln!(out, "series_terms: {}", opt(r.series_terms));
        let _ = writeln!(out, "passed: {}", r.passed);
        if !r.notes.is_empty() {
            let _ = writeln!(out, "notes: {}", r.notes);
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "summary: {} total, {} passed, {} failed ({:.3} s)",
        doc.summary.total, doc.summary.passed, doc.summary.failed, doc.wall_time_seconds
    );
    out
}

pub fn report(doc: &ReportDocument, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(report_text(doc)),
        Format::Json => serde_json::to_string_pretty(doc)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => report_csv(doc).map_err(|e| e.to_string()),
    }
}

pub fn errata(list: &[Erratum], format: Format) -> Result<String, String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for e in list {
                let _ = writeln!(out, "{}", e.location);
                let _ = writeln!(out, "  printed: {}", e.printed);
                let _ = writeln!(out, "  used:    {}", e.used);
                let _ = writeln!(out, "  why:     {}", e.reason);
            }
            Ok(out)
        }
        Format::Json => serde_json::to_string_pretty(list)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let run = |w: &mut csv::Writer<Vec<u8>>| -> Result<(), csv::Error> {
                w.write_record(["location", "printed", "used", "reason"])?;
                for e in list {
                    w.write_record([e.location, e.printed, e.used, e.reason])?;
                }
                Ok(())
            };
            run(&mut w).map_err(|e| e.to_string())?;
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}
