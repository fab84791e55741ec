//! Report rendering: aligned text, JSON and CSV.

use std::io::Write;

use serde_json::{json, Value};

use crate::congruence::VerificationReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

fn io_err(path: &str, e: impl std::fmt::Display) -> Error {
    Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    }
}

/// The JSON document: run metadata plus one object per report.
pub fn to_json(reports: &[VerificationReport], timestamp: &str, config: Value) -> Value {
    let results: Vec<Value> = reports
        .iter()
        .map(|r| {
            let parts: Vec<Value> = r
                .parts
                .iter()
                .map(|p| {
                    json!({
                        "modulus_part": p.modulus_part,
                        "divisible": p.divisible,
                        "coprime": p.coprime,
                    })
                })
                .collect();
            json!({
                "id": r.id,
                "params": r.params,
                "verdict": r.verdict,
                "status": r.status,
                "parts": parts,
                "mode_notes": r.mode_notes,
                "millis": r.millis,
            })
        })
        .collect();
    json!({
        "run_metadata": {"timestamp": timestamp, "config": config},
        "results": results,
    })
}

fn lead_param(r: &VerificationReport) -> Option<&'static str> {
    ["n", "p", "N", "d"]
        .into_iter()
        .find(|k| r.params.contains_key(*k))
}

pub fn write_csv(reports: &[VerificationReport], w: &mut dyn Write) -> Result<()> {
    let mut c = csv::Writer::from_writer(w);
    let row = |c: &mut csv::Writer<&mut dyn Write>, rec: &[String]| {
        c.write_record(rec).map_err(|e| io_err("<csv>", e))
    };
    row(
        &mut c,
        &["id", "n", "extra_params", "trunc", "verdict", "millis"].map(String::from),
    )?;
    for r in reports {
        let lead = lead_param(r);
        let n = lead.and_then(|k| r.params.get(k)).cloned().unwrap_or_default();
        let extra: Vec<String> = r
            .params
            .iter()
            .filter(|(k, _)| Some(k.as_str()) != lead && k.as_str() != "trunc")
            .map(|(k, v)| format!("{}={}", k, v))
            .collect();
        let trunc = r.params.get("trunc").cloned().unwrap_or_default();
        row(
            &mut c,
            &[
                r.id.clone(),
                n,
                extra.join(";"),
                trunc,
                r.verdict.to_string(),
                r.millis.to_string(),
            ],
        )?;
    }
    c.flush().map_err(|e| io_err("<csv>", e))
}

/// One row per report, columns padded to a common width.
pub fn write_text(reports: &[VerificationReport], timing: bool, w: &mut dyn Write) -> Result<()> {
    let mut rows: Vec<Vec<String>> = vec![["id", "params", "verdict", "status"]
        .iter()
        .map(|s| s.to_string())
        .collect()];
    if timing {
        rows[0].push("ms".into());
    }
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        let mut row = vec![
            r.id.clone(),
            params.join(" "),
            r.verdict.to_string(),
            r.status.to_string(),
        ];
        if timing {
            row.push(r.millis.to_string());
        }
        rows.push(row);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let werr = |e: std::io::Error| io_err("<output>", e);
    for row in &rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == cols {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{:<w$}  ", cell, w = widths[i]));
            }
        }
        writeln!(w, "{}", line.trim_end()).map_err(werr)?;
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        for n in &r.mode_notes {
            writeln!(w, "  {}: {}", r.id, n).map_err(werr)?;
        }
        for p in r.parts.iter().filter(|p| !p.passed()) {
            writeln!(w, "  {}: failed {}", r.id, p.modulus_part).map_err(werr)?;
        }
    }
    let count = |v| reports.iter().filter(|r| r.verdict == v).count();
    use crate::congruence::Verdict::*;
    writeln!(
        w,
        "{} reports: {} pass, {} fail, {} skipped",
        reports.len(),
        count(Pass),
        count(Fail),
        count(SkippedConstraint)
    )
    .map_err(werr)
}

pub fn emit(
    reports: &[VerificationReport],
    format: Format,
    timing: bool,
    config: Value,
    w: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Text => write_text(reports, timing, w),
        Format::Csv => write_csv(reports, w),
        Format::Json => {
            let ts = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
            let doc = to_json(reports, &ts, config);
            let s = serde_json::to_string_pretty(&doc).map_err(|e| io_err("<json>", e))?;
            writeln!(w, "{}", s).map_err(|e| io_err("<output>", e))
        }
    }
}

/// Writes to `path`, creating parent directories.
pub fn emit_to_path(
    reports: &[VerificationReport],
    format: Format,
    timing: bool,
    config: Value,
    path: &std::path::Path,
) -> Result<()> {
    let shown = path.display().to_string();
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| io_err(&dir.display().to_string(), e))?;
    }
    let mut f = std::fs::File::create(path).map_err(|e| io_err(&shown, e))?;
    emit(reports, format, timing, config, &mut f)
}
