use std::fs;
use std::path::Path;

use serde_json::Value;

use super::config::Format;
use crate::error::{CoxeterError, Result};

/// A report that renders both as a JSON document and as CSV records.
/// The CSV has one row per entry of the JSON `records` array.
pub trait Report {
    fn to_json(&self) -> Value;
    fn csv_header(&self) -> Vec<String>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

/// Deterministic rendering, newline-terminated.
pub fn emit(report: &dyn Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            // serde_json's map is ordered, so keys come out sorted
            let mut s = serde_json::to_string_pretty(&report.to_json())
                .map_err(|e| CoxeterError::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| CoxeterError::Internal(e.to_string());
            w.write_record(report.csv_header()).map_err(csv_err)?;
            for row in report.csv_rows() {
                w.write_record(row).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| CoxeterError::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CoxeterError::Internal(e.to_string()))
        }
    }
}

/// Writes to `path`, or to standard output when `None`.
pub fn write_report(report: &dyn Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = emit(report, format)?;
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CoxeterError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
