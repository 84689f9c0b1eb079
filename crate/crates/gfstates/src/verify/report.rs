//! Structured check reports with a stable serialization schema.

use serde::Serialize;
use std::collections::BTreeMap;

/// One check's result. The JSON schema is exactly these seven fields;
/// per-point diagnostics are folded into `notes`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub grid_summary: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// `pass` is derived from the residual/tolerance comparison so the
    /// invariant pass ⇔ max_residual ≤ tolerance holds by construction.
    /// Non-finite residuals are clamped to f64::MAX so reports stay
    /// JSON-representable.
    pub fn new(
        check_id: &str,
        params: BTreeMap<String, String>,
        grid_summary: String,
        max_residual: f64,
        tolerance: f64,
        notes: Vec<String>,
    ) -> Self {
        let clamped = if max_residual.is_finite() { max_residual } else { f64::MAX };
        VerificationReport {
            check_id: check_id.to_string(),
            params,
            grid_summary,
            max_residual: clamped,
            tolerance,
            pass: clamped <= tolerance,
            notes,
        }
    }

    pub fn to_csv_row(&self) -> String {
        fn quote(s: &str) -> String {
            format!("\"{}\"", s.replace('"', "\"\""))
        }
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("; ");
        format!(
            "{},{},{},{},{},{},{}",
            quote(&self.check_id),
            self.max_residual,
            self.tolerance,
            self.pass,
            quote(&self.grid_summary),
            quote(&params),
            quote(&self.notes.join(" | "))
        )
    }

    pub const CSV_HEADER: &'static str = "check_id,max_residual,tolerance,pass,grid_summary,params,notes";
}

/// Render a report set to the requested format.
pub fn render_reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(reports).expect("report serialization cannot fail") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(VerificationReport::CSV_HEADER);
            out.push('\n');
            for r in reports {
                out.push_str(&r.to_csv_row());
                out.push('\n');
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}
