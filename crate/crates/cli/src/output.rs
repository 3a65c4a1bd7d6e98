//! Serializable records and the json/csv/text writers.

use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use pfsum_core::identities::{IdentityReport, ProbeReport};
use pfsum_core::{BigComplex, BigReal, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Number formatting shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    /// Significant digits for values.
    pub value_digits: usize,
    pub timing: bool,
}

impl Style {
    pub fn value(&self, z: &BigComplex) -> String {
        z.to_string_sig(self.value_digits)
    }

    pub fn residual(&self, x: &BigReal) -> String {
        x.to_sci_string(6)
    }
}

/// One row of a tabular output: json via serde, csv and text via the
/// column list.
pub trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn join_map(m: &BTreeMap<String, String>) -> String {
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub abs_residual: String,
    pub rel_residual: String,
    pub terms_used: usize,
    pub elapsed_ms: u64,
    pub status: String,
    pub lhs_source: String,
    pub rhs_source: String,
    pub diagnostics: BTreeMap<String, String>,
}

impl ReportRecord {
    pub fn new(r: &IdentityReport, style: &Style) -> Self {
        ReportRecord {
            identity_id: r.identity_id.clone(),
            params: r.params.clone(),
            lhs: style.value(&r.lhs),
            rhs: style.value(&r.rhs),
            abs_residual: style.residual(&r.abs_residual),
            rel_residual: style.residual(&r.rel_residual),
            terms_used: r.terms_used,
            elapsed_ms: if style.timing { r.elapsed_ms } else { 0 },
            status: r.status.to_string(),
            lhs_source: r.lhs_source.to_string(),
            rhs_source: r.rhs_source.to_string(),
            diagnostics: r.diagnostics.clone(),
        }
    }
}

impl Row for ReportRecord {
    fn header() -> &'static [&'static str] {
        &[
            "identity_id",
            "params",
            "lhs",
            "rhs",
            "abs_residual",
            "rel_residual",
            "terms_used",
            "elapsed_ms",
            "status",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.identity_id.clone(),
            join_map(&self.params),
            self.lhs.clone(),
            self.rhs.clone(),
            self.abs_residual.clone(),
            self.rel_residual.clone(),
            self.terms_used.to_string(),
            self.elapsed_ms.to_string(),
            self.status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComputeRecord {
    pub series: String,
    pub params: BTreeMap<String, String>,
    pub value: String,
    pub terms_used: usize,
    pub tail_estimate: String,
    pub status: String,
}

impl ComputeRecord {
    pub fn new(series: &str, params: BTreeMap<String, String>, r: &SeriesResult, style: &Style) -> Self {
        ComputeRecord {
            series: series.to_string(),
            params,
            value: style.value(&r.value),
            terms_used: r.terms_used,
            tail_estimate: style.residual(&r.tail_estimate),
            status: format!("{:?}", r.status),
        }
    }
}

impl Row for ComputeRecord {
    fn header() -> &'static [&'static str] {
        &["series", "params", "value", "terms_used", "tail_estimate", "status"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.series.clone(),
            join_map(&self.params),
            self.value.clone(),
            self.terms_used.to_string(),
            self.tail_estimate.clone(),
            self.status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub table: String,
    pub index: u32,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub abs_residual: String,
    pub status: String,
}

impl TableRow {
    pub fn new(table: &str, index: u32, r: &IdentityReport, style: &Style) -> Self {
        TableRow {
            table: table.to_string(),
            index,
            params: r.params.clone(),
            lhs: style.value(&r.lhs),
            rhs: style.value(&r.rhs),
            abs_residual: style.residual(&r.abs_residual),
            status: r.status.to_string(),
        }
    }
}

impl Row for TableRow {
    fn header() -> &'static [&'static str] {
        &["table", "index", "params", "lhs", "rhs", "abs_residual", "status"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.table.clone(),
            self.index.to_string(),
            join_map(&self.params),
            self.lhs.clone(),
            self.rhs.clone(),
            self.abs_residual.clone(),
            self.status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeRow {
    pub index: usize,
    pub z: String,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub status: String,
}

impl Row for ProbeRow {
    fn header() -> &'static [&'static str] {
        &["index", "z", "lhs", "rhs", "residual", "status"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            self.z.clone(),
            self.lhs.clone(),
            self.rhs.clone(),
            self.residual.clone(),
            self.status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeSummary {
    pub a: String,
    pub order_l: u32,
    pub constant: Option<String>,
    pub constant_source: String,
    pub constant_spread: String,
    pub max_residual: Option<String>,
    pub median_residual: Option<String>,
    pub samples: Vec<ProbeRow>,
}

impl ProbeSummary {
    pub fn new(rep: &ProbeReport, style: &Style) -> Self {
        let samples: Vec<ProbeRow> = rep
            .samples
            .iter()
            .enumerate()
            .map(|(i, s)| ProbeRow {
                index: i,
                z: style.value(&s.z),
                lhs: style.value(&s.lhs),
                rhs: style.value(&s.rhs),
                residual: style.residual(&s.residual),
                status: format!("{:?}", s.status),
            })
            .collect();
        let mut residuals: Vec<&BigReal> = rep.samples.iter().map(|s| &s.residual).collect();
        residuals.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
        let max_residual = residuals.last().map(|r| style.residual(r));
        let median_residual = if residuals.is_empty() {
            None
        } else {
            let n = residuals.len();
            let mid = if n % 2 == 1 {
                residuals[n / 2].clone()
            } else {
                (residuals[n / 2 - 1] + residuals[n / 2]) / BigReal::from_i64(2, residuals[0].prec())
            };
            Some(style.residual(&mid))
        };
        ProbeSummary {
            a: style.value(&rep.a),
            order_l: rep.order_l,
            constant: rep.constant.as_ref().map(|c| style.value(c)),
            constant_source: rep.constant_source.to_string(),
            constant_spread: style.residual(&rep.constant_spread),
            max_residual,
            median_residual,
            samples,
        }
    }
}

pub fn write_rows<R: Row>(out: &mut dyn Write, rows: &[R], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(R::header())?;
            for r in rows {
                w.write_record(r.cells())?;
            }
            w.flush()
        }
        Format::Text => {
            writeln!(out, "{}", R::header().join("  "))?;
            for r in rows {
                writeln!(out, "{}", r.cells().join("  "))?;
            }
            Ok(())
        }
    }
}

pub fn write_probe(out: &mut dyn Write, summary: &ProbeSummary, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, summary)?;
            writeln!(out)
        }
        Format::Csv => write_rows(out, &summary.samples, Format::Csv),
        Format::Text => {
            write_rows(out, &summary.samples, Format::Text)?;
            let none = || "-".to_string();
            writeln!(out, "a = {}  L = {}", summary.a, summary.order_l)?;
            writeln!(
                out,
                "constant = {} ({}, spread {})",
                summary.constant.clone().unwrap_or_else(none),
                summary.constant_source,
                summary.constant_spread
            )?;
            writeln!(
                out,
                "max residual = {}  median residual = {}",
                summary.max_residual.clone().unwrap_or_else(none),
                summary.median_residual.clone().unwrap_or_else(none)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> ReportRecord {
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), "7.5e-1".to_string());
        ReportRecord {
            identity_id: "zeta2-pfs".into(),
            params,
            lhs: "2.0".into(),
            rhs: "2.0".into(),
            abs_residual: "0".into(),
            rel_residual: "0".into(),
            terms_used: 12,
            elapsed_ms: 0,
            status: "Pass".into(),
            lhs_source: "x".into(),
            rhs_source: "y".into(),
            diagnostics: BTreeMap::new(),
        }
    }

    #[test]
    fn json_round_trip() {
        let rows = vec![record()];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, Format::Json).unwrap();
        let back: Vec<ReportRecord> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, rows);
        let mut again = Vec::new();
        write_rows(&mut again, &back, Format::Json).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let mut buf = Vec::new();
        write_rows(&mut buf, &[record()], Format::Csv).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("identity_id,params,lhs"));
        assert!(lines[1].starts_with("zeta2-pfs,a=7.5e-1,2.0"));
    }

    #[test]
    fn empty_csv_is_header_only() {
        let mut buf = Vec::new();
        write_rows::<TableRow>(&mut buf, &[], Format::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1);
    }
}
