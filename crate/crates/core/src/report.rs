//! Deterministic tabular reports.
//!
//! CSV layout:
//!
//! ```text
//! # <description>
//! # key=value key=value ...
//! col,col,...
//! row
//! ```
//!
//! Reals are printed like C's `%.12g`; integers print as integers. Lines end
//! in `\n` and no locale is consulted, so identical inputs give identical
//! bytes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl Cell {
    pub fn render(&self) -> String {
        match *self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_sig(v, SIGNIFICANT_DIGITS),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Real(v) => format_sig(v, SIGNIFICANT_DIGITS)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
        }
    }
}

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `%.{digits}g`: shortest of fixed or scientific notation, trailing zeros
/// removed.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub name: String,
    /// One line naming the result the experiment exercises.
    pub description: String,
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl ExperimentReport {
    pub fn new(name: &str, description: &str, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            description: description.into(),
            params: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(LabError::invalid(format!(
                "row has {} cells, report {} has {} columns",
                row.len(),
                self.name,
                self.columns.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.description));
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("# {}\n", params.join(" ")));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect()))
            .collect();
        let doc = json!({
            "name": self.name,
            "description": self.description,
            "params": params,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Writes the report to `destination`, or to stdout when `None`.
pub fn write_report(report: &ExperimentReport, format: Format, destination: Option<&Path>) -> Result<()> {
    let text = report.render(format);
    match destination {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(1.0, 12), "1");
        assert_eq!(format_sig(-2.5, 12), "-2.5");
        assert_eq!(format_sig(0.1 + 0.2, 12), "0.3");
        assert_eq!(format_sig(std::f64::consts::PI, 12), "3.14159265359");
        assert_eq!(format_sig(1e12, 12), "1e+12");
        assert_eq!(format_sig(123_456_789_012.0, 12), "123456789012");
        assert_eq!(format_sig(1.5e-5, 12), "1.5e-05");
        assert_eq!(format_sig(0.000_123, 12), "0.000123");
        assert_eq!(format_sig(999_999_999_999.5, 12), "1e+12");
        assert_eq!(format_sig(f64::NAN, 12), "nan");
        assert_eq!(format_sig(-0.0, 12), "0");
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = ExperimentReport::new("t", "test", &["a", "b"]).param("k", 3);
        assert_eq!(r.to_csv(), "# test\n# k=3\na,b\n");
    }

    #[test]
    fn integers_render_plainly() {
        let mut r = ExperimentReport::new("t", "test", &["n", "v"]);
        r.push(vec![Cell::Int(1000), Cell::Real(2.0)]).unwrap();
        assert!(r.to_csv().ends_with("n,v\n1000,2\n"));
        assert!(r.push(vec![Cell::Int(1)]).is_err());
    }

    #[test]
    fn json_mirrors_csv() {
        let mut r = ExperimentReport::new("t", "test", &["n", "v"]).param("x", "1");
        r.push(vec![Cell::Int(7), Cell::Real(1.0 / 3.0)]).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["rows"][0][0], json!(7));
        assert_eq!(v["rows"][0][1].as_f64().unwrap().to_string(), "0.333333333333");
        assert_eq!(v["params"]["x"], json!("1"));
    }

    #[test]
    fn unwritable_destination_is_io_error() {
        let r = ExperimentReport::new("t", "test", &["a"]);
        let err = write_report(&r, Format::Csv, Some(Path::new("/nonexistent-dir/x.csv")));
        assert!(matches!(err, Err(LabError::Io(_))));
    }
}
