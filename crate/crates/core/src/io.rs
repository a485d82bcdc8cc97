//! Reading and writing matrices as CSV or JSON.
//!
//! CSV holds one matrix row per line with comma-separated entries. JSON is
//! an object `{"rows": m, "cols": n, "data": [[..], ..]}` whose entries are
//! numbers or `"p/q"` strings.
//!
//! The scalar domain is detected from the text unless forced: any `p/q`
//! entry (or any string entry in JSON) selects exact rationals, and then
//! every decimal literal is converted exactly from its digits.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Domain, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` means JSON; anything else is read as CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum DomainChoice {
    #[default]
    Auto,
    Rational,
    Float,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("empty matrix")]
    Empty,
    #[error("invalid JSON matrix: {0}")]
    Json(String),
}

/// A parsed matrix in whichever domain the input selected.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Float(Matrix<f64>),
}

impl AnyMatrix {
    pub fn domain(&self) -> Domain {
        match self {
            AnyMatrix::Rational(_) => Domain::Rational,
            AnyMatrix::Float(_) => Domain::Float,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Rational(m) => m.shape(),
            AnyMatrix::Float(m) => m.shape(),
        }
    }

    pub fn to_csv(&self) -> String {
        match self {
            AnyMatrix::Rational(m) => to_csv(m),
            AnyMatrix::Float(m) => to_csv(m),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyMatrix::Rational(m) => to_json(m),
            AnyMatrix::Float(m) => to_json(m),
        }
    }
}

/// Entry literals before the domain is chosen. `quoted` marks JSON strings.
struct Literals {
    rows: Vec<Vec<String>>,
    quoted: bool,
}

fn csv_literals(text: &str) -> Result<Literals, ParseError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<String> = line.split(',').map(|c| c.trim().to_string()).collect();
        if let Some(pos) = cells.iter().position(String::is_empty) {
            return Err(ParseError::Syntax { line: idx + 1, message: format!("empty entry in column {}", pos + 1) });
        }
        rows.push(cells);
    }
    Ok(Literals { rows, quoted: false })
}

fn json_literals(text: &str) -> Result<Literals, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let obj = value.as_object().ok_or_else(|| ParseError::Json("expected an object".into()))?;
    let dim = |key: &str| -> Result<usize, ParseError> {
        obj.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| ParseError::Json(format!("missing or invalid \"{key}\"")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let data = obj
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::Json("missing \"data\" array".into()))?;
    let mut quoted = false;
    let mut out = Vec::with_capacity(data.len());
    for (i, row) in data.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| ParseError::Json(format!("data[{i}] is not an array")))?;
        let mut cells = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            match cell {
                Value::Number(n) => cells.push(n.to_string()),
                Value::String(s) => {
                    quoted = true;
                    cells.push(s.trim().to_string());
                }
                _ => return Err(ParseError::Json(format!("data[{i}][{j}] is not a number or string"))),
            }
        }
        out.push(cells);
    }
    if out.len() != rows {
        return Err(ParseError::Json(format!("\"rows\" is {rows} but data has {} rows", out.len())));
    }
    if let Some(r) = out.iter().position(|r| r.len() != cols) {
        return Err(ParseError::Ragged { row: r + 1, expected: cols, got: out[r].len() });
    }
    Ok(Literals { rows: out, quoted })
}

fn check_shape(rows: &[Vec<String>]) -> Result<(), ParseError> {
    let n = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || n == 0 {
        return Err(ParseError::Empty);
    }
    if let Some(r) = rows.iter().position(|r| r.len() != n) {
        return Err(ParseError::Ragged { row: r + 1, expected: n, got: rows[r].len() });
    }
    Ok(())
}

fn build<T: Scalar>(
    rows: Vec<Vec<String>>,
    parse: impl Fn(&str) -> Option<T>,
) -> Result<Matrix<T>, ParseError> {
    let parsed = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.into_iter()
                .map(|s| {
                    parse(&s).ok_or_else(|| ParseError::Syntax {
                        line: i + 1,
                        message: format!("not a number: {s:?}"),
                    })
                })
                .collect::<Result<Vec<T>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(|_| ParseError::Empty)
}

fn parse_float(s: &str) -> Option<f64> {
    if s.contains('/') {
        return parse_rational(s).ok().map(|q| q.to_f64());
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Parses matrix text in the given format.
pub fn parse_matrix_str(text: &str, format: Format, domain: DomainChoice) -> Result<AnyMatrix, ParseError> {
    let lits = match format {
        Format::Csv => csv_literals(text)?,
        Format::Json => json_literals(text)?,
    };
    check_shape(&lits.rows)?;
    let exact = match domain {
        DomainChoice::Rational => true,
        DomainChoice::Float => false,
        DomainChoice::Auto => lits.quoted || lits.rows.iter().flatten().any(|s| s.contains('/')),
    };
    if exact {
        build(lits.rows, |s| parse_rational(s).ok()).map(AnyMatrix::Rational)
    } else {
        build(lits.rows, parse_float).map(AnyMatrix::Float)
    }
}

/// Reads a matrix file; the format defaults to the one implied by the extension.
pub fn parse_matrix(path: &Path, format: Option<Format>, domain: DomainChoice) -> Result<AnyMatrix, ParseError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ParseError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_matrix_str(&text, format.unwrap_or_else(|| Format::from_path(path)), domain)
}

/// Entry text that parses back to the same value and domain. Rationals
/// always carry an explicit denominator so CSV detection sees them.
fn entry_literal<T: Scalar>(x: &T) -> String {
    match T::DOMAIN {
        Domain::Rational => {
            let s = x.to_report_string();
            if s.contains('/') {
                s
            } else {
                format!("{s}/1")
            }
        }
        Domain::Float => x.to_report_string(),
    }
}

pub fn to_csv<T: Scalar>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(entry_literal).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json<T: Scalar>(m: &Matrix<T>) -> String {
    let data: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|x| match T::DOMAIN {
                        Domain::Rational => Value::String(x.to_report_string()),
                        Domain::Float => serde_json::Number::from_f64(x.to_f64())
                            .map(Value::Number)
                            .unwrap_or(Value::Null),
                    })
                    .collect(),
            )
        })
        .collect();
    let doc = serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "data": data });
    doc.to_string()
}
