//! Text, JSON and CSV formats for matrices, coins, grids and reports.
//!
//! `ε` is written as `e` in the whitespace matrix format and as `"eps"` in
//! JSON and CSV.

use std::io::Write;
use std::path::Path;

use num_rational::Rational64;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::qw::WeakLimitRow;
use crate::scalar::{MaxScalar, Numeric};
use crate::walk::coin::Coin;
use crate::walk::sdm::SdmGrid;
use crate::window::WindowOperator;

pub const EPS_TOKEN: &str = "eps";

/// Scalars that have a JSON encoding.
pub trait JsonScalar: Numeric {
    fn to_json(self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
}

impl JsonScalar for i64 {
    fn to_json(self) -> Value {
        json!(self)
    }
    fn from_json(v: &Value) -> Option<Self> {
        v.as_i64()
    }
}

impl JsonScalar for f64 {
    fn to_json(self) -> Value {
        json!(self)
    }
    fn from_json(v: &Value) -> Option<Self> {
        v.as_f64()
    }
}

/// Rationals are written as integers when whole and as `"p/q"` strings otherwise.
impl JsonScalar for Rational64 {
    fn to_json(self) -> Value {
        if self.is_integer() {
            json!(self.to_integer())
        } else {
            json!(self.to_string())
        }
    }
    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::Number(n) => n.as_i64().map(Rational64::from_integer),
            Value::String(s) => s.parse().ok(),
            _ => None,
        }
    }
}

pub fn scalar_to_json<T: JsonScalar>(x: MaxScalar<T>) -> Value {
    match x {
        MaxScalar::Finite(v) => v.to_json(),
        MaxScalar::Epsilon => json!(EPS_TOKEN),
    }
}

pub fn scalar_from_json<T: JsonScalar>(v: &Value) -> Result<MaxScalar<T>> {
    if v.as_str() == Some(EPS_TOKEN) {
        return Ok(MaxScalar::Epsilon);
    }
    T::from_json(v)
        .map(MaxScalar::Finite)
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("not a scalar: {v}"),
        })
}

fn entry_rows<T: JsonScalar>(m: &MaxMatrix<T>) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

/// `{"rows": n, "cols": m, "entries": [[...], ...]}`.
pub fn matrix_to_json<T: JsonScalar>(m: &MaxMatrix<T>) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entry_rows(m),
    })
}

pub fn matrix_from_json<T: JsonScalar>(v: &Value) -> Result<MaxMatrix<T>> {
    let bad = |msg: &str| Error::Parse {
        line: 0,
        msg: msg.to_string(),
    };
    let rows = v["rows"].as_u64().ok_or_else(|| bad("missing \"rows\""))? as usize;
    let cols = v["cols"].as_u64().ok_or_else(|| bad("missing \"cols\""))? as usize;
    let entries = v["entries"]
        .as_array()
        .ok_or_else(|| bad("missing \"entries\""))?;
    let mut flat = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| bad("entry row is not an array"))?;
        if row.len() != cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: cols,
                actual: row.len(),
            });
        }
        for x in row {
            flat.push(scalar_from_json(x)?);
        }
    }
    MaxMatrix::new(rows, cols, flat)
}

fn parse_token<T: Numeric>(token: &str, line: usize) -> Result<MaxScalar<T>> {
    if token.eq_ignore_ascii_case("e") || token.eq_ignore_ascii_case(EPS_TOKEN) {
        return Ok(MaxScalar::Epsilon);
    }
    token
        .parse::<T>()
        .map(MaxScalar::Finite)
        .map_err(|_| Error::Parse {
            line,
            msg: format!("bad entry {token:?}"),
        })
}

/// Parses whitespace matrices, one row per line, blank lines between matrices.
pub fn parse_matrices<T: Numeric>(text: &str) -> Result<Vec<MaxMatrix<T>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<MaxScalar<T>>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            if !current.is_empty() {
                out.push(MaxMatrix::from_rows(std::mem::take(&mut current))?);
            }
            continue;
        }
        let row = trimmed
            .split_whitespace()
            .map(|t| parse_token(t, line_no))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = current.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {} entries, found {}", first.len(), row.len()),
                });
            }
        }
        current.push(row);
    }
    if !current.is_empty() {
        out.push(MaxMatrix::from_rows(current)?);
    }
    Ok(out)
}

pub fn parse_matrix<T: Numeric>(text: &str) -> Result<MaxMatrix<T>> {
    let mut all = parse_matrices(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        n => Err(Error::Parse {
            line: 0,
            msg: format!("expected one matrix, found {n}"),
        }),
    }
}

pub fn format_matrix_text<T: Numeric>(m: &MaxMatrix<T>) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|x| match x {
                MaxScalar::Finite(v) => v.to_string(),
                MaxScalar::Epsilon => "e".to_string(),
            })
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Deserialize)]
struct RawCoin {
    a: Value,
    b: Value,
    c: Value,
    d: Value,
}

fn json_number<T: Numeric>(key: &str, v: &Value) -> Result<T> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => String::new(),
    };
    text.parse().map_err(|_| Error::Parse {
        line: 0,
        msg: format!("coin entry {key} = {v} is not a valid number for this mode"),
    })
}

/// Parses `a=1,b=2,c=-2,d=-1`, the same pairs one per line, or
/// `{"a":1,"b":2,"c":-2,"d":-1}`. Lines starting with `#` are ignored.
pub fn parse_coin<T: Numeric>(text: &str) -> Result<Coin<T>> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let raw: RawCoin = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        return Ok(Coin::new(
            json_number("a", &raw.a)?,
            json_number("b", &raw.b)?,
            json_number("c", &raw.c)?,
            json_number("d", &raw.d)?,
        ));
    }
    let mut slots: [Option<T>; 4] = [None; 4];
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for pair in line.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected key=value, found {pair:?}"),
            })?;
            let slot = match key.trim() {
                "a" => 0,
                "b" => 1,
                "c" => 2,
                "d" => 3,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown coin key {other:?}"),
                    })
                }
            };
            let v = value.trim().parse::<T>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("coin entry {key} = {value:?} is not a valid number for this mode"),
            })?;
            slots[slot] = Some(v);
        }
    }
    match slots {
        [Some(a), Some(b), Some(c), Some(d)] => Ok(Coin::new(a, b, c, d)),
        _ => Err(Error::Parse {
            line: 0,
            msg: "coin needs all of a, b, c, d".into(),
        }),
    }
}

pub fn read_coin_file<T: Numeric>(path: &Path) -> std::result::Result<Coin<T>, ReadError> {
    let text = std::fs::read_to_string(path).map_err(ReadError::Io)?;
    parse_coin(&text).map_err(ReadError::Format)
}

/// Failure reading an input file: either the file or its contents.
#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(std::io::Error),
    #[error(transparent)]
    Format(Error),
}

/// `{"n": n, "cells": {"k": [[..],[..]], ...}}` in ascending `k`.
pub fn grid_to_json<T: JsonScalar>(grid: &SdmGrid<T>) -> Value {
    let mut cells = Map::new();
    for (k, m) in grid.cells() {
        cells.insert(k.to_string(), entry_rows(m));
    }
    json!({ "n": grid.time(), "cells": Value::Object(cells) })
}

/// Window matrix in the matrix schema plus `"K"` and the site ordering.
pub fn window_to_json<T: JsonScalar>(window: &WindowOperator<T>) -> Value {
    let mut v = matrix_to_json(window.matrix());
    v["K"] = json!(window.radius());
    v["indexing"] = json!("(k;L,k;R) ascending k");
    v
}

pub fn scalar_csv<T: Numeric>(x: MaxScalar<T>) -> String {
    x.to_string()
}

/// CSV writer with a mandatory header row.
pub fn csv_writer<W: Write>(out: W, header: &[&str]) -> Result<csv::Writer<W>> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(csv_error)?;
    Ok(w)
}

pub(crate) fn csv_error(e: csv::Error) -> Error {
    Error::Parse {
        line: 0,
        msg: e.to_string(),
    }
}

/// Rows `n,k,lambda`.
pub fn write_lambda_csv<W: Write, M: Numeric>(
    out: W,
    rows: &[(usize, i64, MaxScalar<M>)],
) -> Result<()> {
    let mut w = csv_writer(out, &["n", "k", "lambda"])?;
    for (n, k, lambda) in rows {
        w.write_record([n.to_string(), k.to_string(), scalar_csv(*lambda)])
            .map_err(csv_error)?;
    }
    w.flush().map_err(|e| csv_error(e.into()))
}

/// Rows `n,k,mu`.
pub fn write_mu_csv<W: Write>(out: W, n: usize, mu: &[(i64, f64)]) -> Result<()> {
    let mut w = csv_writer(out, &["n", "k", "mu"])?;
    for (k, m) in mu {
        w.write_record([n.to_string(), k.to_string(), m.to_string()])
            .map_err(csv_error)?;
    }
    w.flush().map_err(|e| csv_error(e.into()))
}

/// Rows `u,empirical_cdf,limit_cdf,abs_diff`.
pub fn write_weak_limit_csv<W: Write>(out: W, rows: &[WeakLimitRow]) -> Result<()> {
    let mut w = csv_writer(out, &["u", "empirical_cdf", "limit_cdf", "abs_diff"])?;
    for r in rows {
        w.write_record([
            r.u.to_string(),
            r.empirical_cdf.to_string(),
            r.limit_cdf.to_string(),
            r.abs_diff.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| csv_error(e.into()))
}
