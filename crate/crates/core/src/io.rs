//! Matrix files.
//!
//! Rational matrices: `{"n": 2, "entries": [["1/2", "0", "3"], ...]}` with
//! entries as exact `"p/q"` strings or JSON integers. Prime-field matrices:
//! `{"q": 5, "entries": [[0, 1, 4], ...]}`. Floats are rejected in both.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::field::parse_rational;
use crate::algebra::{Matrix, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("matrix file is not valid JSON: {0}")]
    Json(String),
    #[error("matrix file: {0}")]
    Shape(String),
    #[error("matrix entry [{row}][{col}]: {message}")]
    Entry {
        row: usize,
        col: usize,
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixInput {
    Rational(Matrix<BigRational>),
    Prime(PrimeField, Matrix<u64>),
}

impl MatrixInput {
    pub fn size(&self) -> usize {
        match self {
            MatrixInput::Rational(m) => m.rows(),
            MatrixInput::Prime(_, m) => m.rows(),
        }
    }
}

fn entry_err(row: usize, col: usize, message: impl Into<String>) -> InputError {
    InputError::Entry {
        row,
        col,
        message: message.into(),
    }
}

fn rational_entry(v: &Value, row: usize, col: usize) -> Result<BigRational, InputError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| entry_err(row, col, e.to_string())),
        Value::Number(n) => {
            let text = n.to_string();
            let i: BigInt = text.parse().map_err(|_| {
                entry_err(
                    row,
                    col,
                    format!("{text} is not an integer; write fractions as \"p/q\" strings"),
                )
            })?;
            Ok(BigRational::from_integer(i))
        }
        _ => Err(entry_err(
            row,
            col,
            "expected a \"p/q\" string or an integer",
        )),
    }
}

fn prime_entry(f: &PrimeField, v: &Value, row: usize, col: usize) -> Result<u64, InputError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(entry_err(row, col, "expected an integer")),
    };
    let i: BigInt = text
        .parse()
        .map_err(|_| entry_err(row, col, format!("{text} is not an integer")))?;
    let q = BigInt::from(f.modulus());
    let r = ((i % &q) + &q) % &q;
    Ok(r.try_into().expect("residue fits in u64"))
}

/// Parses a matrix file. When the file carries `"n"`, it must match the
/// matrix size (either the number of rows minus one, or the number of rows).
pub fn parse_matrix(text: &str) -> Result<MatrixInput, InputError> {
    let v: Value = serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| InputError::Shape("expected a JSON object".into()))?;
    let rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| InputError::Shape("missing \"entries\" array".into()))?;
    let rows: Vec<&Vec<Value>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| InputError::Shape("each row must be an array".into()))
        })
        .collect::<Result<_, _>>()?;
    let size = rows.len();
    if size == 0 || rows.iter().any(|r| r.len() != size) {
        return Err(InputError::Shape(format!(
            "entries must form a nonempty square array (got {} rows)",
            size
        )));
    }
    if let Some(n) = obj.get("n") {
        let n = n
            .as_u64()
            .ok_or_else(|| InputError::Shape("\"n\" must be a nonnegative integer".into()))?;
        if n as usize + 1 != size && n as usize != size {
            return Err(InputError::Shape(format!(
                "\"n\" = {n} does not match a {size}x{size} matrix"
            )));
        }
    }
    match obj.get("q") {
        None => {
            let mut out = Vec::with_capacity(size);
            for (i, r) in rows.iter().enumerate() {
                out.push(
                    r.iter()
                        .enumerate()
                        .map(|(j, v)| rational_entry(v, i, j))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            Ok(MatrixInput::Rational(
                Matrix::from_rows(out).expect("checked square"),
            ))
        }
        Some(q) => {
            let q = q
                .as_u64()
                .ok_or_else(|| InputError::Shape("\"q\" must be a positive integer".into()))?;
            let f = PrimeField::new(q).map_err(|e| InputError::Shape(e.to_string()))?;
            let mut out = Vec::with_capacity(size);
            for (i, r) in rows.iter().enumerate() {
                out.push(
                    r.iter()
                        .enumerate()
                        .map(|(j, v)| prime_entry(&f, v, i, j))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            Ok(MatrixInput::Prime(
                f,
                Matrix::from_rows(out).expect("checked square"),
            ))
        }
    }
}
