//! JSON interchange for matrices, witnesses, and parameter files.
//!
//! The matrix object is `{"mode": "rational"|"float", "rows": R, "cols": C,
//! "data": [...]}` with row-major `data`: rational entries are strings
//! `"p/q"` or `"p"` (plain integers are also accepted on input), float
//! entries are numbers. Witness objects name their matrices by role
//! (`T`/`T_minus`/`T_equals` for similarity, `P`/`Q`/`P_minus`/`Q_minus`
//! for equivalence), and the parameter file is `{"Z": M, "Z1": M}`.
//! Every emitted value re-parses to an identical matrix.

use crate::equivalence::{EquivalenceWitness, SimilarityWitness};
use crate::error::MatError;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;
use serde_json::{json, Map, Value};
use std::str::FromStr;

fn parse_err(file: &str, detail: impl Into<String>) -> MatError {
    MatError::Parse { file: file.to_string(), detail: detail.into() }
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_str(s: &str, file: &str) -> Result<Scalar, MatError> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let numer = BigInt::from_str(num_str)
        .map_err(|_| parse_err(file, format!("invalid rational numerator {num_str:?}")))?;
    let denom = BigInt::from_str(den_str)
        .map_err(|_| parse_err(file, format!("invalid rational denominator {den_str:?}")))?;
    if denom == BigInt::from(0) {
        return Err(parse_err(file, format!("zero denominator in {s:?}")));
    }
    Ok(Scalar::Rational(BigRational::new(numer, denom)))
}

fn entry_from_json(v: &Value, mode: Mode, file: &str) -> Result<Scalar, MatError> {
    match mode {
        Mode::Rational => match v {
            Value::String(s) => rational_from_str(s, file),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Scalar::from_int(Mode::Rational, i))
                } else {
                    Err(parse_err(
                        file,
                        format!("rational entries must be strings or integers, got {n}"),
                    ))
                }
            }
            other => Err(parse_err(file, format!("rational entry must be a string, got {other}"))),
        },
        Mode::Float => v
            .as_f64()
            .map(Scalar::Float)
            .ok_or_else(|| parse_err(file, format!("float entry must be a number, got {v}"))),
    }
}

/// Serializes a matrix to the shared JSON object.
pub fn matrix_to_json(m: &Matrix) -> Value {
    let data: Vec<Value> = m
        .entries()
        .iter()
        .map(|s| match s {
            Scalar::Rational(r) => Value::String(rational_to_string(r)),
            Scalar::Float(f) => json!(f),
        })
        .collect();
    json!({
        "mode": m.mode().to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "data": data,
    })
}

/// Reads a matrix from a parsed JSON value; `file` names the source in
/// every error.
pub fn matrix_from_json(v: &Value, file: &str) -> Result<Matrix, MatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(file, "matrix must be a JSON object"))?;
    let mode = match obj.get("mode").and_then(Value::as_str) {
        Some("rational") => Mode::Rational,
        Some("float") => Mode::Float,
        Some(other) => {
            return Err(parse_err(file, format!("mode must be \"rational\" or \"float\", got {other:?}")))
        }
        None => return Err(parse_err(file, "missing string field \"mode\"")),
    };
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err(file, "missing non-negative integer field \"rows\""))?
        as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err(file, "missing non-negative integer field \"cols\""))?
        as usize;
    let data = obj
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(file, "missing array field \"data\""))?;
    if data.len() != rows * cols {
        return Err(parse_err(
            file,
            format!("data has {} entries, expected {}x{} = {}", data.len(), rows, cols, rows * cols),
        ));
    }
    let scalars = data
        .iter()
        .map(|e| entry_from_json(e, mode, file))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_scalars(mode, rows, cols, scalars)
        .map_err(|e| parse_err(file, e.to_string()))
}

/// Parses JSON text into a matrix. Syntax errors report the file together
/// with the line, column, and byte offset where parsing stopped.
pub fn matrix_from_str(text: &str, file: &str) -> Result<Matrix, MatError> {
    let value = parse_json(text, file)?;
    matrix_from_json(&value, file)
}

/// Parses JSON text, turning syntax errors into `Parse` errors that name
/// the file and the byte offset of the failure.
pub fn parse_json(text: &str, file: &str) -> Result<Value, MatError> {
    serde_json::from_str(text).map_err(|e| {
        let offset = byte_offset(text, e.line(), e.column());
        parse_err(
            file,
            format!("invalid JSON at line {}, column {} (byte offset {}): {}", e.line(), e.column(), offset, e),
        )
    })
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    // serde_json reports 1-based line/column; column counts bytes on the line
    let mut offset = 0usize;
    for (idx, l) in text.split('\n').enumerate() {
        if idx + 1 == line {
            return offset + column.saturating_sub(1).min(l.len());
        }
        offset += l.len() + 1;
    }
    text.len()
}

fn field_matrix(obj: &Map<String, Value>, key: &str, file: &str) -> Result<Matrix, MatError> {
    let v = obj
        .get(key)
        .ok_or_else(|| parse_err(file, format!("missing matrix field {key:?}")))?;
    matrix_from_json(v, file)
}

pub fn similarity_witness_to_json(w: &SimilarityWitness) -> Value {
    json!({
        "T": matrix_to_json(&w.t),
        "T_minus": matrix_to_json(&w.t_minus),
        "T_equals": matrix_to_json(&w.t_equals),
    })
}

pub fn similarity_witness_from_json(v: &Value, file: &str) -> Result<SimilarityWitness, MatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(file, "witness must be a JSON object"))?;
    Ok(SimilarityWitness {
        t: field_matrix(obj, "T", file)?,
        t_minus: field_matrix(obj, "T_minus", file)?,
        t_equals: field_matrix(obj, "T_equals", file)?,
    })
}

pub fn equivalence_witness_to_json(w: &EquivalenceWitness) -> Value {
    json!({
        "P": matrix_to_json(&w.p),
        "Q": matrix_to_json(&w.q),
        "P_minus": matrix_to_json(&w.p_minus),
        "Q_minus": matrix_to_json(&w.q_minus),
    })
}

pub fn equivalence_witness_from_json(v: &Value, file: &str) -> Result<EquivalenceWitness, MatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(file, "witness must be a JSON object"))?;
    Ok(EquivalenceWitness {
        p: field_matrix(obj, "P", file)?,
        q: field_matrix(obj, "Q", file)?,
        p_minus: field_matrix(obj, "P_minus", file)?,
        q_minus: field_matrix(obj, "Q_minus", file)?,
    })
}

/// A witness of either kind, distinguished by its JSON keys: `T` marks a
/// similarity witness, `P` an equivalence witness.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessJson {
    Similarity(SimilarityWitness),
    Equivalence(EquivalenceWitness),
}

pub fn witness_from_json(v: &Value, file: &str) -> Result<WitnessJson, MatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(file, "witness must be a JSON object"))?;
    if obj.contains_key("T") {
        Ok(WitnessJson::Similarity(similarity_witness_from_json(v, file)?))
    } else if obj.contains_key("P") {
        Ok(WitnessJson::Equivalence(equivalence_witness_from_json(v, file)?))
    } else {
        Err(parse_err(
            file,
            "witness object must contain \"T\" (similarity) or \"P\" (equivalence)",
        ))
    }
}

/// Reads a parameter file `{"Z": M, "Z1": M}` for family evaluation.
pub fn params_from_json(v: &Value, file: &str) -> Result<(Matrix, Matrix), MatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(file, "params must be a JSON object"))?;
    Ok((field_matrix(obj, "Z", file)?, field_matrix(obj, "Z1", file)?))
}
