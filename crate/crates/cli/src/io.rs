//! JSON/CSV/COO encoding of scalars, polynomials and matrices.
//!
//! Exact rationals serialize as `{"num": "...", "den": "..."}` objects in
//! JSON and `num/den` strings in CSV so regression fixtures are bit-exact;
//! floats use the shortest round-trip decimal. Readers accept plain numbers
//! in exact mode too (converted exactly from their binary value).

use ndarray::Array2;
use num_bigint::BigInt;
use polymul_core::scalar::Scalar;
use serde_json::{json, Value};
use std::path::Path;
use std::str::FromStr;

use crate::AppError;

pub fn scalar_to_json<S: Scalar>(s: &S) -> Value {
    match s.as_ratio() {
        Some((num, den)) => json!({"num": num.to_string(), "den": den.to_string()}),
        None => json!(s.to_f64()),
    }
}

fn bigint_from_value(v: &Value, what: &str) -> Result<BigInt, AppError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else {
                Err(AppError::domain(format!("{what} must be an integer")))
            }
        }
        Value::String(s) => BigInt::from_str(s)
            .map_err(|_| AppError::domain(format!("{what} is not an integer: `{s}`"))),
        _ => Err(AppError::domain(format!("{what} must be an integer"))),
    }
}

pub fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S, AppError> {
    match v {
        Value::Number(n) => {
            let x = n
                .as_f64()
                .ok_or_else(|| AppError::domain("number out of range"))?;
            if S::EXACT {
                // integers stay integers; other decimals adopt their exact
                // binary value
                if let Some(i) = n.as_i64() {
                    return Ok(S::from_int(i));
                }
                let r = num_rational::BigRational::from_float(x)
                    .ok_or_else(|| AppError::domain("non-finite number"))?;
                let (num, den) = (r.numer().clone(), r.denom().clone());
                Ok(S::big_ratio(num, den))
            } else {
                S::from_f64(x).ok_or_else(|| AppError::domain("number not representable"))
            }
        }
        Value::Object(o) => {
            let num = bigint_from_value(
                o.get("num")
                    .ok_or_else(|| AppError::domain("rational object needs `num`"))?,
                "num",
            )?;
            let den = bigint_from_value(
                o.get("den")
                    .ok_or_else(|| AppError::domain("rational object needs `den`"))?,
                "den",
            )?;
            if den == BigInt::from(0) {
                return Err(AppError::domain("zero denominator"));
            }
            Ok(S::big_ratio(num, den))
        }
        _ => Err(AppError::domain(format!("cannot read scalar from {v}"))),
    }
}

pub fn scalar_to_csv<S: Scalar>(s: &S) -> String {
    match s.as_ratio() {
        Some((num, den)) => format!("{num}/{den}"),
        None => format!("{}", s.to_f64()),
    }
}

pub fn vec_to_json<S: Scalar>(xs: &[S]) -> Value {
    Value::Array(xs.iter().map(scalar_to_json).collect())
}

pub fn vec_from_json<S: Scalar>(v: &Value, what: &str) -> Result<Vec<S>, AppError> {
    let arr = v
        .as_array()
        .ok_or_else(|| AppError::domain(format!("{what} must be an array")))?;
    arr.iter().map(scalar_from_json).collect()
}

pub fn matrix_to_json_rows<S: Scalar>(m: &Array2<S>) -> Value {
    Value::Array(
        m.rows()
            .into_iter()
            .map(|row| Value::Array(row.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json_rows<S: Scalar>(v: &Value) -> Result<Array2<S>, AppError> {
    let rows = v
        .as_array()
        .ok_or_else(|| AppError::domain("`rows` must be an array"))?;
    if rows.is_empty() {
        return Err(AppError::domain("`rows` is empty"));
    }
    let parsed: Vec<Vec<S>> = rows
        .iter()
        .map(|r| vec_from_json(r, "matrix row"))
        .collect::<Result<_, _>>()?;
    let cols = parsed[0].len();
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(AppError::domain("ragged matrix rows"));
    }
    let mut out = Array2::from_elem((parsed.len(), cols), S::zero());
    for (r, row) in parsed.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            out[[r, c]] = v;
        }
    }
    Ok(out)
}

/// Matrix as CSV lines under a `# <header>` comment.
pub fn matrix_to_csv<S: Scalar>(m: &Array2<S>, header: &str) -> String {
    let mut out = format!("# {header}\n");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(scalar_to_csv).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Nonzero entries as `i,j,value` coordinate triplets.
pub fn matrix_to_coo<S: Scalar>(m: &Array2<S>, header: &str) -> String {
    let mut out = format!("# {header}\n");
    for ((i, j), v) in m.indexed_iter() {
        if !v.is_zero() {
            out.push_str(&format!("{i},{j},{}\n", scalar_to_csv(v)));
        }
    }
    out
}

/// An argument that is either a path to a JSON file or inline JSON.
pub fn read_json_arg(arg: &str) -> Result<Value, AppError> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| AppError::domain(format!("cannot read `{arg}`: {e}")))?;
        serde_json::from_str(&text)
            .map_err(|e| AppError::domain(format!("`{arg}` is not valid JSON: {e}")))
    } else {
        serde_json::from_str(arg).map_err(|e| {
            AppError::usage(format!(
                "`{arg}` is neither an existing file nor inline JSON: {e}"
            ))
        })
    }
}
