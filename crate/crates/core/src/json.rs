//! Shared JSON plumbing: error type with a field path, and rational codecs.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

/// Malformed JSON input; `path` names the offending field.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("invalid field `{path}`: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

impl JsonError {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        JsonError {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub fn field<'a>(v: &'a Value, name: &str, path: &str) -> Result<&'a Value, JsonError> {
    v.get(name)
        .ok_or_else(|| JsonError::new(join(path, name), "missing"))
}

pub fn join(path: &str, name: &str) -> String {
    if path.is_empty() {
        name.to_string()
    } else {
        format!("{path}.{name}")
    }
}

pub fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

pub fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array()
        .ok_or_else(|| JsonError::new(path, "expected an array"))
}

pub fn as_usize(v: &Value, path: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| JsonError::new(path, "expected a non-negative integer"))
}

pub fn as_f64(v: &Value, path: &str) -> Result<f64, JsonError> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| JsonError::new(path, "number out of range")),
        Value::String(s) => s
            .trim()
            .parse::<f64>()
            .map_err(|_| JsonError::new(path, "expected a number")),
        _ => Err(JsonError::new(path, "expected a number")),
    }
}

pub fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str, JsonError> {
    v.as_str()
        .ok_or_else(|| JsonError::new(path, "expected a string"))
}

/// Parses `"p/q"`, `"p"`, a decimal string, or an integer JSON number.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).ok()?;
        let q = BigInt::from_str(q.trim()).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Ok(i) = BigInt::from_str(s) {
        return Some(BigRational::from_integer(i));
    }
    // finite decimal such as "-1.25" or "1e-3"
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    if frac_part.chars().any(|c| !c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(&digits).ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<BigRational, JsonError> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| JsonError::new(path, format!("not a rational: {s:?}")))
        }
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(BigInt::from(
            n.as_i64().unwrap(),
        ))),
        Value::Number(n) => n
            .as_f64()
            .and_then(BigRational::from_float)
            .ok_or_else(|| JsonError::new(path, "not a finite number")),
        _ => Err(JsonError::new(path, "expected a rational string \"p/q\"")),
    }
}
