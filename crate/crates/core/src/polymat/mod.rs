//! Univariate matrix polynomials over `ℂ` with the involution
//! `F(x)* = conj(F(x))ᵀ`, in exact and floating modes.

mod laurent;
mod matrix;
mod poly;
pub(crate) mod upoly;

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use laurent::LaurentMatrixPoly;
pub use matrix::Mat;
pub use poly::{MatrixPoly, ScalarPoly};

use crate::json::{self as js, JsonError};
use crate::scalar::{Cq, Mode, Qi2, Scalar};

/// Bareiss elimination is used up to this size.
pub const MAX_DET_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix size must be positive")]
    EmptyMatrix,
    #[error("entries do not form a square matrix")]
    NotSquare,
    #[error("expected a scalar polynomial, got size {0}")]
    NotScalar(usize),
    #[error("affine substitution needs a nonzero scale")]
    ZeroScale,
    #[error("reversal degree {d} is below the polynomial degree {degree}")]
    ReversalDegree { d: usize, degree: usize },
    #[error("determinant supports sizes up to {MAX_DET_SIZE}, got {0}")]
    TooLarge(usize),
}

/// JSON encoding of a single coefficient.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, path: &str) -> Result<Self, JsonError>;
}

impl JsonScalar for Cq {
    fn to_json(&self) -> Value {
        json!([js::rational_to_string(&self.re), js::rational_to_string(&self.im)])
    }

    fn from_json(v: &Value, path: &str) -> Result<Self, JsonError> {
        let arr = js::as_array(v, path)?;
        if arr.len() != 2 {
            return Err(JsonError::new(path, "expected [re, im]"));
        }
        let re = js::rational_from_json(&arr[0], &js::index(path, 0))?;
        let im = js::rational_from_json(&arr[1], &js::index(path, 1))?;
        Ok(Cq::new(re, im))
    }
}

impl JsonScalar for Complex64 {
    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }

    fn from_json(v: &Value, path: &str) -> Result<Self, JsonError> {
        let arr = js::as_array(v, path)?;
        if arr.len() != 2 {
            return Err(JsonError::new(path, "expected [re, im]"));
        }
        Ok(Complex64::new(
            js::as_f64(&arr[0], &js::index(path, 0))?,
            js::as_f64(&arr[1], &js::index(path, 1))?,
        ))
    }
}

impl JsonScalar for Qi2 {
    fn to_json(&self) -> Value {
        json!({"a": self.a.to_json(), "b": self.b.to_json()})
    }

    fn from_json(v: &Value, path: &str) -> Result<Self, JsonError> {
        let a = Cq::from_json(js::field(v, "a", path)?, &js::join(path, "a"))?;
        let b = Cq::from_json(js::field(v, "b", path)?, &js::join(path, "b"))?;
        Ok(Qi2::new(a, b))
    }
}

pub fn mat_to_json<T: JsonScalar>(m: &Mat<T>) -> Value {
    let n = m.size();
    Value::Array(
        (0..n)
            .map(|i| Value::Array((0..n).map(|j| m.get(i, j).to_json()).collect()))
            .collect(),
    )
}

pub fn mat_from_json<T: JsonScalar>(v: &Value, n: usize, path: &str) -> Result<Mat<T>, JsonError> {
    let rows = js::as_array(v, path)?;
    if rows.len() != n {
        return Err(JsonError::new(path, format!("expected {n} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let rp = js::index(path, i);
        let cells = js::as_array(row, &rp)?;
        if cells.len() != n {
            return Err(JsonError::new(rp, format!("expected {n} columns, got {}", cells.len())));
        }
        let mut r = Vec::with_capacity(n);
        for (j, c) in cells.iter().enumerate() {
            r.push(T::from_json(c, &js::index(&rp, j))?);
        }
        out.push(r);
    }
    Ok(Mat::from_rows(out).expect("checked square"))
}

impl<T: JsonScalar> MatrixPoly<T> {
    /// `{"n", "mode", "coeffs"}` with `coeffs[m][row][col]`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.size(),
            "mode": T::MODE.as_str(),
            "coeffs": self.coeffs().iter().map(mat_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        Self::from_json_at(v, "")
    }

    pub fn from_json_at(v: &Value, path: &str) -> Result<Self, JsonError> {
        let n = js::as_usize(js::field(v, "n", path)?, &js::join(path, "n"))?;
        if n == 0 {
            return Err(JsonError::new(js::join(path, "n"), "must be positive"));
        }
        if let Some(mode) = v.get("mode") {
            let mp = js::join(path, "mode");
            let mode = js::as_str(mode, &mp)?;
            if mode != T::MODE.as_str() {
                return Err(JsonError::new(
                    mp,
                    format!("expected mode {:?}, got {mode:?}", T::MODE.as_str()),
                ));
            }
        }
        let cp = js::join(path, "coeffs");
        let coeffs = js::as_array(js::field(v, "coeffs", path)?, &cp)?
            .iter()
            .enumerate()
            .map(|(m, c)| mat_from_json(c, n, &js::index(&cp, m)))
            .collect::<Result<Vec<_>, _>>()?;
        MatrixPoly::from_coeffs(n, coeffs).map_err(|e| JsonError::new(cp, e.to_string()))
    }
}

/// A polynomial read from JSON whose mode is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Exact(MatrixPoly<Cq>),
    Float(MatrixPoly<Complex64>),
}

impl AnyPoly {
    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let mode = match v.get("mode") {
            Some(m) => js::as_str(m, "mode")?,
            None => "exact",
        };
        match mode {
            "exact" => MatrixPoly::from_json(v).map(AnyPoly::Exact),
            "float" => MatrixPoly::from_json(v).map(AnyPoly::Float),
            other => Err(JsonError::new("mode", format!("unknown mode {other:?}"))),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyPoly::Exact(_) => Mode::Exact,
            AnyPoly::Float(_) => Mode::Float,
        }
    }

    pub fn to_float(&self) -> MatrixPoly<Complex64> {
        match self {
            AnyPoly::Exact(p) => p.to_float(),
            AnyPoly::Float(p) => p.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyPoly::Exact(p) => p.to_json(),
            AnyPoly::Float(p) => p.to_json(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyPoly::Exact(p) => p.size(),
            AnyPoly::Float(p) => p.size(),
        }
    }
}

/// Rounds a float polynomial to rationals with denominators at most
/// `max_den`. This is the only float-to-exact route.
pub fn rationalize_poly(p: &MatrixPoly<Complex64>, max_den: u64) -> Option<MatrixPoly<Cq>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let n = c.size();
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    let v = c.get(i, j);
                    let re: BigRational = crate::scalar::rationalize(v.re, max_den)?;
                    let im: BigRational = crate::scalar::rationalize(v.im, max_den)?;
                    row.push(Cq::new(re, im));
                }
                rows.push(row);
            }
            Mat::from_rows(rows)
        })
        .collect::<Option<Vec<_>>>()?;
    MatrixPoly::from_coeffs(p.size(), coeffs).ok()
}
