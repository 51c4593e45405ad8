use std::collections::BTreeMap;

use num_complex::Complex64;

use super::matrix::Mat;
use super::poly::MatrixPoly;
use super::PolyError;
use crate::scalar::Scalar;

/// Matrix Laurent polynomial `Σ_m A_m z^m`, `m ∈ ℤ`, with finitely many
/// nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentMatrixPoly<T> {
    n: usize,
    coeffs: BTreeMap<i64, Mat<T>>,
}

impl<T: Scalar> LaurentMatrixPoly<T> {
    pub fn zero(n: usize) -> Self {
        LaurentMatrixPoly {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (i64, Mat<T>)>) -> Result<Self, PolyError> {
        let mut out = Self::zero(n);
        for (e, m) in terms {
            if m.size() != n {
                return Err(PolyError::SizeMismatch {
                    left: n,
                    right: m.size(),
                });
            }
            out.add_term(e, m);
        }
        Ok(out)
    }

    /// `z^shift · P(z)`
    pub fn from_poly(p: &MatrixPoly<T>, shift: i64) -> Self {
        let mut out = Self::zero(p.size());
        for (m, c) in p.coeffs().iter().enumerate() {
            out.add_term(m as i64 + shift, c.clone());
        }
        out
    }

    pub fn scalar_terms(terms: &[(i64, T)]) -> Self {
        let mut out = Self::zero(1);
        for (e, c) in terms {
            out.add_term(*e, Mat::scalar(1, c.clone()));
        }
        out
    }

    fn add_term(&mut self, e: i64, m: Mat<T>) {
        let cur = self.coeffs.remove(&e);
        let next = match cur {
            Some(c) => c.add(&m),
            None => m,
        };
        if !next.is_zero() {
            self.coeffs.insert(e, next);
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Mat<T>)> {
        self.coeffs.iter().map(|(e, m)| (*e, m))
    }

    pub fn coeff(&self, e: i64) -> Mat<T> {
        self.coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.n))
    }

    /// Smallest and largest exponent with a nonzero coefficient.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.n != o.n {
            return Err(PolyError::SizeMismatch {
                left: self.n,
                right: o.n,
            });
        }
        let mut out = self.clone();
        for (e, m) in &o.coeffs {
            out.add_term(*e, m.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        let neg = LaurentMatrixPoly {
            n: o.n,
            coeffs: o.coeffs.iter().map(|(e, m)| (*e, m.neg())).collect(),
        };
        self.add(&neg)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.n != o.n && self.n != 1 && o.n != 1 {
            return Err(PolyError::SizeMismatch {
                left: self.n,
                right: o.n,
            });
        }
        let n = self.n.max(o.n);
        let mut out = Self::zero(n);
        for (ea, a) in &self.coeffs {
            for (eb, b) in &o.coeffs {
                let prod = match (a.size(), b.size()) {
                    (x, y) if x == y => a.mul(b),
                    (1, _) => b.scale(a.get(0, 0)),
                    _ => a.scale(b.get(0, 0)),
                };
                out.add_term(ea + eb, prod);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (e, m) in &self.coeffs {
            out.add_term(*e, m.scale(s));
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::from_poly(&MatrixPoly::identity(self.n), 0);
        for _ in 0..k {
            out = out.mul(self).expect("same size");
        }
        out
    }

    /// The involution `A(z)* = conj(A(1/conj z))ᵀ`: the coefficient at `m`
    /// becomes the conjugate transpose of the coefficient at `−m`.
    pub fn laurent_adjoint(&self) -> Self {
        LaurentMatrixPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, m)| (-e, m.adjoint()))
                .collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        let tol = 1e-12
            * self
                .coeffs
                .values()
                .map(|m| m.max_abs())
                .fold(1.0, f64::max);
        match self.sub(&self.laurent_adjoint()) {
            Ok(d) => d.coeffs.values().all(|m| m.entries().iter().all(|v| v.negligible(tol))),
            Err(_) => false,
        }
    }

    /// Evaluation at a nonzero point.
    pub fn evaluate(&self, z: &T) -> Option<Mat<T>> {
        let zinv = z.inv()?;
        let mut acc = Mat::zeros(self.n);
        for (e, m) in &self.coeffs {
            let base = if *e >= 0 { z.clone() } else { zinv.clone() };
            let mut p = T::one();
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc.add(&m.scale(&p));
        }
        Some(acc)
    }

    /// Complex derivative `d/dz`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, m) in &self.coeffs {
            if *e != 0 {
                out.add_term(e - 1, m.scale(&T::from_i64(*e)));
            }
        }
        out
    }

    pub fn to_float(&self) -> LaurentMatrixPoly<Complex64> {
        LaurentMatrixPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, m)| (*e, m.map(|v| v.to_c64())))
                .filter(|(_, m)| !m.is_zero())
                .collect(),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().map(|m| m.max_abs()).fold(0.0, f64::max)
    }
}
