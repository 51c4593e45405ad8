use num_complex::Complex64;

use super::matrix::Mat;
use super::upoly;
use super::PolyError;
use crate::scalar::{Mode, Scalar};

/// Univariate `n×n` matrix polynomial `Σ_m F_m x^m`.
///
/// Coefficients are normalized on construction: the highest stored
/// coefficient is nonzero, and the zero polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPoly<T> {
    n: usize,
    coeffs: Vec<Mat<T>>,
}

/// Matrix polynomials of size one double as scalar polynomials.
pub type ScalarPoly<T> = MatrixPoly<T>;

impl<T: Scalar> MatrixPoly<T> {
    pub fn zero(n: usize) -> Self {
        MatrixPoly {
            n,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Mat<T>>) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::EmptyMatrix);
        }
        if let Some(bad) = coeffs.iter().find(|c| c.size() != n) {
            return Err(PolyError::SizeMismatch {
                left: n,
                right: bad.size(),
            });
        }
        Ok(Self::normalized(n, coeffs))
    }

    fn normalized(n: usize, mut coeffs: Vec<Mat<T>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        MatrixPoly { n, coeffs }
    }

    pub fn constant(m: Mat<T>) -> Self {
        let n = m.size();
        Self::normalized(n, vec![m])
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(Mat::identity(n))
    }

    /// `x·I_n`
    pub fn x(n: usize) -> Self {
        Self::normalized(n, vec![Mat::zeros(n), Mat::identity(n)])
    }

    pub fn monomial(m: Mat<T>, degree: usize) -> Self {
        let n = m.size();
        let mut coeffs = vec![Mat::zeros(n); degree];
        coeffs.push(m);
        Self::normalized(n, coeffs)
    }

    /// Scalar polynomial from its coefficient list (constant term first).
    pub fn scalar(coeffs: Vec<T>) -> Self {
        Self::normalized(1, coeffs.into_iter().map(|c| Mat::scalar(1, c)).collect())
    }

    pub fn scalar_i64(coeffs: &[i64]) -> Self {
        Self::scalar(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// Product `Π (x − r)` as a scalar polynomial.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut p = vec![T::one()];
        for r in roots {
            p = upoly::mul(&p, &[-r.clone(), T::one()]);
        }
        Self::scalar(p)
    }

    /// Assembles a matrix polynomial from scalar entries.
    pub fn from_entries(rows: &[Vec<ScalarPoly<T>>]) -> Result<Self, PolyError> {
        let n = rows.len();
        if n == 0 {
            return Err(PolyError::EmptyMatrix);
        }
        for row in rows {
            if row.len() != n {
                return Err(PolyError::NotSquare);
            }
            if let Some(e) = row.iter().find(|e| e.n != 1) {
                return Err(PolyError::NotScalar(e.n));
            }
        }
        let deg = rows
            .iter()
            .flatten()
            .filter_map(|e| e.degree())
            .max();
        let Some(deg) = deg else {
            return Ok(Self::zero(n));
        };
        let coeffs = (0..=deg)
            .map(|m| Mat::from_fn(n, |i, j| rows[i][j].scalar_coeff(m)))
            .collect();
        Ok(Self::normalized(n, coeffs))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        T::MODE
    }

    /// `None` encodes the degree `−∞` of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Mat<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Mat<T> {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.n))
    }

    /// Entry `(i, j)` as a scalar polynomial.
    pub fn entry(&self, i: usize, j: usize) -> ScalarPoly<T> {
        Self::scalar(self.coeffs.iter().map(|c| c.get(i, j).clone()).collect())
    }

    pub(crate) fn entry_coeffs(&self, i: usize, j: usize) -> Vec<T> {
        upoly::trim(self.coeffs.iter().map(|c| c.get(i, j).clone()).collect())
    }

    /// Coefficient `m` of a scalar polynomial (zero past the degree).
    pub fn scalar_coeff(&self, m: usize) -> T {
        self.coeffs
            .get(m)
            .map(|c| c.get(0, 0).clone())
            .unwrap_or_else(T::zero)
    }

    pub fn scalar_coeffs(&self) -> Vec<T> {
        self.entry_coeffs(0, 0)
    }

    fn check_size(&self, o: &Self) -> Result<(), PolyError> {
        if self.n != o.n {
            Err(PolyError::SizeMismatch {
                left: self.n,
                right: o.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_size(o)?;
        let len = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..len)
            .map(|m| match (self.coeffs.get(m), o.coeffs.get(m)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::normalized(self.n, coeffs))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MatrixPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Cauchy product. A size-one operand acts by scaling.
    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.n != o.n {
            if self.n == 1 {
                return Ok(o.mul_scalar_poly(self));
            }
            if o.n == 1 {
                return Ok(self.mul_scalar_poly(o));
            }
            return Err(PolyError::SizeMismatch {
                left: self.n,
                right: o.n,
            });
        }
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let mut coeffs = vec![Mat::zeros(self.n); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(Self::normalized(self.n, coeffs))
    }

    /// Multiplies every entry by the scalar polynomial `p`.
    pub fn mul_scalar_poly(&self, p: &ScalarPoly<T>) -> Self {
        assert_eq!(p.n, 1, "scaling polynomial must be scalar");
        if self.is_zero() || p.is_zero() {
            return Self::zero(self.n);
        }
        let mut coeffs = vec![Mat::zeros(self.n); self.coeffs.len() + p.coeffs.len() - 1];
        for (j, s) in p.coeffs.iter().enumerate() {
            let s = s.get(0, 0);
            if s.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.scale(s));
            }
        }
        Self::normalized(self.n, coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::normalized(self.n, self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same size");
        }
        out
    }

    /// Left and right multiplication by constant matrices: `L·F·R`.
    pub fn sandwich(&self, left: &Mat<T>, right: &Mat<T>) -> Self {
        Self::normalized(
            self.n,
            self.coeffs.iter().map(|c| left.mul(c).mul(right)).collect(),
        )
    }

    /// The involution `F(x)* = conj(F(x))ᵀ` with `x` real.
    pub fn adjoint(&self) -> Self {
        MatrixPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.adjoint()).collect(),
        }
    }

    /// Exact comparison in exact modes, tolerance `1e-12·max|F|` in float mode.
    pub fn is_hermitian(&self) -> bool {
        let tol = 1e-12 * self.max_abs_coeff().max(1.0);
        self.is_hermitian_tol(tol)
    }

    pub fn is_hermitian_tol(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_hermitian(tol))
    }

    /// True when every coefficient is real (exactly, or within rounding).
    pub fn is_real(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.entries().iter().all(|v| v.is_real()))
    }

    pub fn evaluate(&self, x0: &T) -> Mat<T> {
        let mut acc = Mat::zeros(self.n);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x0).add(c);
        }
        acc
    }

    /// Derivative with respect to `x`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c.scale(&T::from_i64(m as i64)))
            .collect();
        Self::normalized(self.n, coeffs)
    }

    /// Determinant as a scalar polynomial, by fraction-free Bareiss
    /// elimination over the polynomial ring.
    pub fn determinant(&self) -> Result<ScalarPoly<T>, PolyError> {
        let n = self.n;
        if n > super::MAX_DET_SIZE {
            return Err(PolyError::TooLarge(n));
        }
        let mut m: Vec<Vec<Vec<T>>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry_coeffs(i, j)).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev: Vec<T> = vec![T::one()];
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_empty() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                    return Ok(Self::zero(1));
                };
                m.swap(k, swap);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = upoly::sub(
                        &upoly::mul(&m[k][k], &m[i][j]),
                        &upoly::mul(&m[i][k], &m[k][j]),
                    );
                    let (q, _) = upoly::divrem(&num, &prev).expect("nonzero pivot");
                    m[i][j] = q;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        let det = if sign_flip {
            det.into_iter().map(|c| -c).collect()
        } else {
            det
        };
        Ok(Self::scalar(det))
    }

    /// Returns `F(αx + β)`.
    pub fn affine_substitute(&self, alpha: &T, beta: &T) -> Result<Self, PolyError> {
        if alpha.is_zero() {
            return Err(PolyError::ZeroScale);
        }
        let lin = [beta.clone(), alpha.clone()];
        let mut acc = Self::zero(self.n);
        for c in self.coeffs.iter().rev() {
            // Horner step: acc ← acc·(αx+β) + c
            let shifted = acc.mul_scalar_poly(&Self::scalar(lin.to_vec()));
            acc = shifted.add(&Self::constant(c.clone()))?;
        }
        Ok(acc)
    }

    /// Returns `x^D·F(1/x)`.
    pub fn reversal(&self, d: usize) -> Result<Self, PolyError> {
        match self.degree() {
            None => Ok(Self::zero(self.n)),
            Some(deg) if deg > d => Err(PolyError::ReversalDegree { d, degree: deg }),
            Some(_) => {
                let coeffs = (0..=d).map(|m| self.coeff(d - m)).collect();
                Ok(Self::normalized(self.n, coeffs))
            }
        }
    }

    /// Divides every entry by the scalar polynomial `c`; `None` unless `c`
    /// divides every entry exactly.
    pub fn divide_exact(&self, c: &ScalarPoly<T>) -> Option<Self> {
        let cc = c.scalar_coeffs();
        if cc.is_empty() {
            return None;
        }
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for j in 0..self.n {
                let (q, r) = upoly::divrem(&self.entry_coeffs(i, j), &cc)?;
                if !r.iter().all(|v| v.is_zero()) {
                    return None;
                }
                row.push(Self::scalar(q));
            }
            rows.push(row);
        }
        Self::from_entries(&rows).ok()
    }

    /// Scalar long division `self = q·d + r`.
    pub fn div_rem(&self, d: &ScalarPoly<T>) -> Option<(ScalarPoly<T>, ScalarPoly<T>)> {
        let (q, r) = upoly::divrem(&self.scalar_coeffs(), &d.scalar_coeffs())?;
        Some((Self::scalar(q), Self::scalar(r)))
    }

    /// Drops the first row and column.
    pub fn trailing_block(&self) -> Self {
        let n = self.n - 1;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Mat::from_fn(n, |i, j| c.get(i + 1, j + 1).clone()))
            .collect();
        Self::normalized(n, coeffs)
    }

    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MatrixPoly<U> {
        MatrixPoly::normalized(self.n, self.coeffs.iter().map(|c| c.map(&f)).collect())
    }

    pub fn to_float(&self) -> MatrixPoly<Complex64> {
        self.map_scalars(|v| v.to_c64())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.max_abs()).fold(0.0, f64::max)
    }
}

impl MatrixPoly<Complex64> {
    /// Coefficientwise max-norm of `self − o` (sizes must agree).
    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.sub(o).map(|d| d.max_abs_coeff()).unwrap_or(f64::INFINITY)
    }

    /// Strips trailing coefficients below `tol` in max-norm.
    pub fn trim(&self, tol: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.max_abs() <= tol) {
            coeffs.pop();
        }
        MatrixPoly { n: self.n, coeffs }
    }

    pub fn eval_real(&self, t: f64) -> nalgebra::DMatrix<Complex64> {
        self.evaluate(&Complex64::new(t, 0.0)).to_nalgebra()
    }
}
