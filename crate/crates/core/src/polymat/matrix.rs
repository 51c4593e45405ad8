use crate::scalar::Scalar;

/// Dense square matrix over a [`Scalar`] field, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, v: T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Mat { n, data }
    }

    /// Builds from rows; `None` when the rows do not form a square matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Mat {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix unit `E_kl` (zero-based indices).
    pub fn unit(n: usize, k: usize, l: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(k, l, T::one());
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, o: &Mat<T>) -> Mat<T> {
        debug_assert_eq!(self.n, o.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Mat<T>) -> Mat<T> {
        debug_assert_eq!(self.n, o.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, o: &Mat<T>) -> Mat<T> {
        debug_assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = std::mem::replace(&mut out.data[i * n + j], T::zero());
                    out.data[i * n + j] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|v| -v.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat<T> {
        Mat::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in i..self.n {
                let d = self.get(i, j).clone() - self.get(j, i).conj();
                if !d.negligible(tol) {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.to_c64().norm())
            .fold(0.0, f64::max)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<num_complex::Complex64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_c64())
    }
}
