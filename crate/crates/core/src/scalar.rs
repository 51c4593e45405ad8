//! Coefficient fields for matrix polynomials.
//!
//! Three fields are provided:
//!
//! * [`Cq`], Gaussian rationals `ℚ(i)`, used for exact identities;
//! * [`Qi2`], the quadratic extension `ℚ(i)(√2)`, needed by the pivot
//!   unitaries whose entries are `±1/√2`;
//! * [`Complex64`], used when interfacing with the numerical solver.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Gaussian rational `a + bi` with `a, b ∈ ℚ`.
pub type Cq = Complex<BigRational>;

/// Arithmetic mode carried by every polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    ExactSqrt2,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::ExactSqrt2 => "exact-sqrt2",
            Mode::Float => "float",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Mode::Float)
    }
}

/// A field with complex conjugation, closed under the operations the
/// polynomial code needs.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_cq(q: &Cq) -> Self;
    fn to_c64(&self) -> Complex64;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// True when the imaginary part vanishes (exactly in exact modes).
    fn is_real(&self) -> bool;

    fn imag_unit() -> Self {
        Self::from_cq(&Cq::new(BigRational::zero(), BigRational::one()))
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_cq(&Cq::new(r.clone(), BigRational::zero()))
    }

    /// Zero test that tolerates rounding in float mode; exact modes ignore `tol`.
    fn negligible(&self, tol: f64) -> bool {
        if Self::MODE.is_exact() {
            self.is_zero()
        } else {
            self.to_c64().norm() <= tol
        }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn cq(re: BigRational, im: BigRational) -> Cq {
    Cq::new(re, im)
}

pub fn cq_int(re: i64, im: i64) -> Cq {
    Cq::new(rat_int(re), rat_int(im))
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // to_f64 fails only on overflow of numerator or denominator
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Exact rational value of a finite double.
pub fn f64_to_rat(v: f64) -> Option<BigRational> {
    BigRational::from_float(v)
}

/// Closest rational with denominator at most `max_den` (continued fractions).
pub fn rationalize(v: f64, max_den: u64) -> Option<BigRational> {
    if !v.is_finite() {
        return None;
    }
    let exact = BigRational::from_float(v)?;
    let max_den = BigInt::from(max_den);
    let (mut p0, mut q0, mut p1, mut q1) = (
        BigInt::zero(),
        BigInt::one(),
        BigInt::one(),
        BigInt::zero(),
    );
    let mut x = exact.clone();
    loop {
        let a = x.floor().to_integer();
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = &x - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        x = frac.recip();
    }
    if q1.is_zero() {
        return Some(BigRational::from_integer(exact.round().to_integer()));
    }
    Some(BigRational::new(p1, q1))
}

impl Scalar for Cq {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn from_i64(v: i64) -> Self {
        cq_int(v, 0)
    }
    fn from_cq(q: &Cq) -> Self {
        q.clone()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(Complex::inv(self))
        }
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_cq(q: &Cq) -> Self {
        q.to_c64()
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(Complex::inv(self))
        }
    }
    fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

/// Element `a + b√2` of `ℚ(i)(√2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Qi2 {
    pub a: Cq,
    pub b: Cq,
}

impl Qi2 {
    pub fn new(a: Cq, b: Cq) -> Self {
        Qi2 { a, b }
    }

    /// `c/√2 = (c/2)·√2`
    pub fn over_sqrt2(c: Cq) -> Self {
        Qi2 {
            a: Zero::zero(),
            b: c * Cq::new(rat(1, 2), BigRational::zero()),
        }
    }

    /// Sign of a real element: `-1`, `0` or `1`.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        let a = &self.a.re;
        let b = &self.b.re;
        let sa = sign_of(a);
        let sb = sign_of(b);
        if sb == 0 {
            return Some(sa);
        }
        if sa == 0 || sa == sb {
            return Some(sb);
        }
        // opposite signs: compare a² with 2b²
        let a2 = a * a;
        let b2 = b * b * rat_int(2);
        Some(if a2 > b2 { sa } else { sb })
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for Qi2 {
    type Output = Qi2;
    fn add(self, o: Qi2) -> Qi2 {
        Qi2 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for Qi2 {
    type Output = Qi2;
    fn sub(self, o: Qi2) -> Qi2 {
        Qi2 {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for Qi2 {
    type Output = Qi2;
    fn mul(self, o: Qi2) -> Qi2 {
        let two = Cq::new(rat_int(2), BigRational::zero());
        Qi2 {
            a: self.a.clone() * o.a.clone() + two * self.b.clone() * o.b.clone(),
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl Neg for Qi2 {
    type Output = Qi2;
    fn neg(self) -> Qi2 {
        Qi2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Scalar for Qi2 {
    const MODE: Mode = Mode::ExactSqrt2;

    fn zero() -> Self {
        Qi2 {
            a: Zero::zero(),
            b: Zero::zero(),
        }
    }
    fn one() -> Self {
        Qi2 {
            a: One::one(),
            b: Zero::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn conj(&self) -> Self {
        Qi2 {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Qi2 {
            a: cq_int(v, 0),
            b: Zero::zero(),
        }
    }
    fn from_cq(q: &Cq) -> Self {
        Qi2 {
            a: q.clone(),
            b: Zero::zero(),
        }
    }
    fn to_c64(&self) -> Complex64 {
        self.a.to_c64() + self.b.to_c64() * std::f64::consts::SQRT_2
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        // (a + b√2)(a − b√2) = a² − 2b², nonzero because √2 ∉ ℚ(i)
        let two = Cq::new(rat_int(2), BigRational::zero());
        let norm = self.a.clone() * self.a.clone() - two * self.b.clone() * self.b.clone();
        let ninv = Complex::inv(&norm);
        Some(Qi2 {
            a: self.a.clone() * ninv.clone(),
            b: -(self.b.clone() * ninv),
        })
    }
    fn is_real(&self) -> bool {
        self.a.im.is_zero() && self.b.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qi2_inverse_roundtrip() {
        let x = Qi2::new(cq_int(3, 1), cq_int(-2, 5));
        let y = x.inv().unwrap();
        assert_eq!(x * y, Qi2::one());
        assert!(Qi2::zero().inv().is_none());
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = Qi2::new(Zero::zero(), cq_int(1, 0));
        assert_eq!(s.clone() * s, Qi2::from_i64(2));
        let h = Qi2::over_sqrt2(cq_int(1, 0));
        assert_eq!(h.clone() * h, Qi2::from_cq(&Cq::new(rat(1, 2), rat_int(0))));
    }

    #[test]
    fn qi2_real_sign() {
        // 3 − 2√2 ≈ 0.17 > 0
        let v = Qi2::new(cq_int(3, 0), cq_int(-2, 0));
        assert_eq!(v.real_sign(), Some(1));
        // 1 − √2 < 0
        let w = Qi2::new(cq_int(1, 0), cq_int(-1, 0));
        assert_eq!(w.real_sign(), Some(-1));
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        assert_eq!(rationalize(0.75, 100).unwrap(), rat(3, 4));
        assert_eq!(rationalize(-1.0 / 3.0, 1000).unwrap(), rat(-1, 3));
        assert_eq!(rationalize(2.0, 10).unwrap(), rat_int(2));
    }
}
