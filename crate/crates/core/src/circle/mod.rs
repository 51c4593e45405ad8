//! Transfer between the extended real line and the unit circle `𝕋`.
//!
//! The Möbius map `λ(x) = z₀(x − w₀)/(x − w̄₀)` sends `ℝ ∪ {∞}` onto `𝕋`
//! with `∞ ↦ z₀`. A matrix polynomial `F` of degree `d` becomes the
//! Laurent polynomial
//!
//! ```text
//! Λ(z) = ((z − z₀)*(z − z₀))^⌈d/2⌉ · F(λ⁻¹(z)),
//! ```
//!
//! which is Hermitian on `𝕋` whenever `F` is Hermitian on `ℝ`, and `F` is
//! recovered from `Λ` by `F(x) = ((x − w̄₀)(x − w₀)/(4 Im(w₀)²))^⌈d/2⌉ · Λ(λ(x))`.
//!
//! Certificate search on the circle goes back to the line through
//! [`line_description`] and the ordinary certsearch code path.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::json::{self as js, JsonError};
use crate::polymat::{LaurentMatrixPoly, MatrixPoly, PolyError, ScalarPoly};
use crate::scalar::{Cq, Scalar};
use crate::semialg::SemialgSet;

#[cfg(test)]
mod tests;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircleError {
    #[error("z0 must have modulus 1")]
    NotUnimodular,
    #[error("w0 must have nonzero imaginary part")]
    RealW0,
    #[error("Laurent polynomial is not in the image of the transform: {0}")]
    NotInImage(String),
    #[error("point {0} is not on the unit circle")]
    OffCircle(Complex64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Json(#[from] JsonError),
}

/// `λ_{z₀,w₀}`; `z₀` on the unit circle, `w₀` off the real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct MoebiusMap<T> {
    z0: T,
    w0: T,
}

impl<T: Scalar> MoebiusMap<T> {
    pub fn new(z0: T, w0: T) -> Result<Self, CircleError> {
        let modulus = z0.clone() * z0.conj() - T::one();
        if !modulus.negligible(1e-12) {
            return Err(CircleError::NotUnimodular);
        }
        if (w0.clone() - w0.conj()).negligible(1e-14) {
            return Err(CircleError::RealW0);
        }
        Ok(MoebiusMap { z0, w0 })
    }

    pub fn z0(&self) -> &T {
        &self.z0
    }

    pub fn w0(&self) -> &T {
        &self.w0
    }

    /// `4·Im(w₀)² = −(w₀ − w̄₀)²`
    fn four_im_sq(&self) -> T {
        let d = self.w0.clone() - self.w0.conj();
        -(d.clone() * d)
    }

    /// Whether `λ` runs counterclockwise as `x` increases (`Im w₀ > 0`).
    pub fn counterclockwise(&self) -> bool {
        self.w0.to_c64().im > 0.0
    }
}

impl Default for MoebiusMap<Cq> {
    /// `(z₀, w₀) = (1, i)`, giving the `(1 + x²)^k` denominators.
    fn default() -> Self {
        MoebiusMap {
            z0: Cq::from_i64(1),
            w0: <Cq as Scalar>::imag_unit(),
        }
    }
}

/// `λ(x)` for real `x`; `None` stands for `∞` and maps to `z₀`.
pub fn moebius_apply<T: Scalar>(m: &MoebiusMap<T>, x: Option<&T>) -> T {
    match x {
        None => m.z0.clone(),
        Some(x) => {
            let num = m.z0.clone() * (x.clone() - m.w0.clone());
            let den = x.clone() - m.w0.conj();
            num.div(&den).expect("w0 is not real")
        }
    }
}

/// `λ⁻¹(z) = (z·w̄₀ − z₀w₀)/(z − z₀)`; `None` when `z = z₀` (the point `∞`).
pub fn moebius_inverse<T: Scalar>(m: &MoebiusMap<T>, z: &T) -> Option<T> {
    let num = z.clone() * m.w0.conj() - m.z0.clone() * m.w0.clone();
    num.div(&(z.clone() - m.z0.clone()))
}

fn half_up(d: usize) -> usize {
    d.div_ceil(2)
}

/// `Λ_{z₀,w₀,F}`.
///
/// With `|z₀| = 1`, `(z − z₀)* = z⁻¹ − z̄₀ = −z̄₀ z⁻¹ (z − z₀)`, so
/// `Λ(z) = (−z̄₀)^N z^{−N} Σ_m F_m (z w̄₀ − z₀w₀)^m (z − z₀)^{2N−m}`.
pub fn lambda_transform<T: Scalar>(m: &MoebiusMap<T>, f: &MatrixPoly<T>) -> LaurentMatrixPoly<T> {
    let n = f.size();
    let Some(deg) = f.degree() else {
        return LaurentMatrixPoly::zero(n);
    };
    let big_n = half_up(deg);
    let num = ScalarPoly::scalar(vec![-(m.z0.clone() * m.w0.clone()), m.w0.conj()]);
    let den = ScalarPoly::scalar(vec![-m.z0.clone(), T::one()]);
    let mut acc = MatrixPoly::zero(n);
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = num.pow(k)
            .mul(&den.pow(2 * big_n - k))
            .expect("scalar");
        let term = MatrixPoly::constant(c.clone()).mul_scalar_poly(&w);
        acc = acc.add(&term).expect("same size");
    }
    let mut unit = T::one();
    for _ in 0..big_n {
        unit = unit * (-m.z0.conj());
    }
    LaurentMatrixPoly::from_poly(&acc.scale(&unit), -(big_n as i64))
}

/// Inverse of [`lambda_transform`] for polynomials of degree `deg_f`.
///
/// Each term `L_e z^e` with `|e| ≤ N` becomes
/// `L_e z₀^e (x − w₀)^{N+e} (x − w̄₀)^{N−e} / (4 Im(w₀)²)^N`.
pub fn lambda_recover<T: Scalar>(
    m: &MoebiusMap<T>,
    l: &LaurentMatrixPoly<T>,
    deg_f: usize,
) -> Result<MatrixPoly<T>, CircleError> {
    let n = l.size();
    let big_n = half_up(deg_f) as i64;
    let Some((lo, hi)) = l.exponent_range() else {
        return Ok(MatrixPoly::zero(n));
    };
    if lo < -big_n || hi > big_n {
        return Err(CircleError::NotInImage(format!(
            "exponents {lo}..={hi} exceed ±{big_n}"
        )));
    }
    let xm = ScalarPoly::scalar(vec![-m.w0.clone(), T::one()]);
    let xc = ScalarPoly::scalar(vec![-m.w0.conj(), T::one()]);
    let z0inv = m.z0.conj();
    let mut acc = MatrixPoly::zero(n);
    for (e, c) in l.terms() {
        let mut unit = T::one();
        let base = if e >= 0 { m.z0.clone() } else { z0inv.clone() };
        for _ in 0..e.unsigned_abs() {
            unit = unit * base.clone();
        }
        let w = xm
            .pow((big_n + e) as usize)
            .mul(&xc.pow((big_n - e) as usize))
            .expect("scalar");
        acc = acc.add(&MatrixPoly::constant(c.scale(&unit)).mul_scalar_poly(&w))?;
    }
    let mut denom = T::one();
    for _ in 0..big_n {
        denom = denom * m.four_im_sq();
    }
    let out = acc.scale(&denom.inv().expect("Im w0 ≠ 0"));
    // an odd declared degree must leave the top coefficient empty
    let scale = out.max_abs_coeff().max(1.0);
    let mut coeffs = out.coeffs().to_vec();
    while coeffs
        .last()
        .is_some_and(|c| c.entries().iter().all(|v| v.negligible(1e-12 * scale)))
    {
        coeffs.pop();
    }
    let trimmed = MatrixPoly::from_coeffs(n, coeffs)?;
    match trimmed.degree() {
        Some(d) if d > deg_f => Err(CircleError::NotInImage(format!(
            "recovered degree {d} exceeds {deg_f}"
        ))),
        _ => Ok(trimmed),
    }
}

/// Applies [`lambda_transform`] to every generator of a line description.
pub fn transfer_description<T: Scalar>(m: &MoebiusMap<T>, s: &[ScalarPoly<T>]) -> Vec<LaurentMatrixPoly<T>> {
    s.iter().map(|g| lambda_transform(m, g)).collect()
}

/// Pulls circle generators back to line polynomials `(|x−w₀|²/4Im²)^N b(λ(x))`
/// with `N` the largest exponent modulus. Signs on `ℝ` match signs on
/// `𝕋 ∖ {z₀}`, which lets ℳⁿ_𝒮 questions run through certsearch.
pub fn line_description<T: Scalar>(
    m: &MoebiusMap<T>,
    s: &[LaurentMatrixPoly<T>],
) -> Result<Vec<ScalarPoly<T>>, CircleError> {
    s.iter()
        .map(|b| {
            let reach = b
                .exponent_range()
                .map(|(lo, hi)| lo.unsigned_abs().max(hi.unsigned_abs()))
                .unwrap_or(0) as usize;
            lambda_recover(m, b, 2 * reach)
        })
        .collect()
}

/// An angle `θ = t·π`, kept exactly when it came from a rational.
#[derive(Debug, Clone, PartialEq)]
pub struct Angle {
    turns_pi: f64,
    exact: Option<BigRational>,
}

impl Angle {
    pub fn exact(r: BigRational) -> Self {
        Angle {
            turns_pi: r.to_f64().unwrap_or(f64::NAN),
            exact: Some(r),
        }
    }

    /// From radians; snapped to an exact multiple of `π/2` when within 1e-14.
    pub fn from_radians(theta: f64) -> Self {
        let t = theta / PI;
        let q = (2.0 * t).round();
        if (2.0 * t - q).abs() < 1e-14 {
            Angle::exact(BigRational::new((q as i64).into(), 2.into()))
        } else {
            Angle {
                turns_pi: t,
                exact: None,
            }
        }
    }

    /// Multiple of `π`.
    pub fn pi_multiple(&self) -> f64 {
        self.turns_pi
    }

    pub fn radians(&self) -> f64 {
        self.turns_pi * PI
    }

    pub fn point(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.radians())
    }

    /// `e^{iθ}` as a Gaussian rational when `θ` is a multiple of `π/2`.
    pub fn exact_point(&self) -> Option<Cq> {
        let r = self.exact.as_ref()?;
        let two_r = r * BigRational::from_integer(2.into());
        if !two_r.is_integer() {
            return None;
        }
        let k = (two_r.to_integer() % 4i32 + 4i32) % 4i32;
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::zero();
        Some(match k.to_i32().unwrap_or(0) {
            0 => Cq::new(one, zero),
            1 => Cq::new(zero, one),
            2 => Cq::new(-one, zero),
            _ => Cq::new(zero, -one),
        })
    }

    pub fn to_json(&self) -> Value {
        let body = match &self.exact {
            Some(r) => js::rational_to_string(r),
            None => format!("{}", self.turns_pi),
        };
        Value::String(format!("{body}·π"))
    }

    /// Accepts `"p/q·π"`, `"p/q*pi"`, `"pπ"`, `"π"`, `"-π"` and `"0"`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let stripped = ["·π", "*π", "π", "*pi", "pi"]
            .iter()
            .find_map(|suf| s.strip_suffix(suf));
        match stripped {
            Some(head) => {
                let head = head.trim();
                let r = match head {
                    "" | "+" => BigRational::from_integer(1.into()),
                    "-" => BigRational::from_integer((-1).into()),
                    h => js::parse_rational(h)?,
                };
                Some(Angle::exact(r))
            }
            None => {
                let r = js::parse_rational(s)?;
                r.is_zero().then(|| Angle::exact(r))
            }
        }
    }

    fn from_json(v: &Value, path: &str) -> Result<Self, JsonError> {
        let s = js::as_str(v, path)?;
        Angle::parse(s).ok_or_else(|| JsonError::new(path, format!("not an angle: {s:?}")))
    }

    fn shifted(&self, by_pi: i64) -> Angle {
        Angle {
            turns_pi: self.turns_pi + by_pi as f64,
            exact: self
                .exact
                .as_ref()
                .map(|r| r + BigRational::from_integer(by_pi.into())),
        }
    }

    fn normalized(&self) -> Angle {
        let k = (self.turns_pi / 2.0).floor() as i64;
        self.shifted(-2 * k)
    }
}

/// A counterclockwise arc from `from` to `to`; `to − from` lies in `(0, 2π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub from: Angle,
    pub to: Angle,
}

impl Arc {
    pub fn new(from: Angle, to: Angle) -> Self {
        let from = from.normalized();
        let mut to = to;
        while to.turns_pi <= from.turns_pi + 1e-14 {
            to = to.shifted(2);
        }
        while to.turns_pi > from.turns_pi + 2.0 + 1e-14 {
            to = to.shifted(-2);
        }
        Arc { from, to }
    }

    pub fn full() -> Self {
        Arc {
            from: Angle::exact(BigRational::zero()),
            to: Angle::exact(BigRational::from_integer(2.into())),
        }
    }

    pub fn is_full(&self) -> bool {
        self.to.turns_pi - self.from.turns_pi >= 2.0 - 1e-14
    }

    /// Whether `θ` (radians) lies in the arc, within `tol` radians.
    pub fn contains(&self, theta: f64, tol: f64) -> bool {
        if self.is_full() {
            return true;
        }
        let a = self.from.radians();
        let len = self.to.radians() - a;
        let rel = (theta - a).rem_euclid(2.0 * PI);
        rel <= len + tol || rel >= 2.0 * PI - tol
    }
}

/// A closed subset of `𝕋`: finitely many arcs and isolated points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CircleSet {
    arcs: Vec<Arc>,
    points: Vec<Angle>,
}

const ANGLE_TOL: f64 = 1e-12;

fn same_angle(a: &Angle, b: &Angle) -> bool {
    match (&a.exact, &b.exact) {
        (Some(x), Some(y)) => {
            let d = x - y;
            let half = d / BigRational::from_integer(2.into());
            half.is_integer()
        }
        _ => {
            let d = (a.radians() - b.radians()).rem_euclid(2.0 * PI);
            d < ANGLE_TOL || d > 2.0 * PI - ANGLE_TOL
        }
    }
}

impl CircleSet {
    /// Arcs sharing an endpoint are merged; points covered by an arc are
    /// dropped.
    pub fn new(arcs: Vec<Arc>, points: Vec<Angle>) -> Self {
        let mut arcs = arcs;
        if arcs.iter().any(Arc::is_full) {
            arcs = vec![Arc::full()];
        }
        while let Some((i, j)) = (0..arcs.len())
            .flat_map(|i| (0..arcs.len()).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && same_angle(&arcs[i].to, &arcs[j].from))
        {
            let (ai, aj) = (arcs[i].clone(), arcs[j].clone());
            let len_j = aj.to.turns_pi - aj.from.turns_pi;
            let joined = if ai.to.turns_pi - ai.from.turns_pi + len_j >= 2.0 - 1e-14 {
                Arc::full()
            } else {
                let exact = match (&ai.to.exact, &aj.to.exact, &aj.from.exact) {
                    (Some(a), Some(b), Some(c)) => Some(a + (b - c)),
                    _ => None,
                };
                Arc {
                    from: ai.from,
                    to: Angle {
                        turns_pi: ai.to.turns_pi + len_j,
                        exact,
                    },
                }
            };
            arcs.remove(i.max(j));
            arcs.remove(i.min(j));
            arcs.push(joined);
        }
        if arcs.iter().any(Arc::is_full) {
            arcs = vec![Arc::full()];
        }
        let mut kept: Vec<Angle> = Vec::new();
        for p in points {
            let p = p.normalized();
            let covered = arcs.iter().any(|a| a.contains(p.radians(), ANGLE_TOL));
            if !covered && !kept.iter().any(|q| same_angle(q, &p)) {
                kept.push(p);
            }
        }
        CircleSet { arcs, points: kept }
    }

    pub fn whole() -> Self {
        CircleSet::new(vec![Arc::full()], vec![])
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn points(&self) -> &[Angle] {
        &self.points
    }

    /// Endpoints of proper arcs: the boundary points that are not isolated.
    pub fn arc_endpoints(&self) -> Vec<Angle> {
        let mut out: Vec<Angle> = Vec::new();
        for a in self.arcs.iter().filter(|a| !a.is_full()) {
            for e in [&a.from, &a.to] {
                if !out.iter().any(|q| same_angle(q, e)) {
                    out.push(e.normalized());
                }
            }
        }
        out
    }

    /// `λ(K)`, closed in `𝕋`: unbounded pieces meet at `z₀`.
    pub fn from_line_set<T: Scalar>(m: &MoebiusMap<T>, k: &SemialgSet) -> Self {
        let angle_of = |x: Option<&BigRational>| {
            let z = match x {
                Some(r) => moebius_apply(m, Some(&T::from_rational(r))),
                None => m.z0.clone(),
            };
            Angle::from_radians(z.to_c64().arg())
        };
        let ccw = m.counterclockwise();
        let mut arcs = Vec::new();
        let mut points = Vec::new();
        for p in k.pieces() {
            let (lo, hi) = (p.lower(), p.upper());
            if lo.is_none() && hi.is_none() {
                arcs.push(Arc::full());
                continue;
            }
            if lo.is_some() && lo == hi {
                points.push(angle_of(lo));
                continue;
            }
            let (a, b) = (angle_of(lo), angle_of(hi));
            arcs.push(if ccw { Arc::new(a, b) } else { Arc::new(b, a) });
        }
        CircleSet::new(arcs, points)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "arcs": self.arcs.iter().map(|a| json!({
                "from_angle": a.from.to_json(),
                "to_angle": a.to.to_json(),
            })).collect::<Vec<_>>(),
            "points": self.points.iter().map(Angle::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let mut arcs = Vec::new();
        if let Some(list) = v.get("arcs") {
            for (i, a) in js::as_array(list, "arcs")?.iter().enumerate() {
                let p = js::index("arcs", i);
                let from = Angle::from_json(js::field(a, "from_angle", &p)?, &js::join(&p, "from_angle"))?;
                let to = Angle::from_json(js::field(a, "to_angle", &p)?, &js::join(&p, "to_angle"))?;
                arcs.push(Arc::new(from, to));
            }
        }
        let mut points = Vec::new();
        if let Some(list) = v.get("points") {
            for (i, a) in js::as_array(list, "points")?.iter().enumerate() {
                points.push(Angle::from_json(a, &js::index("points", i))?);
            }
        }
        Ok(CircleSet::new(arcs, points))
    }
}

/// Outcome of the boundary conditions at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCheck {
    pub angle: Angle,
    pub isolated: bool,
    pub ok: bool,
    /// Generators (0-based) that witness the condition.
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescriptionCheck {
    pub points: Vec<PointCheck>,
}

impl DescriptionCheck {
    pub fn holds(&self) -> bool {
        self.points.iter().all(|p| p.ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "points": self.points.iter().map(|p| json!({
                "angle": p.angle.to_json(),
                "isolated": p.isolated,
                "ok": p.ok,
                "witnesses": p.witnesses,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Relative tolerance for "vanishes" and "is nonzero".
pub const CHECK_TOL: f64 = 1e-9;
/// Angular radius of the sampled neighbourhood in condition (b).
pub const NEIGHBOURHOOD: f64 = 1e-3;
/// Samples per isolated point.
pub const NEIGHBOURHOOD_SAMPLES: usize = 16;

struct Gen {
    b: LaurentMatrixPoly<Complex64>,
    db: LaurentMatrixPoly<Complex64>,
    scale: f64,
}

impl Gen {
    fn value(&self, z: Complex64) -> Complex64 {
        *self.b.evaluate(&z).expect("z on 𝕋").get(0, 0)
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        *self.db.evaluate(&z).expect("z on 𝕋").get(0, 0)
    }

    fn vanishes(&self, z: Complex64) -> bool {
        self.value(z).norm() <= CHECK_TOL * self.scale
    }

    fn simple(&self, z: Complex64) -> bool {
        self.derivative(z).norm() > CHECK_TOL * self.scale
    }

    /// `d/dh b(z e^{ih})` at `h = 0`, real for Hermitian `b`.
    fn angular_slope(&self, z: Complex64) -> f64 {
        (Complex64::i() * z * self.derivative(z)).re
    }
}

fn prepare<T: Scalar>(s: &[LaurentMatrixPoly<T>]) -> Result<Vec<Gen>, CircleError> {
    s.iter()
        .map(|b| {
            if b.size() != 1 {
                return Err(CircleError::Poly(PolyError::NotScalar(b.size())));
            }
            let b = b.to_float();
            let db = b.derivative();
            let scale = b.max_abs_coeff().max(f64::MIN_POSITIVE);
            Ok(Gen { b, db, scale })
        })
        .collect()
}

fn on_circle(z: Complex64) -> Result<(), CircleError> {
    if (z.norm() - 1.0).abs() > 1e-12 {
        return Err(CircleError::OffCircle(z));
    }
    Ok(())
}

/// Condition (a) at `z`: some `b_k` has a simple zero there.
pub fn condition_a<T: Scalar>(s: &[LaurentMatrixPoly<T>], z: Complex64) -> Result<Option<usize>, CircleError> {
    on_circle(z)?;
    let gens = prepare(s)?;
    Ok(gens.iter().position(|g| g.vanishes(z) && g.simple(z)))
}

/// Condition (b) at `z`: two generators with simple zeros whose product is
/// `≤ 0` nearby. The sign is read from the first-order terms and confirmed
/// on [`NEIGHBOURHOOD_SAMPLES`] points within [`NEIGHBOURHOOD`] radians.
pub fn condition_b<T: Scalar>(
    s: &[LaurentMatrixPoly<T>],
    z: Complex64,
) -> Result<Option<(usize, usize)>, CircleError> {
    on_circle(z)?;
    let gens = prepare(s)?;
    let simple: Vec<usize> = (0..gens.len())
        .filter(|&k| gens[k].vanishes(z) && gens[k].simple(z))
        .collect();
    for (i, &k) in simple.iter().enumerate() {
        for &l in &simple[i + 1..] {
            let (gk, gl) = (&gens[k], &gens[l]);
            if gk.angular_slope(z) * gl.angular_slope(z) >= 0.0 {
                continue;
            }
            let half = NEIGHBOURHOOD_SAMPLES / 2;
            let sampled_ok = (1..=half).flat_map(|j| [j as f64, -(j as f64)]).all(|j| {
                let h = j * NEIGHBOURHOOD / half as f64;
                let w = z * Complex64::from_polar(1.0, h);
                let prod = gk.value(w).re * gl.value(w).re;
                prod <= CHECK_TOL * gk.scale * gl.scale * NEIGHBOURHOOD * NEIGHBOURHOOD
            });
            if sampled_ok {
                return Ok(Some((k, l)));
            }
        }
    }
    Ok(None)
}

/// Boundary conditions (a) and (b) at every endpoint and isolated point of `𝒦`.
pub fn circle_description_report<T: Scalar>(
    s: &[LaurentMatrixPoly<T>],
    set: &CircleSet,
) -> Result<DescriptionCheck, CircleError> {
    let mut out = Vec::new();
    for a in set.arc_endpoints() {
        let w = condition_a(s, a.point())?;
        out.push(PointCheck {
            angle: a,
            isolated: false,
            ok: w.is_some(),
            witnesses: w.into_iter().collect(),
        });
    }
    for a in set.points() {
        let w = condition_b(s, a.point())?;
        out.push(PointCheck {
            angle: a.clone(),
            isolated: true,
            ok: w.is_some(),
            witnesses: w.map(|(k, l)| vec![k, l]).unwrap_or_default(),
        });
    }
    Ok(DescriptionCheck { points: out })
}

pub fn circle_description_check<T: Scalar>(
    s: &[LaurentMatrixPoly<T>],
    set: &CircleSet,
) -> Result<bool, CircleError> {
    circle_description_report(s, set).map(|r| r.holds())
}

/// Smallest eigenvalue of `Λ(λ(t))`, used for sampled positivity transfer.
pub fn transferred_min_eigenvalue(m: &MoebiusMap<Complex64>, l: &LaurentMatrixPoly<Complex64>, t: f64) -> f64 {
    let z = moebius_apply(m, Some(&Complex64::new(t, 0.0)));
    let v = l.evaluate(&z).expect("λ(t) ≠ 0");
    let h = v.to_nalgebra();
    let herm = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
    herm.symmetric_eigenvalues()
        .iter()
        .fold(f64::INFINITY, |a, &b| a.min(b))
}

/// Float copy of an exact map.
pub fn map_to_float(m: &MoebiusMap<Cq>) -> MoebiusMap<Complex64> {
    MoebiusMap {
        z0: m.z0.to_c64(),
        w0: m.w0.to_c64(),
    }
}
