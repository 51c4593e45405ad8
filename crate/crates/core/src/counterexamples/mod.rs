//! The 2×2 family `F_k`, which is PSD on sets like `[x1,x2] ∪ [x3,∞)` yet
//! not in the natural preordering, and the factorization for two unbounded
//! intervals.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::certsearch::{
    check_membership, fejer_riesz_half, CertError, Kind, MembershipReport, MembershipStatus, TruncatedPreordering,
};
use crate::json::rational_to_string;
use crate::polymat::{MatrixPoly, PolyError, ScalarPoly};
use crate::scalar::{rat_to_f64, Cq, Scalar};
use crate::semialg::{Description, Piece, SemialgSet};

/// Significant digits of `D` when `D²` is not a rational square.
pub const DEFAULT_DIGITS: u32 = 30;

#[derive(Debug, Error)]
pub enum CounterexampleError {
    #[error("expected x1 < x2 < x3")]
    Ordering,
    #[error("conditions fail: k > 0 is {c31}, D² > 0 is {c32}, vertex value > 0 is {c33}")]
    Conditions { c31: bool, c32: bool, c33: bool },
    #[error("set has the wrong shape: {0}")]
    Shape(String),
    #[error("two-interval endpoints must satisfy a < b")]
    Endpoints,
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("membership undecided at degree {d}: {message}")]
    Unknown { d: usize, message: String },
    #[error("decomposition residual {0:e} exceeds tolerance")]
    Unverified(f64),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn r2s(r: &BigRational) -> String {
    rational_to_string(r)
}

fn real(r: &BigRational) -> Cq {
    Cq::new(r.clone(), BigRational::zero())
}

/// `c0 + c1·x` with rational coefficients.
fn linear(c0: &BigRational, c1: &BigRational) -> ScalarPoly<Cq> {
    ScalarPoly::scalar(vec![real(c0), real(c1)])
}

fn eval_rat(p: &ScalarPoly<Cq>, x: &BigRational) -> BigRational {
    p.evaluate(&real(x)).get(0, 0).re.clone()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FkConditions {
    /// `k > 0`
    pub c31: bool,
    /// `D(k)² > 0`
    pub c32: bool,
    /// `¾k² + k(−x1 + (x2+x3)/2) − ((x2−x3)/2)² > 0`
    pub c33: bool,
    pub k: BigRational,
    pub dsq: BigRational,
    pub c33_value: BigRational,
}

impl FkConditions {
    pub fn all(&self) -> bool {
        self.c31 && self.c32 && self.c33
    }

    pub fn to_json(&self) -> Value {
        json!({
            "c31": self.c31,
            "c32": self.c32,
            "c33": self.c33,
            "values": {"k": r2s(&self.k), "Dsq": r2s(&self.dsq), "c33": r2s(&self.c33_value)},
        })
    }
}

fn dsq_of(x1: &BigRational, x2: &BigRational, x3: &BigRational, k: &BigRational) -> BigRational {
    let a = k - x1;
    let c = k * k + k * (-x1 + x2 + x3) + x2 * x3;
    a * c + x1 * x2 * x3
}

fn c33_of(x1: &BigRational, x2: &BigRational, x3: &BigRational, k: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let half_gap = (x2 - x3) / &two;
    BigRational::new(3.into(), 4.into()) * k * k + k * (-x1 + (x2 + x3) / &two) - &half_gap * &half_gap
}

pub fn fk_conditions(
    x1: &BigRational,
    x2: &BigRational,
    x3: &BigRational,
    k: &BigRational,
) -> Result<FkConditions, CounterexampleError> {
    if !(x1 < x2 && x2 < x3) {
        return Err(CounterexampleError::Ordering);
    }
    let dsq = dsq_of(x1, x2, x3, k);
    let c33_value = c33_of(x1, x2, x3, k);
    Ok(FkConditions {
        c31: k.is_positive(),
        c32: dsq.is_positive(),
        c33: c33_value.is_positive(),
        k: k.clone(),
        dsq,
        c33_value,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FkInstance {
    pub x1: BigRational,
    pub x2: BigRational,
    pub x3: BigRational,
    pub k: BigRational,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub dsq: BigRational,
    /// `√Dsq`, exact when `exact`, otherwise a decimal rational with at least
    /// `digits` significant digits and `|d² − Dsq| ≤ 10^−digits`.
    pub d: BigRational,
    pub exact: bool,
    pub digits: u32,
    pub f: MatrixPoly<Cq>,
}

/// `√r` when `r` is the square of a rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Decimal approximation of `√r` (`r > 0`) with at least `digits`
/// significant digits and `|s² − r| ≤ 10^−digits`.
pub fn approx_sqrt(r: &BigRational, digits: u32) -> BigRational {
    let ten = BigInt::from(10);
    let floor_sig = ten.pow(digits);
    let tol = BigRational::new(BigInt::one(), floor_sig.clone());
    let prod = r.numer() * r.denom();
    let mut m = digits;
    loop {
        let scale = ten.pow(m);
        let root = (&prod * &scale * &scale).sqrt();
        let s = BigRational::new(root.clone(), r.denom() * &scale);
        if root >= floor_sig && (&s * &s - r).abs() <= tol {
            return s;
        }
        m += 4;
    }
}

pub fn fk_build(
    x1: &BigRational,
    x2: &BigRational,
    x3: &BigRational,
    k: &BigRational,
) -> Result<FkInstance, CounterexampleError> {
    fk_build_with(x1, x2, x3, k, DEFAULT_DIGITS)
}

pub fn fk_build_with(
    x1: &BigRational,
    x2: &BigRational,
    x3: &BigRational,
    k: &BigRational,
    digits: u32,
) -> Result<FkInstance, CounterexampleError> {
    let cond = fk_conditions(x1, x2, x3, k)?;
    if !cond.all() {
        return Err(CounterexampleError::Conditions {
            c31: cond.c31,
            c32: cond.c32,
            c33: cond.c33,
        });
    }
    let a = k - x1;
    let b = -k - x2 - x3;
    let c = k * k + k * (-x1 + x2 + x3) + x2 * x3;
    let dsq = cond.dsq;
    let (d, exact) = match rational_sqrt(&dsq) {
        Some(d) => (d, true),
        None => (approx_sqrt(&dsq, digits), false),
    };
    let one = BigRational::one();
    let dp = ScalarPoly::scalar(vec![real(&d)]);
    let f = MatrixPoly::from_entries(&[
        vec![linear(&a, &one), dp.clone()],
        vec![dp, ScalarPoly::scalar(vec![real(&c), real(&b), real(&one)])],
    ])?;
    Ok(FkInstance {
        x1: x1.clone(),
        x2: x2.clone(),
        x3: x3.clone(),
        k: k.clone(),
        a,
        b,
        c,
        dsq,
        d,
        exact,
        digits,
        f,
    })
}

impl FkInstance {
    /// `p_k(x) = x² + Bx + C`, the bottom-right entry.
    pub fn p_k(&self) -> ScalarPoly<Cq> {
        ScalarPoly::scalar(vec![real(&self.c), real(&self.b), Cq::from_i64(1)])
    }

    /// `(x − x1)(x − x2)(x − x3)`
    pub fn cubic(&self) -> ScalarPoly<Cq> {
        ScalarPoly::from_roots(&[real(&self.x1), real(&self.x2), real(&self.x3)])
    }

    /// `det F_k(x)` with the exact `Dsq`, independent of how `D` is stored.
    pub fn det_exact(&self) -> ScalarPoly<Cq> {
        let one = BigRational::one();
        let top = linear(&self.a, &one);
        top.mul(&self.p_k())
            .and_then(|p| p.sub(&ScalarPoly::scalar(vec![real(&self.dsq)])))
            .expect("scalar arithmetic")
    }

    pub fn det_at(&self, x: &BigRational) -> BigRational {
        eval_rat(&self.det_exact(), x)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "x1": r2s(&self.x1),
            "x2": r2s(&self.x2),
            "x3": r2s(&self.x3),
            "k": r2s(&self.k),
            "A": r2s(&self.a),
            "B": r2s(&self.b),
            "C": r2s(&self.c),
            "Dsq": r2s(&self.dsq),
            "D": r2s(&self.d),
            "D_exact": self.exact,
            "digits": if self.exact { Value::Null } else { json!(self.digits) },
            "F": self.f.to_json(),
        })
    }
}

/// Largest coefficient of `det F − (x−x1)(x−x2)(x−x3)` for the stored `F`.
/// Zero exactly when `D` is exact.
pub fn det_residual(inst: &FkInstance) -> BigRational {
    let det = inst.f.determinant().expect("2×2 determinant");
    let diff = det.sub(&inst.cubic()).expect("scalar");
    diff.scalar_coeffs()
        .iter()
        .map(|c| c.re.abs() + c.im.abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}

/// Scans `k = p/q` with `1 ≤ q ≤ bound`, `1 ≤ p ≤ bound·q` in order of
/// increasing `q` then `p`, returning the first valid `k` with `Dsq` a
/// rational square.
pub fn find_square_k(x1: &BigRational, x2: &BigRational, x3: &BigRational, bound: i64) -> Option<BigRational> {
    for q in 1..=bound {
        for p in 1..=bound * q {
            let k = BigRational::new(p.into(), q.into());
            if k.denom() != &BigInt::from(q) {
                continue;
            }
            let Ok(cond) = fk_conditions(x1, x2, x3, &k) else { return None };
            if cond.all() && rational_sqrt(&cond.dsq).is_some() {
                return Some(k);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fact {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    /// `(x, value)` pairs evaluated for the report.
    pub points: Vec<(f64, f64)>,
}

impl Fact {
    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "detail": self.detail,
            "points": self.points.iter().map(|(x, v)| json!([x, v])).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsdReport {
    pub facts: Vec<Fact>,
    /// Vertex `−B/2` of `p_k` and the exact value there.
    pub vertex: (BigRational, BigRational),
}

impl PsdReport {
    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "all_pass": self.all_pass(),
            "vertex": {"x": r2s(&self.vertex.0), "value": r2s(&self.vertex.1)},
            "facts": self.facts.iter().map(Fact::to_json).collect::<Vec<_>>(),
        })
    }
}

fn min_eig(m: &DMatrix<Complex64>) -> f64 {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    SymmetricEigen::new(h).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Checks the principal-minor facts behind `F_k ⪰ 0` on `K`.
pub fn fk_psd_report(inst: &FkInstance, k: &SemialgSet) -> PsdReport {
    let samples = k.sample_points(5);
    let ff = inst.f.to_float();
    let mut facts = Vec::new();

    let threshold = &inst.x1 - &inst.k;
    let top_ok = k.least().is_some_and(|l| *l >= threshold);
    facts.push(Fact {
        name: "top_left",
        pass: top_ok,
        detail: format!("x + A ≥ 0 for x ≥ {}; least element of K is {}",
            r2s(&threshold),
            k.least().map_or("-inf".to_string(), r2s)),
        points: samples.iter().map(|&x| (x, x + rat_to_f64(&inst.a))).collect(),
    });

    let two = BigRational::from_integer(2.into());
    let vx = -&inst.b / &two;
    let vv = eval_rat(&inst.p_k(), &vx);
    let c33 = c33_of(&inst.x1, &inst.x2, &inst.x3, &inst.k);
    facts.push(Fact {
        name: "bottom_right",
        pass: vv.is_positive() && vv == c33,
        detail: format!("p_k has its minimum {} at x = {}", r2s(&vv), r2s(&vx)),
        points: vec![(rat_to_f64(&vx), rat_to_f64(&vv))],
    });

    let det_ok = !k.is_empty()
        && k.pieces().iter().all(|p| {
            let left = p.lower().is_some_and(|l| *l >= inst.x1) && p.upper().is_some_and(|h| *h <= inst.x2);
            let right = p.lower().is_some_and(|l| *l >= inst.x3);
            left || right
        });
    let det = inst.det_exact().to_float();
    facts.push(Fact {
        name: "determinant",
        pass: det_ok,
        detail: "det F_k = (x−x1)(x−x2)(x−x3) and K ⊆ [x1,x2] ∪ [x3,∞)".to_string(),
        points: samples.iter().map(|&x| (x, det.eval_real(x)[(0, 0)].re)).collect(),
    });

    let scale = ff.max_abs_coeff().max(1.0);
    let eigs: Vec<(f64, f64)> = samples.iter().map(|&x| (x, min_eig(&ff.eval_real(x)))).collect();
    facts.push(Fact {
        name: "sampled_eigenvalues",
        pass: eigs.iter().all(|&(x, e)| e >= -1e-12 * scale * (1.0 + x.abs()).powi(2)),
        detail: "smallest eigenvalue of F_k at sample points of K".to_string(),
        points: eigs,
    });

    PsdReport {
        facts,
        vertex: (vx, vv),
    }
}

/// `q(x) = (x−x2)(x−x3)(x(1−k0) − (x1 − x1·k0 + k·k0))`
pub fn claim1_q(inst: &FkInstance, k0: &BigRational) -> ScalarPoly<Cq> {
    let one = BigRational::one();
    let lin = linear(&-(&inst.x1 - &inst.x1 * k0 + &inst.k * k0), &(&one - k0));
    ScalarPoly::from_roots(&[real(&inst.x2), real(&inst.x3)])
        .mul(&lin)
        .expect("scalar")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim1Report {
    /// For `k0 = 0`: a point of `(x2, x3)` and `q` there.
    pub k0_zero: (BigRational, BigRational),
    /// `(k0, q(x1))` over the grid in `(0, 1]`.
    pub grid: Vec<(BigRational, BigRational)>,
    /// `q = det(F_k − diag(0, k0)(x−x2)(x−x3))` held for every `k0` checked.
    pub identity_ok: bool,
    pub refuted: bool,
}

impl Claim1Report {
    pub fn to_json(&self) -> Value {
        json!({
            "refuted": self.refuted,
            "identity_ok": self.identity_ok,
            "k0_zero": {"x": r2s(&self.k0_zero.0), "q": r2s(&self.k0_zero.1)},
            "grid": self.grid.iter().map(|(k0, q)| json!({"k0": r2s(k0), "q_x1": r2s(q)})).collect::<Vec<_>>(),
        })
    }
}

/// `[x1,x2] ∪ ⋃[x_{2j+1},x_{2j+2}] ∪ [x_{2m+3},∞)` with the first two
/// endpoints of `F_k` and the third starting the second piece.
fn check_claim1_shape(inst: &FkInstance, k1: &SemialgSet) -> Result<(), CounterexampleError> {
    let pieces = k1.pieces();
    if pieces.len() < 2 {
        return Err(CounterexampleError::Shape("need at least two pieces".into()));
    }
    if pieces[0] != Piece::interval(inst.x1.clone(), inst.x2.clone()) {
        return Err(CounterexampleError::Shape("first piece must be [x1, x2]".into()));
    }
    if pieces[1].lower() != Some(&inst.x3) {
        return Err(CounterexampleError::Shape("second piece must start at x3".into()));
    }
    let last = pieces.last().expect("nonempty");
    if last.upper().is_some() || matches!(last, Piece::Point(_)) {
        return Err(CounterexampleError::Shape("last piece must be unbounded above".into()));
    }
    Ok(())
}

/// Sign facts refuting `F_k ∈ T_{S1}` for `σ2 = diag(0, k0)`, `k0 = 0` and
/// `k0 = j/grid` for `j = 1..=grid`.
pub fn fk_refute_claim1(inst: &FkInstance, k1: &SemialgSet, grid: usize) -> Result<Claim1Report, CounterexampleError> {
    check_claim1_shape(inst, k1)?;
    let g2 = ScalarPoly::from_roots(&[real(&inst.x2), real(&inst.x3)]);
    let top = linear(&inst.a, &BigRational::one());
    let identity = |k0: &BigRational| {
        // (x + A)(p_k − k0·g2) − Dsq
        let br = inst.p_k().sub(&g2.scale(&real(k0))).expect("scalar");
        let det = top.mul(&br).and_then(|p| p.sub(&ScalarPoly::scalar(vec![real(&inst.dsq)]))).expect("scalar");
        det == claim1_q(inst, k0)
    };
    let zero = BigRational::zero();
    let mid = (&inst.x2 + &inst.x3) / BigRational::from_integer(2.into());
    let q0 = eval_rat(&claim1_q(inst, &zero), &mid);
    let mut identity_ok = identity(&zero);
    let mut refuted = q0.is_negative();
    let mut rows = Vec::new();
    for j in 1..=grid.max(1) {
        let k0 = BigRational::new((j as i64).into(), (grid.max(1) as i64).into());
        let v = eval_rat(&claim1_q(inst, &k0), &inst.x1);
        identity_ok &= identity(&k0);
        refuted &= v.is_negative();
        rows.push((k0, v));
    }
    Ok(Claim1Report {
        k0_zero: (mid, q0),
        grid: rows,
        identity_ok,
        refuted: refuted && identity_ok,
    })
}

#[derive(Debug, Clone)]
pub struct Claim2Report {
    pub membership: MembershipReport,
    /// True only for a verified infeasibility witness.
    pub confirmed: bool,
}

impl Claim2Report {
    pub fn to_json(&self) -> Value {
        json!({"confirmed": self.confirmed, "membership": self.membership.to_json()})
    }
}

/// Membership of `f` in the degree-2 truncated preordering of `S2`.
pub fn claim2_membership<T: Scalar>(
    f: &MatrixPoly<T>,
    s2: &Description,
    tol: f64,
) -> Result<Claim2Report, CounterexampleError> {
    let t = TruncatedPreordering::new(s2.clone(), f.size(), 2, Kind::Preordering);
    let membership = check_membership(f, &t, tol)?;
    let confirmed = matches!(membership.status, MembershipStatus::NotMemberAtDegree(_));
    Ok(Claim2Report { membership, confirmed })
}

pub fn fk_refute_claim2_sdp(inst: &FkInstance, s2: &Description, tol: f64) -> Result<Claim2Report, CounterexampleError> {
    claim2_membership(&inst.f, s2, tol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoUnbounded {
    pub g: MatrixPoly<Complex64>,
    pub h: MatrixPoly<Complex64>,
    /// `‖F − G*G − H*H(x−a)(x−b)‖∞`
    pub residual: f64,
}

/// Writes `F ⪰ 0` on `(−∞,a] ∪ [b,∞)` as `G*G + H*H·(x−a)(x−b)`.
///
/// After `x = αy + β` the set becomes `|y| ≥ 1`; the reversal `F₁` is PSD on
/// `[−1, 1]` and lies in the degree-`N` preordering of `{1+z, 1−z}`. With
/// `1 ± z = ((1±z)² + (1+z)(1−z))/2` the certificate regroups into
/// `P + Q·(1−z²)`, and Fejér–Riesz on `P` and `Q` gives `G₁`, `H₁`.
pub fn two_unbounded_factorize<T: Scalar>(
    f: &MatrixPoly<T>,
    a: &BigRational,
    b: &BigRational,
    tol: f64,
) -> Result<TwoUnbounded, CounterexampleError> {
    if a >= b {
        return Err(CounterexampleError::Endpoints);
    }
    let n = f.size();
    let ff = f.to_float();
    let big_n = ff.degree().unwrap_or(0);
    if big_n % 2 == 1 {
        return Err(CounterexampleError::OddDegree(big_n));
    }
    let half = big_n / 2;
    let two = BigRational::from_integer(2.into());
    let alpha = (b - a) / &two;
    let beta = (a + b) / &two;
    let af = rat_to_f64(&alpha);
    let bf = rat_to_f64(&beta);
    let c = |v: f64| Complex64::new(v, 0.0);

    let (g, h) = if ff.is_zero() {
        (MatrixPoly::zero(n), MatrixPoly::zero(n))
    } else if half == 0 {
        let fr = fejer_riesz_half(&ff, 0, tol)?;
        (fr.g, MatrixPoly::zero(n))
    } else {
        // exact substitution when F is exact keeps F₁ free of rounding
        let shifted = f
            .affine_substitute(&T::from_rational(&alpha), &T::from_rational(&beta))?
            .reversal(big_n)?;
        let s = Description::from_i64(&[&[1, 1], &[1, -1]]);
        let t = TruncatedPreordering::new(s, n, big_n, Kind::Preordering);
        let report = check_membership(&shifted, &t, tol)?;
        let cert = match report.status {
            MembershipStatus::Member(cert) => cert,
            MembershipStatus::NotMemberAtDegree(_) => return Err(CertError::NotPsd.into()),
            MembershipStatus::Unknown(message) => return Err(CounterexampleError::Unknown { d: big_n, message }),
        };
        let one_plus = MatrixPoly::<Complex64>::scalar(vec![c(1.0), c(1.0)]);
        let one_minus = MatrixPoly::<Complex64>::scalar(vec![c(1.0), c(-1.0)]);
        let mut p = MatrixPoly::zero(n);
        let mut q = MatrixPoly::zero(n);
        for (block, sigma) in cert.blocks.iter().zip(cert.sigmas()) {
            match block.e.as_slice() {
                [0, 0] => p = p.add(&sigma)?,
                [1, 0] => {
                    p = p.add(&sigma.mul_scalar_poly(&one_plus.pow(2)).scale(&c(0.5)))?;
                    q = q.add(&sigma.scale(&c(0.5)))?;
                }
                [0, 1] => {
                    p = p.add(&sigma.mul_scalar_poly(&one_minus.pow(2)).scale(&c(0.5)))?;
                    q = q.add(&sigma.scale(&c(0.5)))?;
                }
                _ => q = q.add(&sigma)?,
            }
        }
        let g1 = fejer_riesz_half(&hermitize(&p), half, tol)?.g;
        let h1 = if half >= 1 && !q.is_zero() {
            fejer_riesz_half(&hermitize(&q), half - 1, tol)?.g
        } else {
            MatrixPoly::zero(n)
        };
        // y = (x − β)/α
        let back = |m: &MatrixPoly<Complex64>, deg: usize| -> Result<MatrixPoly<Complex64>, PolyError> {
            m.reversal(deg)?.affine_substitute(&c(1.0 / af), &c(-bf / af))
        };
        let g = back(&g1, half)?;
        let h = back(&h1, half - 1)?.scale(&c(1.0 / af));
        (g, h)
    };

    let gen = MatrixPoly::<Complex64>::scalar(vec![c(rat_to_f64(&(a * b))), c(-rat_to_f64(&(a + b))), c(1.0)]);
    let assembled = g.adjoint().mul(&g)?.add(&h.adjoint().mul(&h)?.mul_scalar_poly(&gen))?;
    let residual = ff.max_abs_diff(&assembled);
    let scale = ff.max_abs_coeff().max(1.0);
    if residual > 1e-6 * scale {
        return Err(CounterexampleError::Unverified(residual));
    }
    Ok(TwoUnbounded { g, h, residual })
}

/// `(M + M*)/2`, removing rounding asymmetry before factorization.
fn hermitize(m: &MatrixPoly<Complex64>) -> MatrixPoly<Complex64> {
    m.add(&m.adjoint()).expect("same size").scale(&Complex64::new(0.5, 0.0))
}

/// `[x1, x2] ∪ {x3, …, xm}` from the sorted list `x`.
pub fn claim2_set(x: &[BigRational]) -> Result<SemialgSet, CounterexampleError> {
    if x.len() < 4 {
        return Err(CounterexampleError::Shape("need x1, x2 and at least two points".into()));
    }
    if x.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CounterexampleError::Ordering);
    }
    let mut pieces = vec![Piece::interval(x[0].clone(), x[1].clone())];
    pieces.extend(x[2..].iter().cloned().map(Piece::Point));
    SemialgSet::new(pieces).map_err(|e| CounterexampleError::Shape(e.to_string()))
}
