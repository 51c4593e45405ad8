//! Constructive `h²F` reduction on compact sets: pivot unitaries, the
//! congruence split, and the recursion that produces `h` with `h(x₀) ≠ 0`
//! and a certificate for `h²F`.
//!
//! All arithmetic is exact in `ℚ(i)(√2)`, the smallest field holding the
//! `1/√2` entries of the pivot unitaries.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::certsearch::{
    check_membership, CertBlock, CertError, Certificate, Kind, MembershipStatus,
    TruncatedPreordering,
};
use crate::polymat::{Mat, MatrixPoly, PolyError, ScalarPoly};
use crate::scalar::{Cq, Qi2, Scalar};
use crate::sdp;
use crate::semialg::{Description, SemialgSet};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("indices (k, l) = ({k}, {l}) out of range for n = {n}")]
    IndexRange { n: usize, k: usize, l: usize },
    #[error("G(x0) = 0")]
    VanishingAtPoint,
    #[error("split needs n ≥ 2 and a real top-left entry")]
    SplitShape,
    #[error("congruence identity {0} failed")]
    Identity(&'static str),
    #[error("F is not PSD on K: eigenvalue {eigenvalue:e} at x = {x}")]
    NotPsd { x: f64, eigenvalue: f64 },
    #[error("K must be compact and nonempty")]
    NotCompact,
    #[error("F must be Hermitian")]
    NotHermitian,
    #[error("scalar certificate not found: {0}")]
    ScalarUnknown(String),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn q_int(v: i64) -> Qi2 {
    Qi2::from_i64(v)
}

fn i_over_sqrt2(sign: i64) -> Qi2 {
    Qi2::over_sqrt2(Cq::new(BigRational::zero(), BigRational::from_integer(sign.into())))
}

fn over_sqrt2(sign: i64) -> Qi2 {
    Qi2::over_sqrt2(Cq::new(BigRational::from_integer(sign.into()), BigRational::zero()))
}

/// Permutation swapping rows 1 and `k` (1-based).
fn permutation(n: usize, k: usize) -> Mat<Qi2> {
    Mat::from_fn(n, |i, j| {
        let src = if i == 0 {
            k - 1
        } else if i == k - 1 {
            0
        } else {
            i
        };
        if j == src {
            q_int(1)
        } else {
            q_int(0)
        }
    })
}

/// `(U_kl, V_kl)` with 1-based `1 ≤ k ≤ l ≤ n`: the top-left entries of
/// `U G U*` and `V G V*` are `p_kl` and `r_kl`.
pub fn pivot_unitaries(n: usize, k: usize, l: usize) -> Result<(Mat<Qi2>, Mat<Qi2>), ReductionError> {
    if !(1 <= k && k <= l && l <= n) {
        return Err(ReductionError::IndexRange { n, k, l });
    }
    let p = permutation(n, k);
    if k == l {
        return Ok((p.clone(), p));
    }
    let (k0, l0) = (k - 1, l - 1);
    let s = Mat::from_fn(n, |i, j| match (i, j) {
        _ if i == k0 && j == k0 => over_sqrt2(1),
        _ if i == k0 && j == l0 => over_sqrt2(1),
        _ if i == l0 && j == k0 => over_sqrt2(1),
        _ if i == l0 && j == l0 => over_sqrt2(-1),
        _ if i == j => q_int(1),
        _ => q_int(0),
    });
    let st = Mat::from_fn(n, |i, j| match (i, j) {
        _ if i == k0 && j == k0 => over_sqrt2(1),
        _ if i == k0 && j == l0 => i_over_sqrt2(1),
        _ if i == l0 && j == k0 => over_sqrt2(1),
        _ if i == l0 && j == l0 => i_over_sqrt2(-1),
        _ if i == j => q_int(1),
        _ => q_int(0),
    });
    Ok((p.mul(&s), p.mul(&st)))
}

/// `p_kl` (1-based).
pub fn p_kl<T: Scalar>(g: &MatrixPoly<T>, k: usize, l: usize) -> ScalarPoly<T> {
    let (k, l) = (k - 1, l - 1);
    if k == l {
        return g.entry(k, k);
    }
    let half = T::from_cq(&Cq::new(crate::scalar::rat(1, 2), BigRational::zero()));
    sum(&[g.entry(k, l), g.entry(l, k), g.entry(k, k), g.entry(l, l)]).scale(&half)
}

/// `r_kl` (1-based).
pub fn r_kl<T: Scalar>(g: &MatrixPoly<T>, k: usize, l: usize) -> ScalarPoly<T> {
    let (k, l) = (k - 1, l - 1);
    if k == l {
        return g.entry(k, k);
    }
    let half = T::from_cq(&Cq::new(crate::scalar::rat(1, 2), BigRational::zero()));
    let half_i = T::from_cq(&Cq::new(BigRational::zero(), crate::scalar::rat(1, 2)));
    let skew = g.entry(l, k).sub(&g.entry(k, l)).expect("scalar").scale(&half_i);
    let diag = g.entry(k, k).add(&g.entry(l, l)).expect("scalar").scale(&half);
    skew.add(&diag).expect("scalar")
}

fn sum<T: Scalar>(ps: &[ScalarPoly<T>]) -> ScalarPoly<T> {
    ps.iter().fold(ScalarPoly::zero(1), |acc, p| acc.add(p).expect("scalar"))
}

/// Pieces of the congruence `a⁴F = L₊* diag(d, D) L₊`, `diag(d, D) = L₋* F L₋`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurSplit<T> {
    pub a: ScalarPoly<T>,
    pub beta: Vec<ScalarPoly<T>>,
    pub c: MatrixPoly<T>,
    /// `a³`
    pub d: ScalarPoly<T>,
    /// `a(a𝔠 − β*β)`
    pub big_d: MatrixPoly<T>,
    /// `[[a, β], [0, aI]]`
    pub l_plus: MatrixPoly<T>,
    /// `[[a, −β], [0, aI]]`
    pub l_minus: MatrixPoly<T>,
}

fn block_diag<T: Scalar>(d: &ScalarPoly<T>, big: &MatrixPoly<T>) -> Result<MatrixPoly<T>, PolyError> {
    let n = big.size() + 1;
    let rows: Vec<Vec<ScalarPoly<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, 0) => d.clone(),
                    (0, _) | (_, 0) => ScalarPoly::zero(1),
                    _ => big.entry(i - 1, j - 1),
                })
                .collect()
        })
        .collect();
    MatrixPoly::from_entries(&rows)
}

fn upper<T: Scalar>(a: &ScalarPoly<T>, beta: &[ScalarPoly<T>], sign: T) -> Result<MatrixPoly<T>, PolyError> {
    let n = beta.len() + 1;
    let rows: Vec<Vec<ScalarPoly<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, 0) => a.clone(),
                    (0, _) => beta[j - 1].scale(&sign),
                    _ if i == j => a.clone(),
                    _ => ScalarPoly::zero(1),
                })
                .collect()
        })
        .collect();
    MatrixPoly::from_entries(&rows)
}

fn same<T: Scalar>(x: &MatrixPoly<T>, y: &MatrixPoly<T>) -> bool {
    let scale = x.max_abs_coeff().max(y.max_abs_coeff()).max(1.0);
    match x.sub(y) {
        Ok(diff) => diff
            .coeffs()
            .iter()
            .all(|c| c.entries().iter().all(|v| v.negligible(1e-9 * scale))),
        Err(_) => false,
    }
}

/// Splits `F = [[a, β], [β*, 𝔠]]` and checks both congruence identities.
pub fn schur_split<T: Scalar>(f: &MatrixPoly<T>) -> Result<SchurSplit<T>, ReductionError> {
    let n = f.size();
    let a = f.entry(0, 0);
    if n < 2 || !a.is_real() {
        return Err(ReductionError::SplitShape);
    }
    let beta: Vec<ScalarPoly<T>> = (1..n).map(|j| f.entry(0, j)).collect();
    let c = f.trailing_block();
    let d = a.pow(3);
    // β*β is the outer product with entries conj(β_i)·β_j
    let outer_rows: Vec<Vec<ScalarPoly<T>>> = (0..n - 1)
        .map(|i| (0..n - 1).map(|j| beta[i].adjoint().mul(&beta[j]).expect("scalar")).collect())
        .collect();
    let outer = MatrixPoly::from_entries(&outer_rows)?;
    let big_d = c.mul_scalar_poly(&a).sub(&outer)?.mul_scalar_poly(&a);
    let l_plus = upper(&a, &beta, T::one())?;
    let l_minus = upper(&a, &beta, -T::one())?;
    let diag = block_diag(&d, &big_d)?;
    let lhs = f.mul_scalar_poly(&a.pow(4));
    if !same(&lhs, &l_plus.adjoint().mul(&diag)?.mul(&l_plus)?) {
        return Err(ReductionError::Identity("(i)"));
    }
    if !same(&diag, &l_minus.adjoint().mul(f)?.mul(&l_minus)?) {
        return Err(ReductionError::Identity("(ii)"));
    }
    Ok(SchurSplit {
        a,
        beta,
        c,
        d,
        big_d,
        l_plus,
        l_minus,
    })
}

/// `c = x − x₀` for real `x₀`, else `(x − x₀)(x − x̄₀)`.
pub fn root_factor<T: Scalar>(x0: &Cq) -> ScalarPoly<T> {
    if x0.im.is_zero() {
        ScalarPoly::scalar(vec![T::from_cq(&-x0.clone()), T::one()])
    } else {
        let re = Cq::new(x0.re.clone(), BigRational::zero());
        let norm = Cq::new(&x0.re * &x0.re + &x0.im * &x0.im, BigRational::zero());
        ScalarPoly::scalar(vec![T::from_cq(&norm), T::from_cq(&-(re.clone() + re)), T::one()])
    }
}

fn vanishes_at<T: Scalar>(g: &MatrixPoly<T>, x0: &Cq) -> bool {
    let scale = g.max_abs_coeff().max(1.0);
    g.evaluate(&T::from_cq(x0)).entries().iter().all(|v| v.negligible(1e-12 * scale))
}

/// `F = c^m G` with `m` maximal. For Hermitian `F`, `F(x₀) = 0` forces
/// `F(x̄₀) = 0`, so vanishing at `x₀` is the divisibility test.
pub fn factor_out_root<T: Scalar>(f: &MatrixPoly<T>, x0: &Cq) -> (ScalarPoly<T>, usize, MatrixPoly<T>) {
    let c = root_factor::<T>(x0);
    let mut g = f.clone();
    let mut m = 0;
    while !g.is_zero() && vanishes_at(&g, x0) {
        match g.divide_exact(&c) {
            Some(q) => {
                g = q;
                m += 1;
            }
            None => break,
        }
    }
    (c, m, g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotCase {
    Case1,
    Case2P,
    Case2R,
}

impl PivotCase {
    pub fn as_str(self) -> &'static str {
        match self {
            PivotCase::Case1 => "CASE1",
            PivotCase::Case2P => "CASE2_P",
            PivotCase::Case2R => "CASE2_R",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PivotData {
    pub case: PivotCase,
    /// 1-based indices; `k0 = l0` in case 1.
    pub k0: usize,
    pub l0: usize,
    pub t: Mat<Qi2>,
    pub pivot: ScalarPoly<Qi2>,
}

impl PivotData {
    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.as_str(),
            "k0": self.k0,
            "l0": self.l0,
            "T": crate::polymat::mat_to_json(&self.t),
            "pivot": self.pivot.to_json(),
        })
    }
}

/// Smallest nonvanishing diagonal entry, else the lexicographically first
/// off-diagonal pair with nonzero real or imaginary part at `x₀`.
pub fn select_pivot(g: &MatrixPoly<Qi2>, x0: &Cq) -> Result<PivotData, ReductionError> {
    let n = g.size();
    let at = Qi2::from_cq(x0);
    let nonzero = |p: &ScalarPoly<Qi2>| !p.evaluate(&at).get(0, 0).is_zero();
    for k in 1..=n {
        if nonzero(&g.entry(k - 1, k - 1)) {
            let (u, _) = pivot_unitaries(n, k, k)?;
            return Ok(PivotData {
                case: PivotCase::Case1,
                k0: k,
                l0: k,
                t: u,
                pivot: g.entry(k - 1, k - 1),
            });
        }
    }
    for k in 1..=n {
        for l in k + 1..=n {
            // p_kl(x₀) = Re g_kl(x₀) and r_kl(x₀) = Im g_kl(x₀) once the diagonal vanishes
            let p = p_kl(g, k, l);
            let r = r_kl(g, k, l);
            let (u, v) = pivot_unitaries(n, k, l)?;
            if nonzero(&p) {
                return Ok(PivotData {
                    case: PivotCase::Case2P,
                    k0: k,
                    l0: l,
                    t: u,
                    pivot: p,
                });
            }
            if nonzero(&r) {
                return Ok(PivotData {
                    case: PivotCase::Case2R,
                    k0: k,
                    l0: l,
                    t: v,
                    pivot: r,
                });
            }
        }
    }
    Err(ReductionError::VanishingAtPoint)
}

#[derive(Debug, Clone, PartialEq)]
pub struct H2fOptions {
    pub kind: Kind,
    pub tol: f64,
    /// Sample points per interval for the PSD guard.
    pub samples: usize,
    pub psd_tol: f64,
    /// Extra degree tried by the default scalar oracle above `deg p`.
    pub max_extra_degree: usize,
}

impl Default for H2fOptions {
    fn default() -> Self {
        H2fOptions {
            kind: Kind::QuadraticModule,
            tol: sdp::DEFAULT_TOL,
            samples: 64,
            psd_tol: 1e-9,
            max_extra_degree: 4,
        }
    }
}

/// Recursive plan for `h²F ∈ M^n_S`.
#[derive(Debug, Clone, PartialEq)]
pub enum CertificatePlan {
    /// `F ≡ 0`, `h = 1`.
    Zero { n: usize },
    /// `n = 1`, `h = 1`: a direct certificate for `F`.
    Scalar(Certificate),
    Level(Box<LevelPlan>),
}

/// One step: `h²F = M* diag(h₁²d, h₁²D) M` with `M = L₊·T` and
/// `h = h₁·pivot²`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelPlan {
    pub c: ScalarPoly<Qi2>,
    pub m: usize,
    pub pivot: PivotData,
    pub d: ScalarPoly<Qi2>,
    pub big_d: MatrixPoly<Qi2>,
    pub congruence: MatrixPoly<Qi2>,
    pub d_certificate: Certificate,
    pub h_sub: ScalarPoly<Qi2>,
    pub sub: CertificatePlan,
}

impl CertificatePlan {
    pub fn size(&self) -> usize {
        match self {
            CertificatePlan::Zero { n } => *n,
            CertificatePlan::Scalar(_) => 1,
            CertificatePlan::Level(l) => l.congruence.size(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CertificatePlan::Zero { n } => json!({"type": "zero", "n": n}),
            CertificatePlan::Scalar(c) => json!({"type": "scalar", "certificate": c.to_json()}),
            CertificatePlan::Level(l) => json!({
                "type": "level",
                "c": l.c.to_json(),
                "m": l.m,
                "pivot": l.pivot.to_json(),
                "d": l.d.to_json(),
                "D": l.big_d.to_json(),
                "congruence": l.congruence.to_json(),
                "d_certificate": l.d_certificate.to_json(),
                "h_sub": l.h_sub.to_json(),
                "sub": l.sub.to_json(),
            }),
        }
    }

    /// Gram matrices of `h²F` keyed by exponent vector.
    fn gram_blocks(&self) -> BTreeMap<Vec<u8>, DMatrix<Complex64>> {
        match self {
            CertificatePlan::Zero { .. } => BTreeMap::new(),
            CertificatePlan::Scalar(c) => c.blocks.iter().map(|b| (b.e.clone(), b.q.clone())).collect(),
            CertificatePlan::Level(l) => {
                let n = l.congruence.size();
                let h1 = l.h_sub.to_float();
                let mut top: BTreeMap<Vec<u8>, DMatrix<Complex64>> = l
                    .d_certificate
                    .blocks
                    .iter()
                    .map(|b| (b.e.clone(), congruence_gram(&b.q, 1, &h1)))
                    .collect();
                let rest = l.sub.gram_blocks();
                let keys: Vec<Vec<u8>> = top.keys().chain(rest.keys()).cloned().collect();
                let m = l.congruence.to_float();
                let mut out = BTreeMap::new();
                for e in keys {
                    if out.contains_key(&e) {
                        continue;
                    }
                    let a = top.remove(&e).unwrap_or_else(|| DMatrix::zeros(0, 0));
                    let b = rest.get(&e).cloned().unwrap_or_else(|| DMatrix::zeros(0, 0));
                    let joined = interleave(&a, &b, n);
                    out.insert(e, congruence_gram(&joined, n, &m));
                }
                out
            }
        }
    }
}

/// Gram matrix of `M* σ M` from that of `σ`: `Q' = 𝓜* Q 𝓜` with block
/// `(a, p)` of `𝓜` equal to `M_{p−a}`.
pub fn congruence_gram(q: &DMatrix<Complex64>, n: usize, m: &MatrixPoly<Complex64>) -> DMatrix<Complex64> {
    let k = q.nrows() / n;
    if k == 0 || m.is_zero() {
        return DMatrix::zeros(0, 0);
    }
    let dm = m.degree().unwrap_or(0);
    let k2 = k + dm;
    let mut big = DMatrix::<Complex64>::zeros(n * k, n * k2);
    for a in 0..k {
        for (b, mb) in m.coeffs().iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    big[(a * n + i, (a + b) * n + j)] = *mb.get(i, j);
                }
            }
        }
    }
    big.adjoint() * q * big
}

/// Gram of `diag(s, S)` from a scalar Gram and an `(n−1)`-sized Gram,
/// padding the shorter monomial basis with zeros.
fn interleave(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, n: usize) -> DMatrix<Complex64> {
    let ka = a.nrows();
    let kb = if n > 1 { b.nrows() / (n - 1) } else { 0 };
    let k = ka.max(kb);
    let mut out = DMatrix::<Complex64>::zeros(n * k, n * k);
    for p in 0..ka {
        for q in 0..ka {
            out[(p * n, q * n)] = a[(p, q)];
        }
    }
    for p in 0..kb {
        for q in 0..kb {
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    out[(p * n + 1 + i, q * n + 1 + j)] = b[(p * (n - 1) + i, q * (n - 1) + j)];
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub h: ScalarPoly<Qi2>,
    pub plan: CertificatePlan,
}

impl Reduction {
    /// `h²F` as a certificate over `S` at the smallest degree that holds
    /// every assembled block.
    pub fn assemble(&self, f: &MatrixPoly<Qi2>, s: &Description, kind: Kind) -> Certificate {
        let n = f.size();
        let blocks = self.plan.gram_blocks();
        let probe = TruncatedPreordering::new(s.clone(), n, 0, kind);
        let d = blocks
            .iter()
            .filter(|(_, q)| q.nrows() > 0)
            .map(|(e, q)| probe.weight(e).degree().unwrap_or(0) + 2 * (q.nrows() / n - 1))
            .max()
            .unwrap_or(0);
        let mut cert = Certificate {
            s: s.clone(),
            n,
            d,
            kind,
            blocks: blocks
                .into_iter()
                .filter(|(_, q)| q.nrows() > 0)
                .map(|(e, q)| CertBlock { e, q, clipped: 0.0 })
                .collect(),
            residual: 0.0,
        };
        let target = self.h2f(f).to_float();
        cert.residual = target.max_abs_diff(&cert.assemble());
        cert
    }

    /// `h²F`
    pub fn h2f(&self, f: &MatrixPoly<Qi2>) -> MatrixPoly<Qi2> {
        f.mul_scalar_poly(&self.h.pow(2))
    }

    pub fn to_json(&self) -> Value {
        json!({"h": self.h.to_json(), "plan": self.plan.to_json()})
    }
}

/// Tries `M^1_{S,d}` membership for `d = deg p, …, deg p + extra`.
pub fn certsearch_oracle<'a>(
    s: &'a Description,
    opts: &'a H2fOptions,
) -> impl FnMut(&ScalarPoly<Qi2>) -> Result<Certificate, ReductionError> + 'a {
    move |p: &ScalarPoly<Qi2>| {
        let base = p.degree().unwrap_or(0);
        let mut last = String::from("no degree tried");
        for d in base..=base + opts.max_extra_degree {
            let t = TruncatedPreordering::new(s.clone(), 1, d, opts.kind);
            let report = check_membership(p, &t, opts.tol)?;
            match report.status {
                MembershipStatus::Member(c) => return Ok(c),
                other => last = format!("{} at d = {d}", other.as_str()),
            }
        }
        Err(ReductionError::ScalarUnknown(last))
    }
}

/// PSD guard on Chebyshev-spaced samples of `K`; not a proof.
pub fn check_psd_on(f: &MatrixPoly<Qi2>, k: &SemialgSet, opts: &H2fOptions) -> Result<(), ReductionError> {
    let ff = f.to_float();
    let scale = ff.max_abs_coeff().max(1.0);
    for x in k.sample_points(opts.samples) {
        let m = ff.eval_real(x);
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let ev = SymmetricEigen::new(h).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        if ev < -opts.psd_tol * scale {
            return Err(ReductionError::NotPsd { x, eigenvalue: ev });
        }
    }
    Ok(())
}

/// `h ∈ ℝ[x]` with `h(x₀) ≠ 0` and a plan for `h²F ∈ M^n_S`, with the
/// default certsearch oracle for the scalar pieces.
pub fn h2f_reduce(
    f: &MatrixPoly<Qi2>,
    k: &SemialgSet,
    s: &Description,
    x0: &Cq,
    opts: &H2fOptions,
) -> Result<Reduction, ReductionError> {
    let mut oracle = certsearch_oracle(s, opts);
    h2f_reduce_with(f, k, x0, opts, &mut oracle)
}

pub fn h2f_reduce_with(
    f: &MatrixPoly<Qi2>,
    k: &SemialgSet,
    x0: &Cq,
    opts: &H2fOptions,
    oracle: &mut dyn FnMut(&ScalarPoly<Qi2>) -> Result<Certificate, ReductionError>,
) -> Result<Reduction, ReductionError> {
    if k.is_empty() || !k.is_compact() {
        return Err(ReductionError::NotCompact);
    }
    if !f.is_hermitian() {
        return Err(ReductionError::NotHermitian);
    }
    check_psd_on(f, k, opts)?;
    reduce(f, x0, oracle)
}

fn reduce(
    f: &MatrixPoly<Qi2>,
    x0: &Cq,
    oracle: &mut dyn FnMut(&ScalarPoly<Qi2>) -> Result<Certificate, ReductionError>,
) -> Result<Reduction, ReductionError> {
    let n = f.size();
    let one = ScalarPoly::<Qi2>::identity(1);
    if f.is_zero() {
        return Ok(Reduction {
            h: one,
            plan: CertificatePlan::Zero { n },
        });
    }
    if n == 1 {
        return Ok(Reduction {
            h: one,
            plan: CertificatePlan::Scalar(oracle(f)?),
        });
    }
    let (c, m, g) = factor_out_root(f, x0);
    let pivot = select_pivot(&g, x0)?;
    let t = &pivot.t;
    let rotated = g.sandwich(t, &t.adjoint());
    let split = schur_split(&rotated)?;
    let cm = c.pow(m);
    let d = split.d.mul(&cm)?;
    let big_d = split.big_d.mul_scalar_poly(&cm);
    let congruence = split.l_plus.mul(&MatrixPoly::constant(t.clone()))?;
    // g̃⁴F = (L₊T)* diag(d, D) (L₊T) with g̃ the pivot
    let g4f = f.mul_scalar_poly(&pivot.pivot.pow(4));
    let rebuilt = congruence.adjoint().mul(&block_diag(&d, &big_d)?)?.mul(&congruence)?;
    if g4f != rebuilt {
        return Err(ReductionError::Identity("pivoted congruence"));
    }
    let d_certificate = oracle(&d)?;
    let sub = reduce(&big_d, x0, oracle)?;
    let h = sub.h.mul(&pivot.pivot.pow(2))?;
    Ok(Reduction {
        h,
        plan: CertificatePlan::Level(Box::new(LevelPlan {
            c,
            m,
            pivot,
            d,
            big_d,
            congruence,
            d_certificate,
            h_sub: sub.h,
            sub: sub.plan,
        })),
    })
}

#[cfg(test)]
mod tests;
