//! Degree-bounded membership in matrix quadratic modules and preorderings.
//!
//! A sum of hermitian squares of degree `≤ 2k` is parameterized by a PSD
//! Gram matrix `Q` over the basis `1, x, …, x^k` tensored with `ℂⁿ`:
//! `σ = (v ⊗ I)* Q (v ⊗ I)`. Each complex Hermitian `Q` of size `N` is fed to
//! the real solver through a symmetric block `Y` of size `2N`, read back as
//! `Q = (Y₁₁ + Y₂₂)/2 + i·(Y₂₁ − Y₁₂)/2`, which is PSD whenever `Y` is.

mod denom;
mod fejer;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::json::{self as js, JsonError};
use crate::polymat::{Mat, MatrixPoly, PolyError, ScalarPoly};
use crate::scalar::{rat_to_f64, Cq, Scalar};
use crate::sdp::{self, Diagnostics, Entry, SdpError, SdpProblem, SdpStatus, WitnessCheck};
use crate::semialg::Description;

pub use denom::{denominator_search, DegreeSchedule, DenomAttempt, DenomOptions, DenomOutcome, DenomReport};
pub use fejer::{fejer_riesz, fejer_riesz_half, fejer_riesz_with, FejerRiesz};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CertError {
    #[error("polynomial degree {degree} exceeds the degree bound {d}")]
    DegreeTooHigh { degree: usize, d: usize },
    #[error("polynomial is not Hermitian")]
    NotHermitian,
    #[error("polynomial has size {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("factorization needs even degree, got {0}")]
    OddDegree(usize),
    #[error("polynomial is not positive semidefinite on the real line")]
    NotPsd,
    #[error("membership undecided: {0}")]
    Unknown(String),
    #[error("denominator point must not be real")]
    RealDenominator,
    #[error("Gram block {block} has eigenvalue {eigenvalue:e}, beyond the clipping threshold")]
    ClipTooLarge { block: usize, eigenvalue: f64 },
    #[error("solver returned no primal point")]
    NoPrimal,
    #[error(transparent)]
    Sdp(#[from] SdpError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// All products `g^e`, `e ∈ {0,1}^s`.
    Preordering,
    /// `e = 0` and the unit vectors only.
    QuadraticModule,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Preordering => "PREORDERING",
            Kind::QuadraticModule => "QUADRATIC_MODULE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "PREORDERING" => Some(Kind::Preordering),
            "QUADRATIC_MODULE" => Some(Kind::QuadraticModule),
            _ => None,
        }
    }
}

/// `T^n_{S,d}` (or the truncated quadratic module): every summand
/// `σ_e g^e` has degree at most `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedPreordering {
    pub s: Description,
    pub n: usize,
    pub d: usize,
    pub kind: Kind,
}

/// One Gram block: exponent, float weight `g^e` and half-degree `d_e`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSpec {
    pub e: Vec<u8>,
    pub weight: Vec<f64>,
    pub de: usize,
    /// `n·(d_e + 1)`
    pub size: usize,
}

impl TruncatedPreordering {
    pub fn new(s: Description, n: usize, d: usize, kind: Kind) -> Self {
        TruncatedPreordering { s, n, d, kind }
    }

    pub fn exponents(&self) -> Vec<Vec<u8>> {
        let s = self.s.len();
        match self.kind {
            Kind::Preordering => (0..1usize << s)
                .map(|mask| (0..s).map(|j| ((mask >> j) & 1) as u8).collect())
                .collect(),
            Kind::QuadraticModule => {
                let mut out = vec![vec![0u8; s]];
                for j in 0..s {
                    let mut e = vec![0u8; s];
                    e[j] = 1;
                    out.push(e);
                }
                out
            }
        }
    }

    /// `g^e = Π_j g_j^{e_j}`.
    pub fn weight(&self, e: &[u8]) -> ScalarPoly<Cq> {
        let polys = self.s.polys();
        let mut w = ScalarPoly::<Cq>::identity(1);
        for (g, &ej) in polys.iter().zip(e) {
            if ej == 1 {
                w = w.mul(g).expect("scalar polynomials");
            }
        }
        w
    }

    /// Largest `deg g^e` over the exponent set.
    pub fn max_weight_degree(&self) -> usize {
        self.exponents()
            .iter()
            .filter_map(|e| self.weight(e).degree())
            .max()
            .unwrap_or(0)
    }

    /// Blocks that fit under the degree bound; weights that vanish or
    /// exceed `d` get none.
    pub fn layout(&self) -> Vec<BlockSpec> {
        self.exponents()
            .into_iter()
            .filter_map(|e| {
                let w = self.weight(&e);
                let deg = w.degree()?;
                if deg > self.d {
                    return None;
                }
                let de = (self.d - deg) / 2;
                let weight = w.scalar_coeffs().iter().map(|c| rat_to_f64(&c.re)).collect();
                Some(BlockSpec {
                    e,
                    weight,
                    de,
                    size: self.n * (de + 1),
                })
            })
            .collect()
    }

    fn check_input(&self, f: &MatrixPoly<Complex64>) -> Result<(), CertError> {
        if f.size() != self.n {
            return Err(CertError::SizeMismatch {
                expected: self.n,
                got: f.size(),
            });
        }
        if let Some(deg) = f.degree() {
            if deg > self.d {
                return Err(CertError::DegreeTooHigh { degree: deg, d: self.d });
            }
        }
        if !f.is_hermitian() {
            return Err(CertError::NotHermitian);
        }
        Ok(())
    }
}

/// `c·Y[r, s]` under the mirrored-entry convention of the solver.
fn push_coef(out: &mut Vec<Entry>, block: usize, r: usize, s: usize, c: f64) {
    if r == s {
        out.push(Entry::new(block, r, r, c));
    } else {
        out.push(Entry::new(block, r.min(s), r.max(s), c / 2.0));
    }
}

/// Row key: coefficient degree, entry `(i, j)` with `i ≤ j`, real or imaginary part.
fn row_index(n: usize, m: usize, i: usize, j: usize, imag: bool) -> usize {
    ((m * n + i) * n + j) * 2 + imag as usize
}

fn gram_constraints(
    f: &MatrixPoly<Complex64>,
    n: usize,
    d: usize,
    layout: &[BlockSpec],
) -> SdpProblem {
    let rows = (d + 1) * n * n * 2;
    let mut entries: Vec<Vec<Entry>> = vec![Vec::new(); rows];
    for (blk, spec) in layout.iter().enumerate() {
        let big = spec.size;
        for a in 0..=spec.de {
            for b in 0..=spec.de {
                for (t, &g) in spec.weight.iter().enumerate() {
                    if g == 0.0 {
                        continue;
                    }
                    let m = a + b + t;
                    for i in 0..n {
                        for j in i..n {
                            let (p, q) = (a * n + i, b * n + j);
                            let re = &mut entries[row_index(n, m, i, j, false)];
                            push_coef(re, blk, p, q, g / 2.0);
                            push_coef(re, blk, big + p, big + q, g / 2.0);
                            if i < j {
                                let im = &mut entries[row_index(n, m, i, j, true)];
                                push_coef(im, blk, big + p, q, g / 2.0);
                                push_coef(im, blk, p, big + q, -g / 2.0);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut p = SdpProblem::new(layout.iter().map(|s| 2 * s.size).collect());
    for m in 0..=d {
        let c = f.coeff(m);
        for i in 0..n {
            for j in i..n {
                for imag in [false, true] {
                    if imag && i == j {
                        continue;
                    }
                    let v = c.get(i, j);
                    let rhs = if imag { v.im } else { v.re };
                    let row = std::mem::take(&mut entries[row_index(n, m, i, j, imag)]);
                    if row.is_empty() && rhs == 0.0 {
                        continue;
                    }
                    p.add_constraint(row, rhs);
                }
            }
        }
    }
    p
}

/// The Gram feasibility problem for `F ∈ T^n_{S,d}`: one real block of size
/// `2n(d_e+1)` per exponent `e`, one row per coefficient degree, upper
/// triangular entry and real/imaginary part.
pub fn build_membership_sdp<T: Scalar>(
    f: &MatrixPoly<T>,
    t: &TruncatedPreordering,
) -> Result<SdpProblem, CertError> {
    let ff = f.to_float();
    t.check_input(&ff)?;
    Ok(gram_constraints(&ff, t.n, t.d, &t.layout()))
}

/// Complex Gram matrix encoded by a real block of size `2N`.
pub fn gram_from_real(y: &DMatrix<f64>) -> DMatrix<Complex64> {
    let big = y.nrows() / 2;
    DMatrix::from_fn(big, big, |p, q| {
        Complex64::new(
            (y[(p, q)] + y[(big + p, big + q)]) / 2.0,
            (y[(big + p, q)] - y[(p, big + q)]) / 2.0,
        )
    })
}

/// `(v ⊗ I)* Q (v ⊗ I)` for Gram matrix `Q` over `1, x, …, x^k`.
pub fn gram_to_poly(q: &DMatrix<Complex64>, n: usize) -> MatrixPoly<Complex64> {
    let k = q.nrows() / n;
    if k == 0 {
        return MatrixPoly::zero(n);
    }
    let mut coeffs = vec![Mat::<Complex64>::zeros(n); 2 * k - 1];
    for a in 0..k {
        for b in 0..k {
            let c = &mut coeffs[a + b];
            for i in 0..n {
                for j in 0..n {
                    let v = *c.get(i, j) + q[(a * n + i, b * n + j)];
                    c.set(i, j, v);
                }
            }
        }
    }
    MatrixPoly::from_coeffs(n, coeffs).expect("sizes agree")
}

fn hermitian_part(q: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (q + q.adjoint()) * Complex64::new(0.5, 0.0)
}

pub(crate) fn min_eigenvalue(q: &DMatrix<Complex64>) -> f64 {
    if q.nrows() == 0 {
        return 0.0;
    }
    SymmetricEigen::new(hermitian_part(q))
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

fn scale_of(f: &MatrixPoly<Complex64>) -> f64 {
    f.max_abs_coeff().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertBlock {
    pub e: Vec<u8>,
    /// Hermitian PSD Gram matrix over the monomials up to `x^{d_e}` ⊗ `ℂⁿ`.
    pub q: DMatrix<Complex64>,
    /// Magnitude of the most negative eigenvalue removed by clipping.
    pub clipped: f64,
}

/// `F = Σ_e σ_e g^e` with Gram matrices and the recorded residual.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub s: Description,
    pub n: usize,
    pub d: usize,
    pub kind: Kind,
    pub blocks: Vec<CertBlock>,
    /// Coefficientwise max-norm of `F − Σ_e σ_e g^e`.
    pub residual: f64,
}

impl Certificate {
    pub fn preordering(&self) -> TruncatedPreordering {
        TruncatedPreordering::new(self.s.clone(), self.n, self.d, self.kind)
    }

    /// `σ_e` per block.
    pub fn sigmas(&self) -> Vec<MatrixPoly<Complex64>> {
        self.blocks.iter().map(|b| gram_to_poly(&b.q, self.n)).collect()
    }

    /// `Σ_e σ_e g^e` recomputed from the stored Gram matrices.
    pub fn assemble(&self) -> MatrixPoly<Complex64> {
        let t = self.preordering();
        let mut acc = MatrixPoly::zero(self.n);
        for (b, sigma) in self.blocks.iter().zip(self.sigmas()) {
            let w = t.weight(&b.e).to_float();
            acc = acc.add(&sigma.mul_scalar_poly(&w)).expect("same size");
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "S": self.s.to_json(),
            "n": self.n,
            "d": self.d,
            "mode": self.kind.as_str(),
            "blocks": self.blocks.iter().map(|b| json!({
                "e": b.e,
                "Q": complex_matrix_to_json(&b.q),
                "residual": b.clipped,
            })).collect::<Vec<_>>(),
            "residual": self.residual,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let s = Description::from_json(js::field(v, "S", "")?)
            .map_err(|e| JsonError::new(js::join("S", &e.path), e.message))?;
        let n = js::as_usize(js::field(v, "n", "")?, "n")?;
        let d = js::as_usize(js::field(v, "d", "")?, "d")?;
        let kind_s = js::as_str(js::field(v, "mode", "")?, "mode")?;
        let kind = Kind::parse(kind_s)
            .ok_or_else(|| JsonError::new("mode", format!("unknown mode {kind_s:?}")))?;
        let mut blocks = Vec::new();
        for (k, b) in js::as_array(js::field(v, "blocks", "")?, "blocks")?.iter().enumerate() {
            let path = js::index("blocks", k);
            let ep = js::join(&path, "e");
            let e = js::as_array(js::field(b, "e", &path)?, &ep)?
                .iter()
                .enumerate()
                .map(|(j, x)| match js::as_usize(x, &js::index(&ep, j))? {
                    v @ (0 | 1) => Ok(v as u8),
                    _ => Err(JsonError::new(js::index(&ep, j), "exponent must be 0 or 1")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if e.len() != s.len() {
                return Err(JsonError::new(ep, format!("expected {} exponents", s.len())));
            }
            let q = complex_matrix_from_json(js::field(b, "Q", &path)?, &js::join(&path, "Q"))?;
            let clipped = match b.get("residual") {
                Some(r) => js::as_f64(r, &js::join(&path, "residual"))?,
                None => 0.0,
            };
            blocks.push(CertBlock { e, q, clipped });
        }
        let residual = match v.get("residual") {
            Some(r) => js::as_f64(r, "residual")?,
            None => f64::NAN,
        };
        Ok(Certificate {
            s,
            n,
            d,
            kind,
            blocks,
            residual,
        })
    }
}

pub fn complex_matrix_to_json(m: &DMatrix<Complex64>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| json!([m[(i, j)].re, m[(i, j)].im])).collect()))
            .collect(),
    )
}

pub fn complex_matrix_from_json(v: &Value, path: &str) -> Result<DMatrix<Complex64>, JsonError> {
    let rows = js::as_array(v, path)?;
    let size = rows.len();
    let mut m = DMatrix::zeros(size, size);
    for (i, row) in rows.iter().enumerate() {
        let rp = js::index(path, i);
        let cells = js::as_array(row, &rp)?;
        if cells.len() != size {
            return Err(JsonError::new(rp, format!("expected {size} columns")));
        }
        for (j, c) in cells.iter().enumerate() {
            let cp = js::index(&rp, j);
            let pair = js::as_array(c, &cp)?;
            if pair.len() != 2 {
                return Err(JsonError::new(cp, "expected [re, im]"));
            }
            m[(i, j)] = Complex64::new(
                js::as_f64(&pair[0], &js::index(&cp, 0))?,
                js::as_f64(&pair[1], &js::index(&cp, 1))?,
            );
        }
    }
    Ok(m)
}

/// Clips tiny negative eigenvalues of a Hermitian matrix at zero. Fails
/// when an eigenvalue lies below `−threshold`.
fn clip_psd(q: &DMatrix<Complex64>, threshold: f64) -> Result<(DMatrix<Complex64>, f64), f64> {
    let eig = SymmetricEigen::new(hermitian_part(q));
    let lo = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if lo < -threshold {
        return Err(lo);
    }
    if lo >= 0.0 {
        return Ok((hermitian_part(q), 0.0));
    }
    let lam = eig.eigenvalues.map(|l| Complex64::new(l.max(0.0), 0.0));
    let u = &eig.eigenvectors;
    let out = u * DMatrix::from_diagonal(&lam) * u.adjoint();
    Ok((hermitian_part(&out), -lo))
}

/// Reads the Gram matrices off a FEASIBLE outcome, clips eigenvalues in
/// `[−10·tol·scale, 0)` to zero and records the residual against `F`.
pub fn extract_certificate<T: Scalar>(
    f: &MatrixPoly<T>,
    sol: &sdp::SdpOutcome,
    t: &TruncatedPreordering,
    tol: f64,
) -> Result<Certificate, CertError> {
    let ff = f.to_float();
    let x = sol.primal.as_ref().ok_or(CertError::NoPrimal)?;
    let layout = t.layout();
    if x.len() != layout.len() {
        return Err(CertError::NoPrimal);
    }
    let threshold = 10.0 * tol * scale_of(&ff);
    let mut blocks = Vec::with_capacity(layout.len());
    for (k, (spec, y)) in layout.iter().zip(x).enumerate() {
        let q = gram_from_real(y);
        let (q, clipped) =
            clip_psd(&q, threshold).map_err(|ev| CertError::ClipTooLarge { block: k, eigenvalue: ev })?;
        blocks.push(CertBlock {
            e: spec.e.clone(),
            q,
            clipped,
        });
    }
    let mut cert = Certificate {
        s: t.s.clone(),
        n: t.n,
        d: t.d,
        kind: t.kind,
        blocks,
        residual: 0.0,
    };
    cert.residual = ff.max_abs_diff(&cert.assemble());
    Ok(cert)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertCheck {
    pub residual: f64,
    pub min_eigenvalue: f64,
    pub structure_ok: bool,
    pub ok: bool,
}

/// Independent recomputation of `Σ_e σ_e g^e`. Residual and eigenvalue
/// bounds are relative to `max(1, ‖F‖∞)`.
pub fn check_certificate<T: Scalar>(
    f: &MatrixPoly<T>,
    t: &TruncatedPreordering,
    c: &Certificate,
    tol: f64,
) -> CertCheck {
    let ff = f.to_float();
    let scale = scale_of(&ff);
    let layout = t.layout();
    let structure_ok = c.n == t.n
        && c.d <= t.d
        && c.kind == t.kind
        && c.s == t.s
        && ff.size() == t.n
        && c.blocks.iter().all(|b| {
            layout.iter().any(|s| s.e == b.e)
                && b.q.nrows() == b.q.ncols()
                && b.q.nrows() % t.n == 0
                && t.weight(&b.e).degree().is_some_and(|w| w + 2 * (b.q.nrows() / t.n - 1) <= t.d)
                && (&b.q - b.q.adjoint()).iter().all(|v| v.norm() <= tol * scale)
        });
    if !structure_ok {
        return CertCheck {
            residual: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            structure_ok,
            ok: false,
        };
    }
    let residual = ff.max_abs_diff(&c.assemble());
    let min_eigenvalue = c.blocks.iter().map(|b| min_eigenvalue(&b.q)).fold(f64::INFINITY, f64::min);
    let ok = residual <= tol * scale && min_eigenvalue >= -tol * scale;
    CertCheck {
        residual,
        min_eigenvalue,
        structure_ok,
        ok,
    }
}

pub fn verify_certificate<T: Scalar>(
    f: &MatrixPoly<T>,
    t: &TruncatedPreordering,
    c: &Certificate,
    tol: f64,
) -> bool {
    check_certificate(f, t, c, tol).ok
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Farkas multipliers, one per row of the Gram problem, `‖y‖∞ = 1`.
    pub y: Vec<f64>,
    pub check: WitnessCheck,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MembershipStatus {
    Member(Certificate),
    /// Statement about `T^n_{S,d}` at this `d` only.
    NotMemberAtDegree(Witness),
    Unknown(String),
}

impl MembershipStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            MembershipStatus::Member(_) => "MEMBER",
            MembershipStatus::NotMemberAtDegree(_) => "NOT_MEMBER_AT_DEGREE",
            MembershipStatus::Unknown(_) => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub status: MembershipStatus,
    pub problem: SdpProblem,
    pub diagnostics: Diagnostics,
}

impl MembershipReport {
    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.status {
            MembershipStatus::Member(c) => Some(c),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            MembershipStatus::NotMemberAtDegree(w) => Some(w),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "status": self.status.as_str(),
            "diagnostics": {
                "iterations": self.diagnostics.iterations,
                "primal_residual": finite_or_null(self.diagnostics.primal_residual),
                "min_eigenvalue": finite_or_null(self.diagnostics.min_eigenvalue),
                "message": self.diagnostics.message,
            },
        });
        match &self.status {
            MembershipStatus::Member(c) => v["certificate"] = c.to_json(),
            MembershipStatus::NotMemberAtDegree(w) => {
                v["witness"] = json!({
                    "y": w.y,
                    "max_eigenvalue": w.check.max_eigenvalue,
                    "rhs_value": w.check.rhs_value,
                    "exact_linear": w.check.exact_linear,
                });
            }
            MembershipStatus::Unknown(msg) => v["reason"] = json!(msg),
        }
        v
    }
}

pub(crate) fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn zero_certificate(t: &TruncatedPreordering) -> Certificate {
    Certificate {
        s: t.s.clone(),
        n: t.n,
        d: t.d,
        kind: t.kind,
        blocks: t
            .layout()
            .into_iter()
            .map(|s| CertBlock {
                e: s.e,
                q: DMatrix::zeros(s.size, s.size),
                clipped: 0.0,
            })
            .collect(),
        residual: 0.0,
    }
}

/// Decides `F ∈ T^n_{S,d}` numerically. MEMBER carries a certificate that
/// passed [`verify_certificate`] at `10·tol`; NOT_MEMBER_AT_DEGREE carries a
/// verified Farkas witness. Anything short of either is UNKNOWN.
pub fn check_membership<T: Scalar>(
    f: &MatrixPoly<T>,
    t: &TruncatedPreordering,
    tol: f64,
) -> Result<MembershipReport, CertError> {
    let p = build_membership_sdp(f, t)?;
    if f.is_zero() {
        return Ok(MembershipReport {
            status: MembershipStatus::Member(zero_certificate(t)),
            problem: p,
            diagnostics: Diagnostics {
                message: "zero polynomial".into(),
                ..Diagnostics::default()
            },
        });
    }
    let out = sdp::solve(&p, tol, sdp::DEFAULT_MAX_ITER)?;
    let status = match out.status {
        SdpStatus::Feasible => match extract_certificate(f, &out, t, tol) {
            Ok(c) => {
                let chk = check_certificate(f, t, &c, 10.0 * tol);
                if chk.ok {
                    MembershipStatus::Member(c)
                } else {
                    MembershipStatus::Unknown(format!(
                        "extracted certificate failed verification (residual {:e}, λ_min {:e})",
                        chk.residual, chk.min_eigenvalue
                    ))
                }
            }
            Err(e) => MembershipStatus::Unknown(e.to_string()),
        },
        SdpStatus::Infeasible => {
            let y = out.witness.clone().unwrap_or_default();
            let check = sdp::verify_witness(&p, &y);
            if check.ok {
                MembershipStatus::NotMemberAtDegree(Witness { y, check })
            } else {
                MembershipStatus::Unknown("infeasibility witness failed verification".into())
            }
        }
        SdpStatus::Indeterminate => MembershipStatus::Unknown(out.diagnostics.message.clone()),
    };
    Ok(MembershipReport {
        status,
        problem: p,
        diagnostics: out.diagnostics,
    })
}
