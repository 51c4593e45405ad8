//! Fejér–Riesz factorization `F = G*G` for `F ⪰ 0` on `ℝ`.
//!
//! The Gram problem is solved with the objective `max tr((v(i)⊗I)* Q (v(i)⊗I))`,
//! whose optimum has rank `n` for generic `F`; the top `n` eigenpairs give
//! `G`, and a few Gauss–Newton steps on the coefficients of `G` remove the
//! solver's rounding.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::{gram_constraints, gram_from_real, CertError, Kind, TruncatedPreordering};
use crate::polymat::{Mat, MatrixPoly, ScalarPoly};
use crate::scalar::Scalar;
use crate::sdp::{self, Entry, SdpStatus};
use crate::semialg::Description;

#[derive(Debug, Clone, PartialEq)]
pub struct FejerRiesz {
    pub g: MatrixPoly<Complex64>,
    /// `‖F − G*G‖∞`
    pub residual: f64,
}

pub fn fejer_riesz<T: Scalar>(f: &MatrixPoly<T>) -> Result<FejerRiesz, CertError> {
    fejer_riesz_with(f, sdp::DEFAULT_TOL)
}

pub fn fejer_riesz_with<T: Scalar>(f: &MatrixPoly<T>, tol: f64) -> Result<FejerRiesz, CertError> {
    let deg = f.degree().unwrap_or(0);
    if deg % 2 == 1 {
        return Err(CertError::OddDegree(deg));
    }
    fejer_riesz_half(f, deg / 2, tol)
}

/// Factors with `deg G ≤ half`, for callers whose `F` may have numerically
/// tiny leading coefficients above its true degree.
pub fn fejer_riesz_half<T: Scalar>(f: &MatrixPoly<T>, half: usize, tol: f64) -> Result<FejerRiesz, CertError> {
    let ff = f.to_float();
    let n = ff.size();
    if ff.degree().is_none() {
        return Ok(FejerRiesz {
            g: MatrixPoly::zero(n),
            residual: 0.0,
        });
    }
    let deg = 2 * half;
    let t = TruncatedPreordering::new(Description::default(), n, deg, Kind::Preordering);
    t.check_input(&ff)?;
    let scale = ff.max_abs_coeff().max(1.0);
    let (mut g, mut residual) = attempt(&ff, &ff, half, tol)?;
    // A real zero of det F leaves the Gram set without interior points, and
    // the max-trace stage may then stall; the outer factor of a slightly
    // lifted F is a good start for the Newton iteration on F itself.
    let bump = ScalarPoly::<Complex64>::scalar(vec![c1(), c0(), c1()]).pow(half);
    for eps in [1e-6, 1e-3] {
        if residual <= 1e-10 * scale {
            break;
        }
        let lifted = ff.add(&MatrixPoly::identity(n).mul_scalar_poly(&bump).scale(&Complex64::new(eps * scale, 0.0)))?;
        if let Ok((g2, r2)) = attempt(&lifted, &ff, half, tol) {
            if r2 < residual {
                g = g2;
                residual = r2;
            }
        }
    }
    Ok(FejerRiesz {
        g: to_poly(&g, n),
        residual,
    })
}

fn c0() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn c1() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Factors `source` through the Gram problem, then refines against `target`.
fn attempt(
    source: &MatrixPoly<Complex64>,
    target: &MatrixPoly<Complex64>,
    half: usize,
    tol: f64,
) -> Result<(Vec<DMatrix<Complex64>>, f64), CertError> {
    let n = source.size();
    let deg = 2 * half;
    let t = TruncatedPreordering::new(Description::default(), n, deg, Kind::Preordering);
    let mut p = gram_constraints(source, n, deg, &t.layout());
    p.objective = Some(outer_objective(n, half));
    let out = sdp::solve(&p, tol, sdp::DEFAULT_MAX_ITER)?;
    let y = match out.status {
        SdpStatus::Feasible => out.primal.expect("feasible outcome carries a primal")[0].clone(),
        SdpStatus::Infeasible => return Err(CertError::NotPsd),
        SdpStatus::Indeterminate => return Err(CertError::Unknown(out.diagnostics.message)),
    };
    let mut g = leading_factor(&gram_from_real(&y), n);
    let mut residual = residual_of(target, &g);
    let scale = target.max_abs_coeff().max(1.0);
    for _ in 0..100 {
        if residual <= 1e-14 * scale {
            break;
        }
        let Some(step) = gauss_newton_step(target, &g) else { break };
        // backtracking: near a singular solution full steps can overshoot
        let mut improved = false;
        let mut alpha = 1.0;
        for _ in 0..8 {
            let next: Vec<_> = g.iter().zip(&step).map(|(a, b)| a + b * Complex64::new(alpha, 0.0)).collect();
            let r = residual_of(target, &next);
            if r < residual {
                g = next;
                residual = r;
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if !improved {
            break;
        }
    }
    Ok((g, residual))
}

/// `−½⟨φ(C), Y⟩` with `C = (v(i)⊗I)(v(i)⊗I)*` and
/// `φ(C) = [[Re C, −Im C], [Im C, Re C]]`, so that minimizing it maximizes
/// `tr(C Q)`.
fn outer_objective(n: usize, half: usize) -> Vec<Entry> {
    let big = n * (half + 1);
    let powers: Vec<Complex64> = (0..=half)
        .map(|a| Complex64::new(0.0, 1.0).powu(a as u32))
        .collect();
    let c = DMatrix::from_fn(big, big, |p, q| {
        if p % n == q % n {
            powers[p / n] * powers[q / n].conj()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let phi = DMatrix::from_fn(2 * big, 2 * big, |r, s| {
        let (rb, sb) = (r / big, s / big);
        let v = c[(r % big, s % big)];
        match (rb, sb) {
            (0, 0) | (1, 1) => v.re,
            (0, 1) => -v.im,
            _ => v.im,
        }
    });
    let mut out = Vec::new();
    for r in 0..2 * big {
        for s in r..2 * big {
            if phi[(r, s)] != 0.0 {
                out.push(Entry::new(0, r, s, -0.5 * phi[(r, s)]));
            }
        }
    }
    out
}

/// `R = √Λ U*` from the `n` largest eigenpairs, split into coefficient blocks.
fn leading_factor(q: &DMatrix<Complex64>, n: usize) -> Vec<DMatrix<Complex64>> {
    let big = q.nrows();
    let eig = SymmetricEigen::new((q + q.adjoint()) * Complex64::new(0.5, 0.0));
    let mut order: Vec<usize> = (0..big).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut r = DMatrix::<Complex64>::zeros(n, big);
    for (row, &k) in order.iter().take(n).enumerate() {
        let s = eig.eigenvalues[k].max(0.0).sqrt();
        for col in 0..big {
            r[(row, col)] = eig.eigenvectors[(col, k)].conj() * s;
        }
    }
    (0..big / n).map(|a| r.columns(a * n, n).into_owned()).collect()
}

fn to_poly(g: &[DMatrix<Complex64>], n: usize) -> MatrixPoly<Complex64> {
    let coeffs = g
        .iter()
        .map(|m| Mat::from_fn(n, |i, j| m[(i, j)]))
        .collect();
    MatrixPoly::from_coeffs(n, coeffs).expect("sizes agree")
}

fn hermitian_square(g: &[DMatrix<Complex64>]) -> Vec<DMatrix<Complex64>> {
    let n = g[0].nrows();
    let mut out = vec![DMatrix::zeros(n, n); 2 * g.len() - 1];
    for (a, ga) in g.iter().enumerate() {
        for (b, gb) in g.iter().enumerate() {
            out[a + b] += ga.adjoint() * gb;
        }
    }
    out
}

fn residual_of(f: &MatrixPoly<Complex64>, g: &[DMatrix<Complex64>]) -> f64 {
    let n = f.size();
    let gg = hermitian_square(g);
    let len = gg.len().max(f.coeffs().len());
    let mut worst: f64 = 0.0;
    for m in 0..len {
        let fm = f.coeff(m);
        for i in 0..n {
            for j in 0..n {
                let v = gg.get(m).map_or(Complex64::new(0.0, 0.0), |c| c[(i, j)]);
                worst = worst.max((*fm.get(i, j) - v).norm());
            }
        }
    }
    worst
}

/// Least-norm Gauss–Newton correction for `G*G = F` over the real and imaginary
/// parts of the coefficients of `G`.
fn gauss_newton_step(f: &MatrixPoly<Complex64>, g: &[DMatrix<Complex64>]) -> Option<Vec<DMatrix<Complex64>>> {
    let n = f.size();
    let k = g.len();
    let terms = 2 * k - 1;
    let rows = terms * n * n * 2;
    let cols = k * n * n * 2;
    let gg = hermitian_square(g);
    let mut rhs = nalgebra::DVector::<f64>::zeros(rows);
    for m in 0..terms {
        let fm = f.coeff(m);
        for i in 0..n {
            for j in 0..n {
                let r = *fm.get(i, j) - gg[m][(i, j)];
                let base = ((m * n + i) * n + j) * 2;
                rhs[base] = r.re;
                rhs[base + 1] = r.im;
            }
        }
    }
    let mut jac = DMatrix::<f64>::zeros(rows, cols);
    for a in 0..k {
        for i in 0..n {
            for j in 0..n {
                for part in 0..2 {
                    let e = if part == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 1.0) };
                    let col = ((a * n + i) * n + j) * 2 + part;
                    // δ_m = E_a* G_b + G_b* E_a with E_a = e·E_ij, m = a + b
                    for (b, gb) in g.iter().enumerate() {
                        let m = a + b;
                        let mut delta = DMatrix::<Complex64>::zeros(n, n);
                        for l in 0..n {
                            delta[(j, l)] += e.conj() * gb[(i, l)];
                            delta[(l, j)] += gb[(i, l)].conj() * e;
                        }
                        for r in 0..n {
                            for s in 0..n {
                                let base = ((m * n + r) * n + s) * 2;
                                jac[(base, col)] += delta[(r, s)].re;
                                jac[(base + 1, col)] += delta[(r, s)].im;
                            }
                        }
                    }
                }
            }
        }
    }
    let svd = jac.svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let step = svd.solve(&rhs, 1e-12 * smax.max(1e-300)).ok()?;
    Some(
        (0..k)
            .map(|a| {
                DMatrix::from_fn(n, n, |i, j| {
                    let col = ((a * n + i) * n + j) * 2;
                    Complex64::new(step[col], step[col + 1])
                })
            })
            .collect(),
    )
}
