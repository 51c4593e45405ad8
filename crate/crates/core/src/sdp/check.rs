//! Post-hoc checks of solver output that read only the problem data.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{SdpProblem, WITNESS_MARGIN};

#[derive(Debug, Clone, PartialEq)]
pub struct PrimalCheck {
    /// Largest `|⟨A_c, X⟩ − r_c|`.
    pub residual: f64,
    pub min_eigenvalue: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCheck {
    /// Largest eigenvalue of `Σ y_c A_c` over all blocks, `y` normalized.
    pub max_eigenvalue: f64,
    /// `Σ y_c r_c` for the normalized `y`.
    pub rhs_value: f64,
    /// `Σ y_c A_c` vanishes identically, so the linear equations alone are
    /// inconsistent.
    pub exact_linear: bool,
    pub ok: bool,
}

fn symmetric_eigen_extremes(m: &DMatrix<f64>) -> (f64, f64) {
    let sym = (m + m.transpose()) * 0.5;
    let ev = SymmetricEigen::new(sym).eigenvalues;
    let lo = ev.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ev.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

/// Residual `≤ tol·(1 + ‖r‖∞)` and `λ_min ≥ −tol` in every block.
pub fn verify_primal(p: &SdpProblem, x: &[DMatrix<f64>], tol: f64) -> PrimalCheck {
    let shape_ok = x.len() == p.blocks.len()
        && x.iter().zip(&p.blocks).all(|(m, &n)| m.nrows() == n && m.ncols() == n);
    if !shape_ok {
        return PrimalCheck {
            residual: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            ok: false,
        };
    }
    let mut residual: f64 = 0.0;
    let mut rmax: f64 = 0.0;
    for c in &p.constraints {
        let mut s = 0.0;
        for e in &c.entries {
            let m = &x[e.block];
            s += if e.i == e.j {
                e.v * m[(e.i, e.i)]
            } else {
                e.v * (m[(e.i, e.j)] + m[(e.j, e.i)])
            };
        }
        residual = residual.max((s - c.rhs).abs());
        rmax = rmax.max(c.rhs.abs());
    }
    let min_eigenvalue = x
        .iter()
        .map(|m| symmetric_eigen_extremes(m).0)
        .fold(f64::INFINITY, f64::min);
    let ok = residual.is_finite()
        && residual <= tol * (1.0 + rmax)
        && min_eigenvalue >= -tol;
    PrimalCheck {
        residual,
        min_eigenvalue,
        ok,
    }
}

/// Farkas check: after scaling `‖y‖∞ = 1`, `λ_max(Σ y_c A_c) ≤ −10⁻⁸` in
/// every block and `Σ y_c r_c ≥ 10⁻⁸`. A combination that cancels every
/// coefficient exactly while `Σ y_c r_c > 0` is also accepted, since then
/// no matrix at all meets the equations.
pub fn verify_witness(p: &SdpProblem, y: &[f64]) -> WitnessCheck {
    let norm = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if y.len() != p.constraints.len() || norm == 0.0 || !norm.is_finite() {
        return WitnessCheck {
            max_eigenvalue: f64::INFINITY,
            rhs_value: 0.0,
            exact_linear: false,
            ok: false,
        };
    }
    let y: Vec<f64> = y.iter().map(|v| v / norm).collect();
    let mut blocks: Vec<DMatrix<f64>> = p.blocks.iter().map(|&n| DMatrix::zeros(n, n)).collect();
    for (c, &yc) in p.constraints.iter().zip(&y) {
        for e in &c.entries {
            blocks[e.block][(e.i, e.j)] += yc * e.v;
            if e.i != e.j {
                blocks[e.block][(e.j, e.i)] += yc * e.v;
            }
        }
    }
    let rhs_value: f64 = p.constraints.iter().zip(&y).map(|(c, yc)| yc * c.rhs).sum();
    let exact_linear = blocks.iter().all(|m| m.iter().all(|v| *v == 0.0));
    let max_eigenvalue = blocks
        .iter()
        .map(|m| symmetric_eigen_extremes(m).1)
        .fold(f64::NEG_INFINITY, f64::max);
    let ok = rhs_value >= WITNESS_MARGIN && (exact_linear || max_eigenvalue <= -WITNESS_MARGIN);
    WitnessCheck {
        max_eigenvalue,
        rhs_value,
        exact_linear,
        ok,
    }
}
