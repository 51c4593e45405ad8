//! Infeasible-start primal-dual interior-point method with NT scaling and
//! Mehrotra predictor-corrector steps, plus free scalar variables.
//!
//! Standard form: minimize `⟨C, X⟩ + c_fᵀt` subject to
//! `A(X) + F t = b`, `X ⪰ 0` (block diagonal), `t` free.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen, LU};

use super::check::{verify_primal, verify_witness};
use super::{add_scaled, canonical, inner, Diagnostics, SdpOutcome, SdpProblem, SdpStatus, Sparse};

/// Penalty on the elastic slacks of the phase-1 program.
const ELASTIC_PENALTY: f64 = 1e5;

struct Core {
    blocks: Vec<usize>,
    rows: Vec<Sparse>,
    b: DVector<f64>,
    /// One column per free variable.
    free: Vec<DVector<f64>>,
    cfree: Vec<f64>,
    c: Sparse,
}

#[derive(Clone)]
struct Iterate {
    x: Vec<DMatrix<f64>>,
    s: Vec<DMatrix<f64>>,
    y: DVector<f64>,
    t: Vec<f64>,
}

struct RunInfo {
    iterations: usize,
    /// Iterate with the smallest combined infeasibility and gap.
    best: Option<Iterate>,
    converged: bool,
    stopped: bool,
}

fn frob2(a: &Sparse) -> f64 {
    a.iter().map(|&(_, i, j, v)| if i == j { v * v } else { 2.0 * v * v }).sum()
}

fn dot_blocks(a: &[DMatrix<f64>], b: &[DMatrix<f64>]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.dot(y)).sum()
}

fn sym(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// Largest `α` keeping `X + α ΔX ⪰ 0`, given the Cholesky factor of `X`.
fn max_step(l: &DMatrix<f64>, dx: &DMatrix<f64>) -> f64 {
    let Some(a1) = l.solve_lower_triangular(dx) else {
        return 0.0;
    };
    let Some(b) = l.solve_lower_triangular(&a1.transpose()) else {
        return 0.0;
    };
    let lam = SymmetricEigen::new(sym(&b))
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if lam < 0.0 {
        -1.0 / lam
    } else {
        f64::INFINITY
    }
}

struct Scaling {
    g: DMatrix<f64>,
    ginv: DMatrix<f64>,
    w: DMatrix<f64>,
    v: DVector<f64>,
}

fn nt_scaling(lx: &DMatrix<f64>, ls: &DMatrix<f64>) -> Option<Scaling> {
    let svd = (ls.transpose() * lx).svd(true, true);
    let v_t = svd.v_t?;
    let sv = svd.singular_values;
    if sv.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
        return None;
    }
    let n = sv.len();
    let vmat = v_t.transpose();
    let lv = lx * &vmat;
    let g = DMatrix::from_fn(n, n, |i, j| lv[(i, j)] / sv[j].sqrt());
    let linv = lx.clone().try_inverse()?;
    let vtl = &v_t * linv;
    let ginv = DMatrix::from_fn(n, n, |i, j| vtl[(i, j)] * sv[i].sqrt());
    let w = &g * g.transpose();
    Some(Scaling {
        g,
        ginv,
        w: sym(&w),
        v: sv,
    })
}

impl Core {
    fn m(&self) -> usize {
        self.rows.len()
    }

    fn apply(&self, x: &[DMatrix<f64>]) -> DVector<f64> {
        DVector::from_iterator(self.m(), self.rows.iter().map(|r| inner(r, x)))
    }

    fn adjoint(&self, y: &DVector<f64>) -> Vec<DMatrix<f64>> {
        let mut out: Vec<_> = self.blocks.iter().map(|&n| DMatrix::zeros(n, n)).collect();
        for (r, &yc) in self.rows.iter().zip(y.iter()) {
            add_scaled(&mut out, r, yc);
        }
        out
    }

    fn c_dense(&self) -> Vec<DMatrix<f64>> {
        let mut out: Vec<_> = self.blocks.iter().map(|&n| DMatrix::zeros(n, n)).collect();
        add_scaled(&mut out, &self.c, 1.0);
        out
    }

    fn free_times(&self, t: &[f64]) -> DVector<f64> {
        let mut out = DVector::zeros(self.m());
        for (f, &tk) in self.free.iter().zip(t) {
            out.axpy(tk, f, 1.0);
        }
        out
    }

    /// Schur complement `M_ij = ⟨A_i, W A_j W⟩`.
    fn schur(&self, scal: &[Scaling]) -> DMatrix<f64> {
        let m = self.m();
        let mut by_block: Vec<Vec<(usize, Vec<(usize, usize, f64)>)>> = vec![Vec::new(); self.blocks.len()];
        for (c, r) in self.rows.iter().enumerate() {
            let mut per: Vec<Vec<(usize, usize, f64)>> = vec![Vec::new(); self.blocks.len()];
            for &(b, i, j, v) in r {
                per[b].push((i, j, v));
            }
            for (b, es) in per.into_iter().enumerate() {
                if !es.is_empty() {
                    by_block[b].push((c, es));
                }
            }
        }
        let mut mm = DMatrix::zeros(m, m);
        for (b, rows) in by_block.iter().enumerate() {
            let w = &scal[b].w;
            let n = self.blocks[b];
            for (jj, (cj, ej)) in rows.iter().enumerate() {
                // A_j W, then P = W A_j W
                let mut aw = DMatrix::zeros(n, n);
                for &(i, k, v) in ej {
                    for col in 0..n {
                        aw[(i, col)] += v * w[(k, col)];
                    }
                    if i != k {
                        for col in 0..n {
                            aw[(k, col)] += v * w[(i, col)];
                        }
                    }
                }
                let p = w * aw;
                for (ci, ei) in rows[jj..].iter() {
                    let val: f64 = ei
                        .iter()
                        .map(|&(i, k, u)| if i == k { u * p[(i, k)] } else { u * (p[(i, k)] + p[(k, i)]) })
                        .sum();
                    mm[(*ci, *cj)] += val;
                    if ci != cj {
                        mm[(*cj, *ci)] += val;
                    }
                }
            }
        }
        mm
    }

    fn initial(&self) -> Iterate {
        let nmax = *self.blocks.iter().max().unwrap_or(&1) as f64;
        let mut xi: f64 = 10.0f64.max(nmax.sqrt());
        let mut eta: f64 = 10.0f64.max(nmax.sqrt());
        for (r, bc) in self.rows.iter().zip(self.b.iter()) {
            let na = frob2(r).sqrt();
            xi = xi.max(nmax * (1.0 + bc.abs()) / (1.0 + na));
            eta = eta.max(na);
        }
        eta = eta.max(frob2(&self.c).sqrt());
        Iterate {
            x: self.blocks.iter().map(|&n| DMatrix::identity(n, n) * xi).collect(),
            s: self.blocks.iter().map(|&n| DMatrix::identity(n, n) * eta).collect(),
            y: DVector::zeros(self.m()),
            t: vec![0.0; self.free.len()],
        }
    }

    fn run(&self, tol: f64, max_iter: usize, hook: &mut dyn FnMut(&Iterate) -> bool) -> (Iterate, RunInfo) {
        let mut it = self.initial();
        let ntot: f64 = self.blocks.iter().sum::<usize>() as f64;
        let cd = self.c_dense();
        let bnorm = self.b.norm();
        let cnorm = frob2(&self.c).sqrt() + self.cfree.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut best_score = f64::INFINITY;
        let mut info = RunInfo {
            iterations: 0,
            best: None,
            converged: false,
            stopped: false,
        };
        let mut stall = 0;
        for iter in 0..max_iter {
            info.iterations = iter;
            if hook(&it) {
                info.stopped = true;
                return (it, info);
            }
            let lx: Option<Vec<DMatrix<f64>>> =
                it.x.iter().map(|x| Cholesky::new(sym(x)).map(|c| c.l())).collect();
            let ls: Option<Vec<DMatrix<f64>>> =
                it.s.iter().map(|s| Cholesky::new(sym(s)).map(|c| c.l())).collect();
            let (Some(lx), Some(ls)) = (lx, ls) else { break };

            let rp = &self.b - self.apply(&it.x) - self.free_times(&it.t);
            let aty = self.adjoint(&it.y);
            let rd: Vec<DMatrix<f64>> = (0..self.blocks.len()).map(|b| &cd[b] - &aty[b] - &it.s[b]).collect();
            let rf: Vec<f64> = self
                .free
                .iter()
                .zip(&self.cfree)
                .map(|(f, c)| c - f.dot(&it.y))
                .collect();
            let xs = dot_blocks(&it.x, &it.s);
            let mu = xs / ntot;
            let pobj = dot_blocks(&cd, &it.x) + self.cfree.iter().zip(&it.t).map(|(c, t)| c * t).sum::<f64>();
            let dobj = self.b.dot(&it.y);
            let pinf = rp.norm() / (1.0 + bnorm);
            let dinf = (rd.iter().map(|m| m.norm_squared()).sum::<f64>().sqrt()
                + rf.iter().map(|v| v * v).sum::<f64>().sqrt())
                / (1.0 + cnorm);
            let gap = xs / (1.0 + pobj.abs() + dobj.abs());
            let score = pinf.max(dinf).max(gap);
            if score < best_score {
                best_score = score;
                info.best = Some(it.clone());
            }
            if pinf < tol && dinf < tol && gap < tol {
                info.converged = true;
                return (it, info);
            }

            let Some(scal) = lx
                .iter()
                .zip(&ls)
                .map(|(a, b)| nt_scaling(a, b))
                .collect::<Option<Vec<_>>>()
            else {
                break;
            };
            let mmat = self.schur(&scal);
            let Some(solver) = SchurSolver::new(mmat, &self.free) else { break };

            let wrdw: Vec<DMatrix<f64>> = scal.iter().zip(&rd).map(|(s, r)| &s.w * r * &s.w).collect();
            let a_wrdw = self.apply(&wrdw);

            let direction = |rcs: Vec<DMatrix<f64>>| {
                let rc: Vec<DMatrix<f64>> = scal.iter().zip(&rcs).map(|(s, r)| &s.g * r * s.g.transpose()).collect();
                let rhs = &rp - self.apply(&rc) + &a_wrdw;
                let (dy, dt) = solver.solve(&rhs, &rf);
                let atdy = self.adjoint(&dy);
                let ds: Vec<DMatrix<f64>> = rd.iter().zip(&atdy).map(|(r, a)| r - a).collect();
                let dx: Vec<DMatrix<f64>> = rc
                    .iter()
                    .zip(&ds)
                    .zip(&scal)
                    .map(|((r, d), s)| sym(&(r - &s.w * d * &s.w)))
                    .collect();
                (dx, dy, ds, dt)
            };
            let rcs_for = |target: f64, corr: Option<&[DMatrix<f64>]>| -> Vec<DMatrix<f64>> {
                scal.iter()
                    .enumerate()
                    .map(|(b, s)| {
                        let n = s.v.len();
                        DMatrix::from_fn(n, n, |i, j| {
                            let mut m = if i == j { target - s.v[i] * s.v[i] } else { 0.0 };
                            if let Some(c) = corr {
                                m -= c[b][(i, j)];
                            }
                            2.0 * m / (s.v[i] + s.v[j])
                        })
                    })
                    .collect()
            };
            let steps = |dx: &[DMatrix<f64>], ds: &[DMatrix<f64>]| {
                let ap = lx.iter().zip(dx).map(|(l, d)| max_step(l, d)).fold(f64::INFINITY, f64::min);
                let ad = ls.iter().zip(ds).map(|(l, d)| max_step(l, d)).fold(f64::INFINITY, f64::min);
                (ap, ad)
            };

            // predictor
            let (dxa, _, dsa, _) = direction(rcs_for(0.0, None));
            let (ap, ad) = steps(&dxa, &dsa);
            let (ap, ad) = (ap.min(1.0), ad.min(1.0));
            let mut xs_aff = 0.0;
            for b in 0..self.blocks.len() {
                let xa = &it.x[b] + &dxa[b] * ap;
                let sa = &it.s[b] + &dsa[b] * ad;
                xs_aff += xa.dot(&sa);
            }
            let sigma = ((xs_aff / ntot) / mu).powi(3).clamp(0.0, 1.0);

            // corrector
            let corr: Vec<DMatrix<f64>> = scal
                .iter()
                .enumerate()
                .map(|(b, s)| {
                    let dxs = &s.ginv * &dxa[b] * s.ginv.transpose();
                    let dss = s.g.transpose() * &dsa[b] * &s.g;
                    sym(&(&dxs * &dss))
                })
                .collect();
            let (dx, dy, ds, dt) = direction(rcs_for(sigma * mu, Some(&corr)));
            let (ap, ad) = steps(&dx, &ds);
            let gamma = 0.95;
            let ap = (gamma * ap).min(1.0);
            let ad = (gamma * ad).min(1.0);
            if !ap.is_finite() || !ad.is_finite() || dy.iter().any(|v| !v.is_finite()) {
                break;
            }
            for b in 0..self.blocks.len() {
                it.x[b] = sym(&(&it.x[b] + &dx[b] * ap));
                it.s[b] = sym(&(&it.s[b] + &ds[b] * ad));
            }
            it.y.axpy(ad, &dy, 1.0);
            for (t, d) in it.t.iter_mut().zip(&dt) {
                *t += ap * d;
            }
            if ap < 1e-9 && ad < 1e-9 {
                stall += 1;
                if stall >= 3 {
                    break;
                }
            } else {
                stall = 0;
            }
            info.iterations = iter + 1;
        }
        if hook(&it) {
            info.stopped = true;
        }
        (it, info)
    }
}

/// Solves `[[M, F], [Fᵀ, 0]] [dy; dt] = [r; r_f]`. `M` alone may be
/// singular when the free columns carry the missing rank, so the whole
/// saddle matrix is factored.
struct SchurSolver {
    m: usize,
    lu: LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
}

impl SchurSolver {
    fn new(mm: DMatrix<f64>, free: &[DVector<f64>]) -> Option<Self> {
        let m = mm.nrows();
        let k = free.len();
        let maxdiag = (0..m).map(|i| mm[(i, i)].abs()).fold(0.0, f64::max).max(1e-300);
        for reg in [0.0, 1e-14, 1e-12, 1e-10] {
            let mut kk = DMatrix::zeros(m + k, m + k);
            kk.view_mut((0, 0), (m, m)).copy_from(&mm);
            for i in 0..m {
                kk[(i, i)] += reg * maxdiag;
            }
            for (c, f) in free.iter().enumerate() {
                for i in 0..m {
                    kk[(i, m + c)] = f[i];
                    kk[(m + c, i)] = f[i];
                }
            }
            let lu = LU::new(kk);
            if lu.is_invertible() {
                let probe = lu.solve(&DVector::from_element(m + k, 1.0));
                if probe.is_some_and(|p| p.iter().all(|v| v.is_finite())) {
                    return Some(SchurSolver { m, lu });
                }
            }
        }
        None
    }

    fn solve(&self, r: &DVector<f64>, rf: &[f64]) -> (DVector<f64>, Vec<f64>) {
        let mut rhs = DVector::zeros(self.m + rf.len());
        rhs.rows_mut(0, self.m).copy_from(r);
        for (i, v) in rf.iter().enumerate() {
            rhs[self.m + i] = *v;
        }
        match self.lu.solve(&rhs) {
            Some(sol) => (
                DVector::from_iterator(self.m, sol.iter().take(self.m).cloned()),
                sol.iter().skip(self.m).cloned().collect(),
            ),
            None => (DVector::from_element(self.m, f64::NAN), vec![f64::NAN; rf.len()]),
        }
    }
}

/// Least-norm correction of the equation residual: `X + Aᵀ(AAᵀ)⁺(b − A(X))`,
/// applied twice.
fn polish(p: &SdpProblem, canon: &[Sparse], x: &[DMatrix<f64>]) -> Vec<DMatrix<f64>> {
    let m = canon.len();
    let mut by_pos: std::collections::BTreeMap<(usize, usize, usize), Vec<(usize, f64)>> = Default::default();
    for (c, row) in canon.iter().enumerate() {
        for &(b, i, j, v) in row {
            by_pos.entry((b, i, j)).or_default().push((c, v));
        }
    }
    let mut gram = DMatrix::zeros(m, m);
    for ((_, i, j), list) in &by_pos {
        let w = if i == j { 1.0 } else { 2.0 };
        for &(a, va) in list {
            for &(b, vb) in list {
                gram[(a, b)] += w * va * vb;
            }
        }
    }
    let svd = gram.svd(true, true);
    let mut out = x.to_vec();
    for _ in 0..2 {
        let r = DVector::from_iterator(
            m,
            canon.iter().zip(&p.constraints).map(|(row, c)| c.rhs - inner(row, &out)),
        );
        let Ok(lam) = svd.solve(&r, 1e-12 * svd.singular_values.max()) else {
            return x.to_vec();
        };
        for (row, l) in canon.iter().zip(lam.iter()) {
            add_scaled(&mut out, row, *l);
        }
    }
    out
}

/// Maximizes `s` over `Σ y_c A_c ⪯ −sI`, `bᵀy = 1`, posed in primal form
/// `min −τ` s.t. `A(X) − τb = 0`, `tr X = 1`, `X ⪰ 0` (plus elastic slacks),
/// and returns the first dual iterate that passes the witness check.
fn alternative_witness(
    p: &SdpProblem,
    rows: &[Sparse],
    kept: &[usize],
    norms: &[f64],
    b: &DVector<f64>,
    tol: f64,
    max_iter: usize,
) -> Option<Vec<f64>> {
    let nb = p.blocks.len();
    let k = rows.len();
    let mut blocks = p.blocks.clone();
    let mut rows2 = Vec::with_capacity(k + 1);
    let mut cost = Vec::with_capacity(2 * k);
    for row in rows {
        let base = blocks.len();
        blocks.push(1);
        blocks.push(1);
        let mut r = row.clone();
        r.push((base, 0, 0, 1.0));
        r.push((base + 1, 0, 0, -1.0));
        cost.push((base, 0, 0, ELASTIC_PENALTY));
        cost.push((base + 1, 0, 0, ELASTIC_PENALTY));
        rows2.push(r);
    }
    let ntot: usize = p.blocks.iter().sum();
    let scale = 1.0 / (ntot as f64).sqrt();
    let trace: Sparse = (0..nb)
        .flat_map(|bk| (0..p.blocks[bk]).map(move |i| (bk, i, i, scale)))
        .collect();
    rows2.push(trace);
    let mut fcol: Vec<f64> = (0..k).map(|c| -b[c]).collect();
    fcol.push(0.0);
    let mut rhs = vec![0.0; k];
    rhs.push(scale);
    let core = Core {
        blocks,
        rows: rows2,
        b: DVector::from_vec(rhs),
        free: vec![DVector::from_vec(fcol)],
        cfree: vec![-1.0],
        c: cost,
    };
    let m_all = p.constraints.len();
    let mut found = None;
    let mut hook = |it: &Iterate| -> bool {
        let mut y = vec![0.0; m_all];
        for (j, &c) in kept.iter().enumerate() {
            y[c] = it.y[j] / norms[j];
        }
        let nrm = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if nrm == 0.0 || !nrm.is_finite() {
            return false;
        }
        y.iter_mut().for_each(|v| *v /= nrm);
        if verify_witness(p, &y).ok {
            found = Some(y);
            return true;
        }
        false
    };
    core.run(tol, max_iter, &mut hook);
    found
}

fn min_eig(blocks: &[DMatrix<f64>]) -> f64 {
    blocks
        .iter()
        .map(|m| SymmetricEigen::new(sym(m)).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min))
        .fold(f64::INFINITY, f64::min)
}

pub(super) fn solve(p: &SdpProblem, tol: f64, max_iter: usize) -> SdpOutcome {
    let nb = p.blocks.len();
    let m_all = p.constraints.len();
    let canon: Vec<Sparse> = p.constraints.iter().map(|c| canonical(&c.entries)).collect();

    // an empty row with nonzero right-hand side is inconsistent on its own
    for (c, (row, con)) in canon.iter().zip(&p.constraints).enumerate() {
        if row.is_empty() && con.rhs != 0.0 {
            let mut y = vec![0.0; m_all];
            y[c] = con.rhs.signum();
            return SdpOutcome {
                status: SdpStatus::Infeasible,
                primal: None,
                witness: Some(y),
                diagnostics: Diagnostics {
                    message: format!("constraint {c} has no coefficients but right-hand side {}", con.rhs),
                    ..Default::default()
                },
            };
        }
    }
    let kept: Vec<usize> = (0..m_all).filter(|&c| !canon[c].is_empty()).collect();

    let mut rows = Vec::with_capacity(kept.len() + 1);
    let mut fcol = Vec::with_capacity(kept.len() + 1);
    let mut bvec = Vec::with_capacity(kept.len() + 1);
    let mut norms = Vec::with_capacity(kept.len());
    for &c in &kept {
        let row = &canon[c];
        let a: f64 = row.iter().filter(|e| e.1 == e.2).map(|e| e.3).sum();
        let nrm = (frob2(row) + a * a).sqrt();
        rows.push(row.iter().map(|&(b, i, j, v)| (b, i, j, v / nrm)).collect::<Sparse>());
        fcol.push(a / nrm);
        bvec.push(p.constraints[c].rhs / nrm);
        norms.push(nrm);
    }
    let sb = bvec.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let sb = if sb > 0.0 { sb } else { 1.0 };
    for v in &mut bvec {
        *v /= sb;
    }
    // margin cap t + w = 1
    rows.push(vec![(nb, 0, 0, 1.0)]);
    fcol.push(1.0);
    bvec.push(1.0);
    let mut blocks1 = p.blocks.clone();
    blocks1.push(1);
    // elastic slacks keep the program feasible even when the equations are
    // inconsistent; the penalty also bounds the multipliers
    let mut cost = Vec::with_capacity(2 * kept.len());
    let plain_rows: Vec<Sparse> = rows[..kept.len()].to_vec();
    for row in rows.iter_mut().take(kept.len()) {
        let base = blocks1.len();
        blocks1.push(1);
        blocks1.push(1);
        row.push((base, 0, 0, 1.0));
        row.push((base + 1, 0, 0, -1.0));
        cost.push((base, 0, 0, ELASTIC_PENALTY));
        cost.push((base + 1, 0, 0, ELASTIC_PENALTY));
    }
    let core = Core {
        blocks: blocks1,
        rows,
        b: DVector::from_vec(bvec),
        free: vec![DVector::from_vec(fcol)],
        cfree: vec![-1.0],
        c: cost,
    };

    let to_original = |y: &DVector<f64>| -> Vec<f64> {
        let mut out = vec![0.0; m_all];
        for (k, &c) in kept.iter().enumerate() {
            out[c] = y[k] / norms[k];
        }
        let nrm = out.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if nrm > 0.0 {
            out.iter_mut().for_each(|v| *v /= nrm);
        }
        out
    };
    let mut witness: Option<Vec<f64>> = None;
    let mut hook = |it: &Iterate| -> bool {
        let dual_obj: f64 = (0..kept.len()).map(|k| core.b[k] * it.y[k]).sum();
        if dual_obj <= 0.0 {
            return false;
        }
        let y = to_original(&it.y);
        if verify_witness(p, &y).ok {
            witness = Some(y);
            return true;
        }
        false
    };
    let inner_tol = (tol * 0.1).max(1e-13);
    let (it, info) = core.run(inner_tol, max_iter, &mut hook);

    let mut diag = Diagnostics {
        iterations: info.iterations,
        margin: it.t.first().copied(),
        ..Default::default()
    };
    if let Some(y) = witness {
        let wc = verify_witness(p, &y);
        diag.message = format!(
            "Farkas witness: max eigenvalue {:.3e}, rhs value {:.3e}",
            wc.max_eigenvalue, wc.rhs_value
        );
        return SdpOutcome {
            status: SdpStatus::Infeasible,
            primal: None,
            witness: Some(y),
            diagnostics: diag,
        };
    }

    let margin = it.t[0];
    if margin < -tol || !info.converged {
        if let Some(y) = alternative_witness(p, &plain_rows, &kept, &norms, &core.b, inner_tol, max_iter) {
            let wc = verify_witness(p, &y);
            diag.message = format!(
                "Farkas witness from the alternative program: max eigenvalue {:.3e}, rhs value {:.3e}",
                wc.max_eigenvalue, wc.rhs_value
            );
            return SdpOutcome {
                status: SdpStatus::Infeasible,
                primal: None,
                witness: Some(y),
                diagnostics: diag,
            };
        }
    }

    let mut accepted = None;
    let mut finals = vec![&it];
    finals.extend(info.best.as_ref());
    'search: for cand_it in finals {
        let t = cand_it.t[0];
        let z: Vec<DMatrix<f64>> = cand_it.x[..nb].iter().map(|m| m * sb).collect();
        let shifted: Vec<DMatrix<f64>> = z
            .iter()
            .map(|m| m + DMatrix::identity(m.nrows(), m.ncols()) * (t * sb))
            .collect();
        for cand in [shifted, z] {
            for c in [polish(p, &canon, &cand), cand] {
                let chk = verify_primal(p, &c, tol);
                if chk.ok {
                    accepted = Some((c, chk));
                    break 'search;
                }
            }
        }
    }
    let t = it.t[0];
    let Some((mut x, mut chk)) = accepted else {
        diag.message = format!(
            "no certificate reached tolerance (phase-1 margin {t:.3e}, converged: {})",
            info.converged
        );
        return SdpOutcome {
            status: SdpStatus::Indeterminate,
            primal: None,
            witness: None,
            diagnostics: diag,
        };
    };
    diag.message = "phase-1 point".into();

    if let Some(obj) = &p.objective {
        let c = canonical(obj);
        let cn = frob2(&c).sqrt();
        let rows2 = plain_rows.clone();
        let b2 = DVector::from_iterator(kept.len(), core.b.iter().take(kept.len()).cloned());
        let core2 = Core {
            blocks: p.blocks.clone(),
            rows: rows2,
            b: b2,
            free: Vec::new(),
            cfree: Vec::new(),
            c: if cn > 0.0 { c.iter().map(|&(b, i, j, v)| (b, i, j, v / cn)).collect() } else { c.clone() },
        };
        let (it2, info2) = core2.run(inner_tol, max_iter, &mut |_| false);
        diag.iterations += info2.iterations;
        // interior iterates are strictly definite but may miss the equations
        // slightly; polishing fixes the equations but can dent the spectrum.
        // A small step toward the phase-1 point repairs the latter.
        let mut finals2 = vec![&it2];
        finals2.extend(info2.best.as_ref());
        let mut found = None;
        'objective: for cand_it in finals2 {
            let raw: Vec<DMatrix<f64>> = cand_it.x.iter().map(|m| m * sb).collect();
            let polished = polish(p, &canon, &raw);
            for theta in [0.0, 1e-6, 1e-4, 1e-2] {
                for base in [&polished, &raw] {
                    let c: Vec<DMatrix<f64>> =
                        base.iter().zip(&x).map(|(a, b)| a * (1.0 - theta) + b * theta).collect();
                    let chk2 = verify_primal(p, &c, tol);
                    if chk2.ok {
                        found = Some((c, chk2));
                        break 'objective;
                    }
                }
            }
        }
        if let Some((x2, chk2)) = found {
            x = x2;
            chk = chk2;
            diag.message = format!("optimized (converged: {})", info2.converged);
        } else {
            diag.message = "objective stage missed tolerance; returning phase-1 point".into();
        }
        diag.objective = Some(inner(&c, &x));
    }
    diag.primal_residual = chk.residual;
    diag.min_eigenvalue = min_eig(&x);
    SdpOutcome {
        status: SdpStatus::Feasible,
        primal: Some(x),
        witness: None,
        diagnostics: diag,
    }
}
