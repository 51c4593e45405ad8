//! Dense semidefinite feasibility solver.
//!
//! Problems have the form `Σ_b ⟨A_{c,b}, X_b⟩ = r_c`, `X_b ⪰ 0`, with an
//! optional linear objective to minimize. Feasibility is decided by a
//! phase-1 program that maximizes the smallest eigenvalue margin `t` of a
//! shifted variable; its dual iterates double as Farkas certificates.

mod ipm;
pub mod check;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::json::{self as js, JsonError};
pub use check::{verify_primal, verify_witness, PrimalCheck, WitnessCheck};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITER: usize = 200;
/// Strictness required of an infeasibility witness after `‖y‖∞ = 1`.
pub const WITNESS_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SdpError {
    #[error("problem has no constraints")]
    NoConstraints,
    #[error("block sizes must be positive")]
    EmptyBlock,
    #[error("constraint {constraint} refers to block {block}, but there are {blocks} blocks")]
    BlockOutOfRange {
        constraint: usize,
        block: usize,
        blocks: usize,
    },
    #[error("constraint {constraint}: index ({i}, {j}) outside block of size {size}")]
    IndexOutOfRange {
        constraint: usize,
        i: usize,
        j: usize,
        size: usize,
    },
    #[error("coefficient matrix of constraint {0} is not symmetric")]
    NonSymmetric(usize),
    #[error("coefficient {0} is not finite")]
    NotFinite(usize),
    #[error("tolerance must be positive")]
    BadTolerance,
}

/// One coefficient `v` at `(i, j)` of a block; off-diagonal entries are
/// mirrored to `(j, i)`. Repeated positions add up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub block: usize,
    pub i: usize,
    pub j: usize,
    pub v: f64,
}

impl Entry {
    pub fn new(block: usize, i: usize, j: usize, v: f64) -> Self {
        Entry { block, i, j, v }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Constraint {
    pub entries: Vec<Entry>,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SdpProblem {
    pub blocks: Vec<usize>,
    pub constraints: Vec<Constraint>,
    /// Minimized when present.
    pub objective: Option<Vec<Entry>>,
}

/// Entries merged per `(block, min(i,j), max(i,j))`, zeros dropped.
pub(crate) type Sparse = Vec<(usize, usize, usize, f64)>;

pub(crate) fn canonical(entries: &[Entry]) -> Sparse {
    let mut map: BTreeMap<(usize, usize, usize), f64> = BTreeMap::new();
    for e in entries {
        *map.entry((e.block, e.i.min(e.j), e.i.max(e.j))).or_insert(0.0) += e.v;
    }
    map.into_iter()
        .filter(|(_, v)| *v != 0.0)
        .map(|((b, i, j), v)| (b, i, j, v))
        .collect()
}

pub(crate) fn inner(a: &Sparse, x: &[DMatrix<f64>]) -> f64 {
    a.iter()
        .map(|&(b, i, j, v)| if i == j { v * x[b][(i, j)] } else { 2.0 * v * x[b][(i, j)] })
        .sum()
}

pub(crate) fn add_scaled(out: &mut [DMatrix<f64>], a: &Sparse, s: f64) {
    for &(b, i, j, v) in a {
        out[b][(i, j)] += s * v;
        if i != j {
            out[b][(j, i)] += s * v;
        }
    }
}

impl SdpProblem {
    pub fn new(blocks: Vec<usize>) -> Self {
        SdpProblem {
            blocks,
            constraints: Vec::new(),
            objective: None,
        }
    }

    pub fn add_constraint(&mut self, entries: Vec<Entry>, rhs: f64) {
        self.constraints.push(Constraint { entries, rhs });
    }

    /// Builds a problem from dense coefficient matrices, rejecting
    /// non-symmetric input.
    pub fn from_dense(
        blocks: Vec<usize>,
        constraints: &[(Vec<DMatrix<f64>>, f64)],
        objective: Option<&[DMatrix<f64>]>,
    ) -> Result<Self, SdpError> {
        let sparse = |mats: &[DMatrix<f64>], idx: usize| -> Result<Vec<Entry>, SdpError> {
            let mut out = Vec::new();
            for (b, m) in mats.iter().enumerate() {
                if b >= blocks.len() {
                    return Err(SdpError::BlockOutOfRange {
                        constraint: idx,
                        block: b,
                        blocks: blocks.len(),
                    });
                }
                if m.nrows() != blocks[b] || m.ncols() != blocks[b] {
                    return Err(SdpError::IndexOutOfRange {
                        constraint: idx,
                        i: m.nrows(),
                        j: m.ncols(),
                        size: blocks[b],
                    });
                }
                for i in 0..m.nrows() {
                    for j in i..m.ncols() {
                        let scale = m[(i, j)].abs().max(m[(j, i)].abs()).max(1.0);
                        if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 * scale {
                            return Err(SdpError::NonSymmetric(idx));
                        }
                        if m[(i, j)] != 0.0 {
                            out.push(Entry::new(b, i, j, m[(i, j)]));
                        }
                    }
                }
            }
            Ok(out)
        };
        let mut p = SdpProblem::new(blocks.clone());
        for (c, (mats, rhs)) in constraints.iter().enumerate() {
            p.add_constraint(sparse(mats, c)?, *rhs);
        }
        if let Some(obj) = objective {
            p.objective = Some(sparse(obj, constraints.len())?);
        }
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SdpError> {
        if self.constraints.is_empty() {
            return Err(SdpError::NoConstraints);
        }
        if self.blocks.contains(&0) {
            return Err(SdpError::EmptyBlock);
        }
        let check = |entries: &[Entry], c: usize| -> Result<(), SdpError> {
            for e in entries {
                let size = *self.blocks.get(e.block).ok_or(SdpError::BlockOutOfRange {
                    constraint: c,
                    block: e.block,
                    blocks: self.blocks.len(),
                })?;
                if e.i >= size || e.j >= size {
                    return Err(SdpError::IndexOutOfRange {
                        constraint: c,
                        i: e.i,
                        j: e.j,
                        size,
                    });
                }
                if !e.v.is_finite() {
                    return Err(SdpError::NotFinite(c));
                }
            }
            Ok(())
        };
        for (c, con) in self.constraints.iter().enumerate() {
            check(&con.entries, c)?;
            if !con.rhs.is_finite() {
                return Err(SdpError::NotFinite(c));
            }
        }
        if let Some(obj) = &self.objective {
            check(obj, self.constraints.len())?;
        }
        Ok(())
    }

    /// `⟨A_c, X⟩` summed over blocks.
    pub fn apply(&self, c: usize, x: &[DMatrix<f64>]) -> f64 {
        inner(&canonical(&self.constraints[c].entries), x)
    }

    /// `Σ_c y_c A_c` as dense blocks.
    pub fn adjoint(&self, y: &[f64]) -> Vec<DMatrix<f64>> {
        let mut out: Vec<_> = self.blocks.iter().map(|&n| DMatrix::zeros(n, n)).collect();
        for (con, &yc) in self.constraints.iter().zip(y) {
            add_scaled(&mut out, &canonical(&con.entries), yc);
        }
        out
    }

    /// Sparse dump: entries are `[block, i, j, value]` with 0-based indices.
    pub fn to_json(&self) -> Value {
        let ents = |es: &[Entry]| -> Vec<Value> {
            es.iter().map(|e| json!([e.block, e.i, e.j, e.v])).collect()
        };
        json!({
            "format": "sparse-sdp",
            "blocks": self.blocks,
            "constraints": self.constraints.iter()
                .map(|c| json!({"entries": ents(&c.entries), "rhs": c.rhs}))
                .collect::<Vec<_>>(),
            "objective": self.objective.as_ref().map(|o| ents(o)),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let blocks = js::as_array(js::field(v, "blocks", "")?, "blocks")?
            .iter()
            .enumerate()
            .map(|(i, b)| js::as_usize(b, &js::index("blocks", i)))
            .collect::<Result<Vec<_>, _>>()?;
        let ents = |arr: &Value, path: &str| -> Result<Vec<Entry>, JsonError> {
            js::as_array(arr, path)?
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    let p = js::index(path, k);
                    let a = js::as_array(e, &p)?;
                    if a.len() != 4 {
                        return Err(JsonError::new(p, "expected [block, i, j, value]"));
                    }
                    Ok(Entry::new(
                        js::as_usize(&a[0], &p)?,
                        js::as_usize(&a[1], &p)?,
                        js::as_usize(&a[2], &p)?,
                        js::as_f64(&a[3], &p)?,
                    ))
                })
                .collect()
        };
        let mut p = SdpProblem::new(blocks);
        for (c, con) in js::as_array(js::field(v, "constraints", "")?, "constraints")?
            .iter()
            .enumerate()
        {
            let path = js::index("constraints", c);
            let entries = ents(js::field(con, "entries", &path)?, &js::join(&path, "entries"))?;
            let rhs = js::as_f64(js::field(con, "rhs", &path)?, &js::join(&path, "rhs"))?;
            p.add_constraint(entries, rhs);
        }
        if let Some(o) = v.get("objective").filter(|o| !o.is_null()) {
            p.objective = Some(ents(o, "objective")?);
        }
        p.validate().map_err(|e| JsonError::new("", e.to_string()))?;
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdpStatus {
    Feasible,
    Infeasible,
    Indeterminate,
}

impl SdpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SdpStatus::Feasible => "FEASIBLE",
            SdpStatus::Infeasible => "INFEASIBLE",
            SdpStatus::Indeterminate => "INDETERMINATE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Diagnostics {
    pub iterations: usize,
    /// Max constraint violation of the returned primal.
    pub primal_residual: f64,
    /// Smallest eigenvalue over all blocks of the returned primal.
    pub min_eigenvalue: f64,
    /// Optimal eigenvalue margin of the phase-1 program (in scaled units).
    pub margin: Option<f64>,
    pub objective: Option<f64>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SdpOutcome {
    pub status: SdpStatus,
    pub primal: Option<Vec<DMatrix<f64>>>,
    /// Normalized to `‖y‖∞ = 1`.
    pub witness: Option<Vec<f64>>,
    pub diagnostics: Diagnostics,
}

/// Decides feasibility (and optimizes the objective when one is given).
pub fn solve(p: &SdpProblem, tol: f64, max_iter: usize) -> Result<SdpOutcome, SdpError> {
    if !(tol > 0.0) {
        return Err(SdpError::BadTolerance);
    }
    p.validate()?;
    Ok(ipm::solve(p, tol, max_iter))
}

pub fn solve_default(p: &SdpProblem) -> Result<SdpOutcome, SdpError> {
    solve(p, DEFAULT_TOL, DEFAULT_MAX_ITER)
}
