//! Denominator search: the smallest `k` with
//! `((x − w̄)(x − w))^k · F ∈ T^n_{S,d(k)}`.

use num_traits::Zero;
use serde_json::{json, Value};

use super::{check_membership, CertError, Certificate, Kind, MembershipStatus, TruncatedPreordering};
use crate::polymat::{MatrixPoly, ScalarPoly};
use crate::scalar::{Cq, Scalar};
use crate::sdp;
use crate::semialg::Description;

/// Degree bound per rung of the `k`-ladder.
#[derive(Debug, Clone, PartialEq)]
pub enum DegreeSchedule {
    /// `d(k) = deg F + 2k + 2·s_max`, `s_max` the largest weight degree.
    Default,
    /// `d(k) = list[min(k, len − 1)]`, raised to `deg F + 2k` when smaller.
    Explicit(Vec<usize>),
}

impl DegreeSchedule {
    pub fn degree(&self, k: usize, deg_f: usize, s_max: usize) -> usize {
        let floor = deg_f + 2 * k;
        match self {
            DegreeSchedule::Default => floor + 2 * s_max,
            DegreeSchedule::Explicit(list) => match list.last() {
                Some(_) => list[k.min(list.len() - 1)].max(floor),
                None => floor + 2 * s_max,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenomOptions {
    pub kind: Kind,
    pub k_max: usize,
    pub schedule: DegreeSchedule,
    pub tol: f64,
    /// Retry once at `2·d(k)` when a rung is UNKNOWN.
    pub double_on_unknown: bool,
}

impl Default for DenomOptions {
    fn default() -> Self {
        DenomOptions {
            kind: Kind::Preordering,
            k_max: 12,
            schedule: DegreeSchedule::Default,
            tol: sdp::DEFAULT_TOL,
            double_on_unknown: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenomAttempt {
    pub k: usize,
    pub d: usize,
    pub status: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DenomOutcome {
    Found {
        k: usize,
        d: usize,
        /// `((x − w̄)(x − w))^k`
        multiplier: ScalarPoly<Cq>,
        certificate: Certificate,
    },
    /// No rung up to `k_max` produced a verified certificate. This is not
    /// a statement that no `k` exists.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenomReport {
    pub outcome: DenomOutcome,
    pub attempts: Vec<DenomAttempt>,
}

impl DenomReport {
    pub fn to_json(&self) -> Value {
        let attempts: Vec<Value> = self
            .attempts
            .iter()
            .map(|a| json!({"k": a.k, "d": a.d, "status": a.status}))
            .collect();
        match &self.outcome {
            DenomOutcome::Found {
                k,
                d,
                multiplier,
                certificate,
            } => json!({
                "status": "FOUND",
                "k": k,
                "d": d,
                "multiplier": multiplier.to_json(),
                "certificate": certificate.to_json(),
                "attempts": attempts,
            }),
            DenomOutcome::Exhausted => json!({"status": "EXHAUSTED", "attempts": attempts}),
        }
    }
}

/// `(x − w̄)(x − w) = x² − 2 Re(w)·x + |w|²`.
pub fn denominator_factor(w: &Cq) -> ScalarPoly<Cq> {
    let re = Cq::new(w.re.clone(), Zero::zero());
    let norm = Cq::new(&w.re * &w.re + &w.im * &w.im, Zero::zero());
    ScalarPoly::scalar(vec![norm, -(re.clone() + re), Cq::from_i64(1)])
}

pub fn denominator_search<T: Scalar>(
    f: &MatrixPoly<T>,
    s: &Description,
    w: &Cq,
    opts: &DenomOptions,
) -> Result<DenomReport, CertError> {
    if w.im.is_zero() {
        return Err(CertError::RealDenominator);
    }
    let n = f.size();
    let deg_f = f.degree().unwrap_or(0);
    let s_max = TruncatedPreordering::new(s.clone(), n, 0, opts.kind).max_weight_degree();
    let q = denominator_factor(w);
    let q_t = q.map_scalars(T::from_cq);
    let mut attempts = Vec::new();
    let mut product = f.clone();
    for k in 0..=opts.k_max {
        if k > 0 {
            product = product.mul_scalar_poly(&q_t);
        }
        let d0 = opts.schedule.degree(k, deg_f, s_max);
        let mut degrees = vec![d0];
        if opts.double_on_unknown {
            degrees.push(2 * d0);
        }
        for d in degrees {
            let t = TruncatedPreordering::new(s.clone(), n, d, opts.kind);
            let report = check_membership(&product, &t, opts.tol)?;
            attempts.push(DenomAttempt {
                k,
                d,
                status: report.status.as_str(),
            });
            match report.status {
                MembershipStatus::Member(certificate) => {
                    return Ok(DenomReport {
                        outcome: DenomOutcome::Found {
                            k,
                            d,
                            multiplier: q.pow(k),
                            certificate,
                        },
                        attempts,
                    });
                }
                MembershipStatus::NotMemberAtDegree(_) => break,
                MembershipStatus::Unknown(_) => {}
            }
        }
    }
    Ok(DenomReport {
        outcome: DenomOutcome::Exhausted,
        attempts,
    })
}
