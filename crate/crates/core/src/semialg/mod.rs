//! Closed semialgebraic subsets of the real line and their descriptions.

pub mod sturm;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::json::{self as js, JsonError};
use crate::polymat::ScalarPoly;
use crate::scalar::{rat_to_f64, Cq};
use sturm::{RatPoly, RealRoot};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SemialgError {
    #[error("the set is empty")]
    Empty,
    #[error("the set is not compact")]
    NonCompact,
    #[error("interval endpoints out of order: lo must not exceed hi")]
    BadInterval,
    #[error("generator {0} is not a real scalar polynomial")]
    NotRealScalar(usize),
    #[error("endpoint near {0} is irrational; enable snapping to approximate it")]
    IrrationalEndpoint(f64),
}

/// One connected component: a point or a closed interval with nonempty interior.
/// `None` bounds stand for ∓∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Point(BigRational),
    Interval {
        lo: Option<BigRational>,
        hi: Option<BigRational>,
    },
}

impl Piece {
    pub fn interval(lo: BigRational, hi: BigRational) -> Self {
        Piece::Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    pub fn lower(&self) -> Option<&BigRational> {
        match self {
            Piece::Point(a) => Some(a),
            Piece::Interval { lo, .. } => lo.as_ref(),
        }
    }

    pub fn upper(&self) -> Option<&BigRational> {
        match self {
            Piece::Point(a) => Some(a),
            Piece::Interval { hi, .. } => hi.as_ref(),
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lower().is_none_or(|l| l <= x) && self.upper().is_none_or(|h| x <= h)
    }

    pub fn is_bounded(&self) -> bool {
        self.lower().is_some() && self.upper().is_some()
    }
}

fn cmp_lower(a: Option<&BigRational>, b: Option<&BigRational>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

fn cmp_upper(a: Option<&BigRational>, b: Option<&BigRational>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

/// Canonical finite union of disjoint, separated pieces sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemialgSet {
    pieces: Vec<Piece>,
}

impl SemialgSet {
    /// Sorts and merges overlapping or touching pieces. A degenerate interval
    /// `[a, a]` becomes the point `a`.
    pub fn new(pieces: Vec<Piece>) -> Result<Self, SemialgError> {
        let mut ps = Vec::with_capacity(pieces.len());
        for p in pieces {
            match p {
                Piece::Interval {
                    lo: Some(l),
                    hi: Some(h),
                } => match l.cmp(&h) {
                    Ordering::Greater => return Err(SemialgError::BadInterval),
                    Ordering::Equal => ps.push(Piece::Point(l)),
                    Ordering::Less => ps.push(Piece::interval(l, h)),
                },
                other => ps.push(other),
            }
        }
        ps.sort_by(|a, b| cmp_lower(a.lower(), b.lower()));
        let mut out: Vec<Piece> = Vec::with_capacity(ps.len());
        for p in ps {
            if let Some(last) = out.last_mut() {
                let touches = match (last.upper(), p.lower()) {
                    (None, _) | (_, None) => true,
                    (Some(h), Some(l)) => l <= h,
                };
                if touches {
                    let lo = last.lower().cloned();
                    let hi = match cmp_upper(last.upper(), p.upper()) {
                        Ordering::Less => p.upper().cloned(),
                        _ => last.upper().cloned(),
                    };
                    *last = if lo.is_some() && lo == hi {
                        Piece::Point(lo.unwrap())
                    } else {
                        Piece::Interval { lo, hi }
                    };
                    continue;
                }
            }
            out.push(p);
        }
        Ok(SemialgSet { pieces: out })
    }

    pub fn empty() -> Self {
        SemialgSet { pieces: Vec::new() }
    }

    pub fn real_line() -> Self {
        SemialgSet {
            pieces: vec![Piece::Interval { lo: None, hi: None }],
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn is_compact(&self) -> bool {
        self.pieces.iter().all(Piece::is_bounded)
    }

    pub fn least(&self) -> Option<&BigRational> {
        self.pieces.first().and_then(Piece::lower)
    }

    pub fn greatest(&self) -> Option<&BigRational> {
        self.pieces.last().and_then(Piece::upper)
    }

    /// Bounded open gaps `(a, b)` between consecutive pieces.
    pub fn gaps(&self) -> Vec<(BigRational, BigRational)> {
        self.pieces
            .windows(2)
            .map(|w| {
                (
                    w[0].upper().expect("inner piece bounded above").clone(),
                    w[1].lower().expect("inner piece bounded below").clone(),
                )
            })
            .collect()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn isolated_points(&self) -> Vec<BigRational> {
        self.pieces
            .iter()
            .filter_map(|p| match p {
                Piece::Point(a) => Some(a.clone()),
                _ => None,
            })
            .collect()
    }

    /// Sample points: endpoints plus `per_piece` Chebyshev nodes inside each
    /// interval. Unbounded sides are sampled on a geometric scale out to 10⁶.
    pub fn sample_points(&self, per_piece: usize) -> Vec<f64> {
        let mut out = Vec::new();
        for p in &self.pieces {
            match p {
                Piece::Point(a) => out.push(rat_to_f64(a)),
                Piece::Interval { lo, hi } => {
                    let l = lo.as_ref().map(rat_to_f64);
                    let h = hi.as_ref().map(rat_to_f64);
                    out.extend(l);
                    out.extend(h);
                    let (a, b) = match (l, h) {
                        (Some(a), Some(b)) => (a, b),
                        (Some(a), None) => (a, a + 4.0),
                        (None, Some(b)) => (b - 4.0, b),
                        (None, None) => (-4.0, 4.0),
                    };
                    for k in 0..per_piece {
                        let t = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * per_piece) as f64).cos();
                        out.push((a + b) / 2.0 + (b - a) / 2.0 * t);
                    }
                    for e in 0..=6 {
                        let r = 10f64.powi(e);
                        if l.is_none() {
                            out.push(b - r);
                        }
                        if h.is_none() {
                            out.push(a + r);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let bound = |b: &Option<BigRational>, inf: &str| match b {
            Some(r) => Value::String(js::rational_to_string(r)),
            None => Value::String(inf.to_string()),
        };
        json!({
            "pieces": self.pieces.iter().map(|p| match p {
                Piece::Point(a) => json!({"point": js::rational_to_string(a)}),
                Piece::Interval { lo, hi } => json!({"lo": bound(lo, "-inf"), "hi": bound(hi, "+inf")}),
            }).collect::<Vec<_>>()
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let arr = js::as_array(js::field(v, "pieces", "")?, "pieces")?;
        let mut pieces = Vec::with_capacity(arr.len());
        for (i, p) in arr.iter().enumerate() {
            let path = js::index("pieces", i);
            if let Some(pt) = p.get("point") {
                pieces.push(Piece::Point(js::rational_from_json(pt, &js::join(&path, "point"))?));
                continue;
            }
            let bound = |name: &str, inf: &str| -> Result<Option<BigRational>, JsonError> {
                let bp = js::join(&path, name);
                let b = js::field(p, name, &path)?;
                match b.as_str() {
                    Some(s) if s.trim() == inf || (inf == "+inf" && s.trim() == "inf") => Ok(None),
                    _ => js::rational_from_json(b, &bp).map(Some),
                }
            };
            pieces.push(Piece::Interval {
                lo: bound("lo", "-inf")?,
                hi: bound("hi", "+inf")?,
            });
        }
        SemialgSet::new(pieces).map_err(|e| JsonError::new("pieces", e.to_string()))
    }
}

impl fmt::Display for SemialgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Point(a) => format!("{{{a}}}"),
                Piece::Interval { lo, hi } => format!(
                    "{}{}, {}{}",
                    if lo.is_some() { "[" } else { "(" },
                    lo.as_ref().map_or("-inf".into(), |r| r.to_string()),
                    hi.as_ref().map_or("+inf".into(), |r| r.to_string()),
                    if hi.is_some() { "]" } else { ")" },
                ),
            })
            .collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

pub fn membership(k: &SemialgSet, x: &BigRational) -> bool {
    k.contains(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    LeastElement,
    GreatestElement,
    Gap(BigRational, BigRational),
    Other,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::LeastElement => "least-element",
            Role::GreatestElement => "greatest-element",
            Role::Gap(..) => "gap",
            Role::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub poly: ScalarPoly<Cq>,
    pub role: Role,
}

/// A generator list `S`, each a real scalar polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Description {
    generators: Vec<Generator>,
}

impl Description {
    pub fn new(generators: Vec<Generator>) -> Result<Self, SemialgError> {
        for (i, g) in generators.iter().enumerate() {
            if g.poly.size() != 1 || !g.poly.is_real() {
                return Err(SemialgError::NotRealScalar(i));
            }
        }
        Ok(Description { generators })
    }

    pub fn from_polys(polys: Vec<ScalarPoly<Cq>>) -> Result<Self, SemialgError> {
        Self::new(
            polys
                .into_iter()
                .map(|poly| Generator { poly, role: Role::Other })
                .collect(),
        )
    }

    /// Shorthand for integer coefficient lists, constant term first.
    pub fn from_i64(polys: &[&[i64]]) -> Self {
        Self::from_polys(polys.iter().map(|c| ScalarPoly::scalar_i64(c)).collect())
            .expect("integer polynomials are real")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn polys(&self) -> Vec<ScalarPoly<Cq>> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn push(&mut self, poly: ScalarPoly<Cq>, role: Role) -> Result<(), SemialgError> {
        if poly.size() != 1 || !poly.is_real() {
            return Err(SemialgError::NotRealScalar(self.generators.len()));
        }
        self.generators.push(Generator { poly, role });
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators.iter().map(|g| {
                let mut v = json!({"poly": g.poly.to_json(), "role": g.role.as_str()});
                if let Role::Gap(a, b) = &g.role {
                    v["gap"] = json!([js::rational_to_string(a), js::rational_to_string(b)]);
                }
                v
            }).collect::<Vec<_>>()
        })
    }

    /// Accepts `{"generators": [...]}` or a bare array; each entry is either
    /// `{"poly": <polynomial>, "role": ...}` or a polynomial object itself.
    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let (arr, base) = match v {
            Value::Array(a) => (a, String::new()),
            _ => (
                js::as_array(js::field(v, "generators", "")?, "generators")?,
                "generators".to_string(),
            ),
        };
        let mut gens = Vec::with_capacity(arr.len());
        for (i, g) in arr.iter().enumerate() {
            let path = js::index(&base, i);
            let (poly, role) = match g.get("poly") {
                Some(p) => {
                    let poly = ScalarPoly::<Cq>::from_json_at(p, &js::join(&path, "poly"))?;
                    let role = match g.get("role").and_then(Value::as_str).unwrap_or("other") {
                        "least-element" => Role::LeastElement,
                        "greatest-element" => Role::GreatestElement,
                        "gap" => {
                            let gp = js::join(&path, "gap");
                            let ab = js::as_array(js::field(g, "gap", &path)?, &gp)?;
                            if ab.len() != 2 {
                                return Err(JsonError::new(gp, "expected [a, b]"));
                            }
                            Role::Gap(
                                js::rational_from_json(&ab[0], &js::index(&gp, 0))?,
                                js::rational_from_json(&ab[1], &js::index(&gp, 1))?,
                            )
                        }
                        "other" => Role::Other,
                        r => return Err(JsonError::new(js::join(&path, "role"), format!("unknown role {r:?}"))),
                    };
                    (poly, role)
                }
                None => (ScalarPoly::<Cq>::from_json_at(g, &path)?, Role::Other),
            };
            if poly.size() != 1 || !poly.is_real() {
                return Err(JsonError::new(path, "generator must be a real scalar polynomial"));
            }
            gens.push(Generator { poly, role });
        }
        Ok(Description { generators: gens })
    }
}

fn rat_coeffs(p: &ScalarPoly<Cq>) -> RatPoly {
    sturm::trim(p.scalar_coeffs().into_iter().map(|c| c.re).collect())
}

fn linear(c0: BigRational, c1: BigRational) -> ScalarPoly<Cq> {
    ScalarPoly::scalar(vec![Cq::new(c0, BigRational::zero()), Cq::new(c1, BigRational::zero())])
}

/// The generators forced by the least element, greatest element and gaps.
pub fn natural_description(k: &SemialgSet) -> Result<Description, SemialgError> {
    if k.is_empty() {
        return Err(SemialgError::Empty);
    }
    let one = BigRational::one();
    let mut d = Description::default();
    if let Some(a) = k.least() {
        d.push(linear(-a.clone(), one.clone()), Role::LeastElement)?;
    }
    if let Some(b) = k.greatest() {
        d.push(linear(b.clone(), -one.clone()), Role::GreatestElement)?;
    }
    for (a, b) in k.gaps() {
        let g = linear(-a.clone(), one.clone())
            .mul(&linear(-b.clone(), one.clone()))
            .expect("scalar product");
        d.push(g, Role::Gap(a, b))?;
    }
    Ok(d)
}

/// Checks the endpoint conditions: every left endpoint is a simple zero
/// with positive slope of some generator, every right endpoint one with
/// negative slope. Points count as both.
pub fn is_saturated_description(s: &Description, k: &SemialgSet) -> Result<bool, SemialgError> {
    if !k.is_compact() {
        return Err(SemialgError::NonCompact);
    }
    let polys: Vec<(RatPoly, RatPoly)> = s
        .generators
        .iter()
        .map(|g| {
            let p = rat_coeffs(&g.poly);
            let dp = sturm::derivative(&p);
            (p, dp)
        })
        .collect();
    let witness = |x: &BigRational, want: i32| {
        polys
            .iter()
            .any(|(p, dp)| sturm::eval(p, x).is_zero() && sturm::sign(&sturm::eval(dp, x)) == want)
    };
    Ok(k.pieces.iter().all(|p| {
        witness(p.lower().expect("compact"), 1) && witness(p.upper().expect("compact"), -1)
    }))
}

#[derive(Debug, Clone)]
pub struct RealizeOptions {
    /// Snap irrational endpoints to the simplest rational in an isolating
    /// interval of this width instead of failing.
    pub snap: bool,
    pub width: BigRational,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            snap: false,
            width: BigRational::new(BigInt::one(), BigInt::from(1_000_000_000)),
        }
    }
}

/// `K_S` with default options (irrational endpoints are an error).
pub fn realize(s: &Description) -> Result<SemialgSet, SemialgError> {
    realize_with(s, &RealizeOptions::default())
}

pub fn realize_with(s: &Description, opts: &RealizeOptions) -> Result<SemialgSet, SemialgError> {
    let mut gens = Vec::new();
    for (i, g) in s.generators.iter().enumerate() {
        if g.poly.size() != 1 || !g.poly.is_real() {
            return Err(SemialgError::NotRealScalar(i));
        }
        let p = rat_coeffs(&g.poly);
        match p.len() {
            0 => {}
            1 => {
                if p[0].is_negative() {
                    return Ok(SemialgSet::empty());
                }
            }
            _ => gens.push(p),
        }
    }
    if gens.is_empty() {
        return Ok(SemialgSet::real_line());
    }
    let product = gens
        .iter()
        .fold(vec![BigRational::one()], |acc, g| sturm::mul(&acc, &sturm::squarefree(g)));
    let sf = sturm::squarefree(&product);
    let roots = sturm::isolate_roots(&sf);
    let chains: Vec<(RatPoly, sturm::SturmChain)> = gens
        .iter()
        .map(|g| {
            let s = sturm::squarefree(g);
            let c = sturm::SturmChain::new(&s);
            (s, c)
        })
        .collect();

    let in_set_at = |x: &BigRational| gens.iter().all(|g| !sturm::eval(g, x).is_negative());
    let root_in_set = |r: &RealRoot| match r {
        RealRoot::Rational(q) => in_set_at(q),
        RealRoot::Isolated { lo, hi } => gens.iter().zip(&chains).all(|(g, (_, chain))| {
            // the only root of the product in (lo, hi) is r, so g is either
            // zero at r or of constant sign on [lo, hi]
            chain.count(lo, hi) == 1 || !sturm::eval(g, lo).is_negative()
        }),
    };

    let two = BigRational::from_integer(2.into());
    let mut roots = roots;
    // open-cell samples strictly between consecutive roots
    let mut samples = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        samples.push(BigRational::zero());
    } else {
        samples.push(roots[0].lower() - BigRational::one());
        for i in 0..roots.len() - 1 {
            loop {
                let u = roots[i].upper().clone();
                let l = roots[i + 1].lower().clone();
                if u < l {
                    samples.push((u + l) / &two);
                    break;
                }
                // shared bound: fine unless it is itself a root
                let shared_ok = matches!(roots[i], RealRoot::Isolated { .. })
                    && matches!(roots[i + 1], RealRoot::Isolated { .. });
                if shared_ok {
                    samples.push(u);
                    break;
                }
                let w0 = roots[i].upper() - roots[i].lower();
                let w1 = roots[i + 1].upper() - roots[i + 1].lower();
                if w0 > w1 {
                    roots[i] = sturm::refine(&sf, &roots[i], &(w0 / &two));
                } else {
                    roots[i + 1] = sturm::refine(&sf, &roots[i + 1], &(w1 / &two));
                }
            }
        }
        samples.push(roots.last().unwrap().upper() + BigRational::one());
    }

    // cells alternate: open(0), root(0), open(1), ..., root(r-1), open(r)
    let open_in: Vec<bool> = samples.iter().map(in_set_at).collect();
    let root_in: Vec<bool> = roots.iter().map(root_in_set).collect();

    let endpoint = |r: &RealRoot| -> Result<BigRational, SemialgError> {
        match r {
            RealRoot::Rational(q) => Ok(q.clone()),
            RealRoot::Isolated { .. } if opts.snap => match sturm::refine(&sf, r, &opts.width) {
                RealRoot::Rational(q) => Ok(q),
                RealRoot::Isolated { lo, hi } => Ok(sturm::simplest_between(&lo, &hi)),
            },
            RealRoot::Isolated { .. } => Err(SemialgError::IrrationalEndpoint(r.approx())),
        }
    };

    let mut pieces = Vec::new();
    let mut start: Option<Option<BigRational>> = None;
    let ncells = 2 * roots.len() + 1;
    for c in 0..ncells {
        let (inside, is_root) = if c % 2 == 0 {
            (open_in[c / 2], false)
        } else {
            (root_in[c / 2], true)
        };
        if inside && start.is_none() {
            start = Some(if is_root {
                Some(endpoint(&roots[c / 2])?)
            } else if c == 0 {
                None
            } else {
                // closure of an open cell includes its left root
                Some(endpoint(&roots[c / 2 - 1])?)
            });
        }
        if !inside {
            if let Some(lo) = start.take() {
                // previous cell ended the run
                let hi = if (c - 1) % 2 == 1 {
                    endpoint(&roots[(c - 1) / 2])?
                } else {
                    endpoint(&roots[c / 2])?
                };
                pieces.push(match lo {
                    Some(l) if l == hi => Piece::Point(l),
                    lo => Piece::Interval { lo, hi: Some(hi) },
                });
            }
        }
    }
    if let Some(lo) = start {
        pieces.push(Piece::Interval { lo, hi: None });
    }
    SemialgSet::new(pieces)
}

/// Rows of the saturation table, by shape of the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassLabel {
    Bounded,
    UnboundedInterval,
    UnboundedIntervalPlusOnePoint,
    UnboundedIntervalPlusManyPoints,
    TwoUnboundedIntervals,
    TwoUnboundedIntervalsPlusOnePoint,
    TwoUnboundedIntervalsPlusManyPoints,
    MixedBoundedUnboundedIntervals,
}

/// Whether every matrix preordering of the natural description is saturated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Conjecture,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Bounded => "Bounded",
            ClassLabel::UnboundedInterval => "UnboundedInterval",
            ClassLabel::UnboundedIntervalPlusOnePoint => "UnboundedIntervalPlusOnePoint",
            ClassLabel::UnboundedIntervalPlusManyPoints => "UnboundedIntervalPlusManyPoints",
            ClassLabel::TwoUnboundedIntervals => "TwoUnboundedIntervals",
            ClassLabel::TwoUnboundedIntervalsPlusOnePoint => "TwoUnboundedIntervalsPlusOnePoint",
            ClassLabel::TwoUnboundedIntervalsPlusManyPoints => "TwoUnboundedIntervalsPlusManyPoints",
            ClassLabel::MixedBoundedUnboundedIntervals => "MixedBoundedUnboundedIntervals",
        }
    }

    pub fn verdict(self) -> Verdict {
        match self {
            ClassLabel::Bounded | ClassLabel::UnboundedInterval | ClassLabel::TwoUnboundedIntervals => {
                Verdict::Yes
            }
            ClassLabel::UnboundedIntervalPlusOnePoint | ClassLabel::TwoUnboundedIntervalsPlusOnePoint => {
                Verdict::Conjecture
            }
            _ => Verdict::No,
        }
    }
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Conjecture => "Conjecture",
        }
    }
}

pub fn classify(k: &SemialgSet) -> Result<ClassLabel, SemialgError> {
    if k.is_empty() {
        return Err(SemialgError::Empty);
    }
    if k.is_compact() {
        return Ok(ClassLabel::Bounded);
    }
    let unbounded = k.pieces.iter().filter(|p| !p.is_bounded()).count();
    let bounded_intervals = k
        .pieces
        .iter()
        .filter(|p| p.is_bounded() && matches!(p, Piece::Interval { .. }))
        .count();
    if bounded_intervals > 0 {
        return Ok(ClassLabel::MixedBoundedUnboundedIntervals);
    }
    let points = k.isolated_points().len();
    Ok(match (unbounded, points) {
        (1, 0) => ClassLabel::UnboundedInterval,
        (1, 1) => ClassLabel::UnboundedIntervalPlusOnePoint,
        (1, _) => ClassLabel::UnboundedIntervalPlusManyPoints,
        (_, 0) => ClassLabel::TwoUnboundedIntervals,
        (_, 1) => ClassLabel::TwoUnboundedIntervalsPlusOnePoint,
        _ => ClassLabel::TwoUnboundedIntervalsPlusManyPoints,
    })
}
