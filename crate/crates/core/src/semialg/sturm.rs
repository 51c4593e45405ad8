//! Exact real-root isolation for rational polynomials via Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational polynomial, constant term first.
pub type RatPoly = Vec<BigRational>;

pub fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub fn sign(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn derivative(p: &[BigRational]) -> RatPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `(quotient, remainder)`; panics on a zero divisor.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn monic(p: RatPoly) -> RatPoly {
    match p.last() {
        Some(l) => {
            let l = l.clone();
            p.into_iter().map(|c| c / &l).collect()
        }
        None => p,
    }
}

pub fn gcd(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Squarefree part `p / gcd(p, p')`, made monic.
pub fn squarefree(p: &[BigRational]) -> RatPoly {
    let p = trim(p.to_vec());
    if p.len() <= 2 {
        return monic(p);
    }
    let g = gcd(&p, &derivative(&p));
    monic(divrem(&p, &g).0)
}

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &[BigRational]) -> Self {
        let p0 = trim(p.to_vec());
        let mut chain = vec![p0.clone()];
        let mut p1 = derivative(&p0);
        let mut prev = p0;
        while !p1.is_empty() {
            let (_, r) = divrem(&prev, &p1);
            let next: RatPoly = r.into_iter().map(|c| -c).collect();
            chain.push(p1.clone());
            prev = p1;
            p1 = trim(next);
        }
        SturmChain { chain }
    }

    fn changes(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::changes(self.chain.iter().map(|p| sign(&eval(p, x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::changes(self.chain.iter().map(|p| p.last().map_or(0, sign)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::changes(self.chain.iter().map(|p| {
            let s = p.last().map_or(0, sign);
            if p.len() % 2 == 0 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]` (the chain's polynomial must be squarefree).
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// A real root of a squarefree rational polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum RealRoot {
    Rational(BigRational),
    /// The unique root in the open interval `(lo, hi)`; neither bound is a root.
    Isolated { lo: BigRational, hi: BigRational },
}

impl RealRoot {
    pub fn lower(&self) -> &BigRational {
        match self {
            RealRoot::Rational(q) => q,
            RealRoot::Isolated { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match self {
            RealRoot::Rational(q) => q,
            RealRoot::Isolated { hi, .. } => hi,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Rational(q) => crate::scalar::rat_to_f64(q),
            RealRoot::Isolated { lo, hi } => {
                crate::scalar::rat_to_f64(&((lo + hi) / BigRational::from_integer(2.into())))
            }
        }
    }
}

/// Cauchy bound: every root has absolute value below the result.
pub fn root_bound(p: &[BigRational]) -> BigRational {
    let p = trim(p.to_vec());
    let lead = p.last().expect("nonzero polynomial").abs();
    let m = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    m + BigRational::one() + BigRational::one()
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return lo.clone();
    }
    if fl + BigRational::one() <= *hi {
        return lo.ceil();
    }
    // lo and hi share the integer part; recurse on reciprocals of fractions
    let fl = lo.floor();
    let r = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + r.recip()
}

/// Isolates all real roots of a nonzero polynomial; exact rational roots
/// are detected during refinement down to width `2^-70`.
pub fn isolate_roots(p: &[BigRational]) -> Vec<RealRoot> {
    let sf = squarefree(p);
    if sf.len() <= 1 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf);
    let b = root_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = chain.count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(settle(&sf, &chain, lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.lower().cmp(b.lower()));
    out
}

/// Given exactly one root in `(lo, hi]`, returns it as an exact rational
/// when possible, else as an isolating open interval with non-root bounds.
fn settle(sf: &[BigRational], chain: &SturmChain, mut lo: BigRational, mut hi: BigRational) -> RealRoot {
    let two = BigRational::from_integer(2.into());
    if eval(sf, &hi).is_zero() {
        return RealRoot::Rational(hi);
    }
    let tiny = BigRational::new(BigInt::one(), BigInt::one() << 70);
    loop {
        let cand = simplest_between(&lo, &hi);
        if cand != lo && eval(sf, &cand).is_zero() {
            return RealRoot::Rational(cand);
        }
        if &hi - &lo < tiny {
            return RealRoot::Isolated { lo, hi };
        }
        let mid = (&lo + &hi) / &two;
        if eval(sf, &mid).is_zero() {
            return RealRoot::Rational(mid);
        }
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Shrinks an isolating interval below `width`.
pub fn refine(sf: &[BigRational], root: &RealRoot, width: &BigRational) -> RealRoot {
    let RealRoot::Isolated { lo, hi } = root else {
        return root.clone();
    };
    let two = BigRational::from_integer(2.into());
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let slo = sign(&eval(sf, &lo));
    while &hi - &lo >= *width {
        let mid = (&lo + &hi) / &two;
        let sm = sign(&eval(sf, &mid));
        if sm == 0 {
            return RealRoot::Rational(mid);
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealRoot::Isolated { lo, hi }
}
