//! Coefficient-vector helpers for scalar polynomials; index `m` holds the
//! coefficient of `x^m`.

use crate::scalar::Scalar;

pub(crate) fn trim<T: Scalar>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => T::zero(),
        })
        .collect();
    trim(out)
}

pub(crate) fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let nb: Vec<T> = b.iter().map(|c| -c.clone()).collect();
    add(a, &nb)
}

pub(crate) fn mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let cur = std::mem::replace(&mut out[i + j], T::zero());
            out[i + j] = cur + x.clone() * y.clone();
        }
    }
    trim(out)
}



/// Long division; `None` when the divisor is zero.
pub(crate) fn divrem<T: Scalar>(a: &[T], b: &[T]) -> Option<(Vec<T>, Vec<T>)> {
    let b = trim(b.to_vec());
    let lead_inv = b.last()?.inv()?;
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return Some((Vec::new(), rem));
    }
    let mut quot = vec![T::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone() * lead_inv.clone();
        for (i, bc) in b.iter().enumerate() {
            let cur = std::mem::replace(&mut rem[shift + i], T::zero());
            rem[shift + i] = cur - c.clone() * bc.clone();
        }
        quot[shift] = c;
        // the leading term cancels exactly in exact modes; force it in float mode
        rem.pop();
        rem = trim(rem);
    }
    Some((trim(quot), rem))
}


