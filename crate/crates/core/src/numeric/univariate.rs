//! Dense univariate polynomials over the rationals, coefficients low to high.

use num_traits::Zero;

use super::Rational;

pub(crate) type UniPoly = Vec<Rational>;

pub(crate) fn trim(p: &mut UniPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn mul(p: &[Rational], q: &[Rational]) -> UniPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(p: &[Rational], q: &[Rational]) -> UniPoly {
    let n = p.len().max(q.len());
    let mut out: UniPoly = (0..n)
        .map(|i| {
            let a = p.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = q.get(i).cloned().unwrap_or_else(Rational::zero);
            a - b
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `divisor` must be nonzero after trimming.
pub(crate) fn divrem(dividend: &[Rational], divisor: &[Rational]) -> (UniPoly, UniPoly) {
    let mut divisor = divisor.to_vec();
    trim(&mut divisor);
    assert!(!divisor.is_empty(), "polynomial division by zero");
    let mut rem = dividend.to_vec();
    trim(&mut rem);
    let dd = divisor.len() - 1;
    let lead = divisor[dd].clone();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let shift = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / &lead;
        for (i, a) in divisor.iter().enumerate() {
            rem[shift + i] -= &c * a;
        }
        quot[shift] = c;
        // leading coefficient is now exactly zero
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `p` modulo `modulus`, when `gcd(p, modulus) = 1`.
pub(crate) fn inverse_mod(p: &[Rational], modulus: &[Rational]) -> Option<UniPoly> {
    // extended Euclid tracking only the coefficient of p
    let (mut r0, mut r1) = (modulus.to_vec(), p.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (UniPoly, UniPoly) = (Vec::new(), vec![Rational::from_integer(1.into())]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; invertible iff it is a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let (_, reduced) = divrem(&s0, modulus);
    Some(reduced.into_iter().map(|x| x / &c).collect())
}
