//! Dense univariate polynomials over the rationals.
//!
//! Only the handful of routines needed by the cyclotomic field live here:
//! trimming, long division and the extended Euclidean algorithm used to
//! invert field elements modulo a cyclotomic polynomial.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in ascending order; `[]` is the zero polynomial.
pub(crate) type DensePoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut DensePoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &DensePoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn sub_scaled_shifted(a: &mut DensePoly, b: &DensePoly, c: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bc) in b.iter().enumerate() {
        if !bc.is_zero() {
            a[i + shift] -= c * bc;
        }
    }
}

/// Returns `(quotient, remainder)`; `b` must be nonzero.
pub(crate) fn div_rem(a: &DensePoly, b: &DensePoly) -> (DensePoly, DensePoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = Vec::new();
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        if quot.len() <= shift {
            quot.resize(shift + 1, BigRational::zero());
        }
        sub_scaled_shifted(&mut rem, b, &c, shift);
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn mul(a: &DensePoly, b: &DensePoly) -> DensePoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &DensePoly, b: &DensePoly) -> DensePoly {
    let mut out = a.clone();
    sub_scaled_shifted(&mut out, b, &BigRational::one(), 0);
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `modulus`, or `None` when they share a factor.
pub(crate) fn inverse_mod(a: &DensePoly, modulus: &DensePoly) -> Option<DensePoly> {
    // Invariant: s_i * a ≡ r_i (mod modulus).
    let (_, mut r0) = div_rem(a, modulus);
    let mut r1 = modulus.clone();
    trim(&mut r1);
    let mut s0: DensePoly = vec![BigRational::one()];
    let mut s1: DensePoly = Vec::new();
    if r0.is_empty() {
        return None;
    }
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let scale = r0[0].recip();
    let (_, mut inv) = div_rem(&s0, modulus);
    for c in inv.iter_mut() {
        *c *= &scale;
    }
    trim(&mut inv);
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> DensePoly {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn long_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (quot, rem) = div_rem(&q(&[-1, 0, 1]), &q(&[-1, 1]));
        assert_eq!(quot, q(&[1, 1]));
        assert!(rem.is_empty());
    }

    #[test]
    fn inverse_modulo_quadratic() {
        // x * (-x) = -x^2 ≡ 1 mod x^2 + 1
        let inv = inverse_mod(&q(&[0, 1]), &q(&[1, 0, 1])).unwrap();
        assert_eq!(inv, q(&[0, -1]));
        assert!(inverse_mod(&q(&[1, 1]), &q(&[-1, 0, 1])).is_none());
    }
}
