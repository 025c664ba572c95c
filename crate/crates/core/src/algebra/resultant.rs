//! Resultants and discriminants in `λ` over the Laurent ring in `z`.
//!
//! Uses the subresultant polynomial remainder sequence, which only needs
//! exact division in the coefficient ring. The Laurent ring is an integral
//! domain with exact division, so no clearing of denominators is needed.

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A polynomial in `λ` with `λ`-free Laurent coefficients, lowest degree first.
#[derive(Clone, Debug)]
struct LambdaPoly {
    dim: usize,
    coeffs: Vec<LaurentPoly>,
}

impl LambdaPoly {
    fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = LambdaPoly {
            dim: p.dim(),
            coeffs: p.lambda_coeffs(),
        };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(LaurentPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0 (callers check `is_zero`).
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> &LaurentPoly {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = LambdaPoly {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        };
        out.trim();
        out
    }

    fn div_exact_scalar(&self, c: &LaurentPoly) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                x.div_exact(c)
                    .expect("subresultant division must be exact in the Laurent ring")
            })
            .collect();
        let mut out = LambdaPoly {
            dim: self.dim,
            coeffs,
        };
        out.trim();
        out
    }

    /// Pseudo-remainder: `lc(b)^{deg a - deg b + 1} a mod b`.
    fn prem(&self, b: &Self) -> Self {
        let db = b.degree();
        let lb = b.lc().clone();
        let mut r = self.clone();
        let mut e = self.degree() + 1 - db;
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.lc().clone();
            let mut next = r.scale(&lb);
            next.coeffs.resize(r.coeffs.len().max(next.coeffs.len()), LaurentPoly::zero(self.dim));
            for (i, bc) in b.coeffs.iter().enumerate() {
                next.coeffs[i + shift] = &next.coeffs[i + shift] - &(bc * &lr);
            }
            next.trim();
            r = next;
            e -= 1;
        }
        if e > 0 && !r.is_zero() {
            r = r.scale(&lb.pow(e as u32));
        }
        r
    }
}

fn pow_ratio(h: &LaurentPoly, g: &LaurentPoly, delta: usize) -> LaurentPoly {
    // h^{1-δ} g^δ
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => g
            .pow(delta as u32)
            .div_exact(&h.pow(delta as u32 - 1))
            .expect("subresultant h-update must be exact"),
    }
}

fn sign(mut p: LaurentPoly, negative: bool) -> LaurentPoly {
    if negative {
        p = -p;
    }
    p
}

/// `Res_λ(P, R)`, the Sylvester resultant with `P`'s rows first.
///
/// Vanishes identically exactly when `P` and `R` share a factor of positive
/// `λ`-degree.
pub fn resultant_lambda(p: &LaurentPoly, r: &LaurentPoly) -> Result<LaurentPoly> {
    if p.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: r.dim(),
        });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("first resultant argument"));
    }
    if r.is_zero() {
        return Err(Error::ZeroPolynomial("second resultant argument"));
    }
    if p.lambda_degree() == Some(0) {
        return Err(Error::ConstantInLambda("first resultant argument"));
    }
    if r.lambda_degree() == Some(0) {
        return Err(Error::ConstantInLambda("second resultant argument"));
    }
    Ok(subresultant(LambdaPoly::from_laurent(p), LambdaPoly::from_laurent(r)))
}

fn subresultant(mut a: LambdaPoly, mut b: LambdaPoly) -> LaurentPoly {
    let dim = a.dim;
    let mut negative = false;
    if a.degree() < b.degree() {
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            negative = !negative;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree() == 0 {
        return sign(b.lc().pow(a.degree() as u32), negative);
    }
    let mut g = LaurentPoly::one(dim);
    let mut h = LaurentPoly::one(dim);
    loop {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            negative = !negative;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return LaurentPoly::zero(dim);
        }
        b = r.div_exact_scalar(&(&g * &h.pow(delta as u32)));
        g = a.lc().clone();
        h = pow_ratio(&h, &g, delta);
        if b.degree() == 0 {
            break;
        }
    }
    // h^{1 - deg a} · lc(b)^{deg a}
    let da = a.degree() as u32;
    let num = b.lc().pow(da);
    let res = if da >= 1 {
        num.div_exact(&h.pow(da - 1))
            .expect("final subresultant division must be exact")
    } else {
        &num * &h
    };
    sign(res, negative)
}

/// Discriminant in `λ`: `(-1)^{n(n-1)/2} Res_λ(P, ∂_λP) / lc_λ(P)`.
///
/// For `λ² + bλ + c` this is `b² − 4c`. Vanishes identically exactly when
/// `P` has a repeated factor of positive `λ`-degree.
pub fn discriminant_lambda(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("discriminant argument"));
    }
    let n = p.lambda_degree().unwrap_or(0);
    if n == 0 {
        return Err(Error::ConstantInLambda("discriminant argument"));
    }
    if n == 1 {
        return Ok(LaurentPoly::one(p.dim()));
    }
    let res = resultant_lambda(p, &p.lambda_derivative())?;
    let lead = LambdaPoly::from_laurent(p).lc().clone();
    let quotient = res
        .div_exact(&lead)
        .expect("resultant with the derivative is divisible by the leading coefficient");
    let negative = (n as u64 * (n as u64 - 1) / 2) % 2 == 1;
    Ok(sign(quotient, negative))
}

/// Upper bound on the total degree of `Res_λ(P, R)` after clearing each
/// input's negative powers by a monomial.
pub fn resultant_degree_bound(p: &LaurentPoly, r: &LaurentPoly) -> u64 {
    let span = |x: &LaurentPoly| -> u64 {
        x.z_bounds()
            .map(|b| b.iter().map(|(lo, hi)| (hi - lo) as u64).sum())
            .unwrap_or(0)
    };
    let dp = p.lambda_degree().unwrap_or(0) as u64;
    let dr = r.lambda_degree().unwrap_or(0) as u64;
    dr * span(p) + dp * span(r)
}

/// Upper bound on the number of terms of `Res_λ(P, R)`, from per-variable exponent spans.
pub fn resultant_term_bound(p: &LaurentPoly, r: &LaurentPoly) -> u64 {
    let (Some(bp), Some(br)) = (p.z_bounds(), r.z_bounds()) else {
        return 1;
    };
    let dp = p.lambda_degree().unwrap_or(0) as u64;
    let dr = r.lambda_degree().unwrap_or(0) as u64;
    bp.iter()
        .zip(&br)
        .map(|(a, b)| dr * (a.1 - a.0) as u64 + dp * (b.1 - b.0) as u64 + 1)
        .fold(1u64, |acc, x| acc.saturating_mul(x))
}

/// Size of the Sylvester matrix for `Res_λ(P, R)`.
pub fn sylvester_dimension(p: &LaurentPoly, r: &LaurentPoly) -> usize {
    (p.lambda_degree().unwrap_or(0) + r.lambda_degree().unwrap_or(0)) as usize
}

/// Leading `λ`-coefficient as a cyclotomic constant, if it is one.
pub fn constant_leading_coefficient(p: &LaurentPoly) -> Option<Cyclotomic> {
    let coeffs = p.lambda_coeffs();
    let lead = coeffs.last()?;
    if lead.len() == 1 && lead.z_bounds()?.iter().all(|&(lo, hi)| lo == 0 && hi == 0) {
        Some(lead.constant_term())
    } else {
        None
    }
}
