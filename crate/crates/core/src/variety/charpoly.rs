//! Characteristic polynomial `det(𝒜(z) − λI)` over the Laurent ring.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Cyclotomic, LaurentPoly};
use crate::error::{Error, Result};
use crate::operator::{FloquetSymbol, HermitianCheck};

/// `P(z, λ) = det(𝒜(z) − λI)`, with `λ`-leading coefficient `(−1)^Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    poly: LaurentPoly,
    size: usize,
}

impl CharPoly {
    /// Wraps a polynomial, checking that its `λ`-leading term is exactly `(−1)^Q λ^Q`.
    pub fn from_poly(poly: LaurentPoly) -> Result<Self> {
        let q = poly
            .lambda_degree()
            .filter(|&q| q > 0)
            .ok_or(Error::ConstantInLambda("characteristic polynomial"))?;
        let lead = poly.lambda_coeffs().pop().expect("nonzero polynomial");
        let sign = if q % 2 == 0 { 1 } else { -1 };
        if lead != LaurentPoly::from_integer(poly.dim(), sign) {
            return Err(Error::Invariant(format!(
                "lambda-leading coefficient is {lead}, expected {sign}"
            )));
        }
        Ok(CharPoly {
            poly,
            size: q as usize,
        })
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    /// `Q`, the `λ`-degree.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }
}

type Matrix = Vec<LaurentPoly>;

fn mat_mul(a: &Matrix, b: &Matrix, n: usize, dim: usize) -> Matrix {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = LaurentPoly::zero(dim);
            for k in 0..n {
                let (x, y) = (&a[i * n + k], &b[k * n + j]);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            out.push(acc);
        }
    }
    out
}

/// Exact characteristic polynomial by the Faddeev–LeVerrier recursion.
pub fn charpoly(a: &FloquetSymbol) -> Result<CharPoly> {
    if let HermitianCheck::Fail { row, col } = a.validate_hermitian() {
        return Err(Error::NotHermitian { row, col });
    }
    let n = a.size();
    let dim = a.dim();
    let mat: Matrix = a.entries().to_vec();
    // det(λI − A) = Σ_k c_k λ^{n−k}, c_0 = 1; M_1 = I, M_{k+1} = A M_k + c_k I, c_k = −tr(A M_k)/k.
    let mut coeffs = vec![LaurentPoly::one(dim)];
    let mut m: Matrix = (0..n * n)
        .map(|i| {
            if i % (n + 1) == 0 {
                LaurentPoly::one(dim)
            } else {
                LaurentPoly::zero(dim)
            }
        })
        .collect();
    for k in 1..=n {
        let am = mat_mul(&mat, &m, n, dim);
        let trace = (0..n).fold(LaurentPoly::zero(dim), |acc, i| &acc + &am[i * (n + 1)]);
        let ck = trace.scale(&Cyclotomic::from_rational(BigRational::new(
            BigInt::from(-1),
            BigInt::from(k as i64),
        )));
        m = am;
        for i in 0..n {
            m[i * (n + 1)] = &m[i * (n + 1)] + &ck;
        }
        coeffs.push(ck);
    }
    // det(A − λI) = (−1)^n det(λI − A); coefficient of λ^{n−k} is c_k.
    let by_power: Vec<LaurentPoly> = coeffs.into_iter().rev().collect();
    let mut p = LaurentPoly::from_lambda_coeffs(dim, &by_power);
    if n % 2 == 1 {
        p = -p;
    }
    CharPoly::from_poly(p)
}
