//! Multivariate Laurent polynomials in `z_1..z_d`, polynomial in `λ`,
//! with cyclotomic coefficients.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Exponents of a monomial `z^n λ^k`. Ordered lexicographically with the
/// `λ`-degree compared last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    pub z: Vec<i32>,
    pub lambda: u32,
}

impl ExponentVector {
    pub fn new(z: Vec<i32>, lambda: u32) -> Self {
        ExponentVector { z, lambda }
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector {
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
            lambda: self.lambda + other.lambda,
        }
    }

    /// `self - other`, or `None` if the `λ`-degree would go negative.
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(ExponentVector {
            z: self.z.iter().zip(&other.z).map(|(a, b)| a - b).collect(),
            lambda: self.lambda.checked_sub(other.lambda)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

/// A Laurent polynomial. No stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    dim: usize,
    order: u32,
    terms: BTreeMap<ExponentVector, Cyclotomic>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly {
            dim,
            order: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Cyclotomic::from_integer(1))
    }

    pub fn from_integer(dim: usize, n: i64) -> Self {
        Self::constant(dim, Cyclotomic::from_integer(n))
    }

    pub fn from_rational(dim: usize, q: BigRational) -> Self {
        Self::constant(dim, Cyclotomic::from_rational(q))
    }

    pub fn constant(dim: usize, c: Cyclotomic) -> Self {
        Self::monomial(dim, vec![0; dim], 0, c)
    }

    pub fn monomial(dim: usize, z: Vec<i32>, lambda: u32, c: Cyclotomic) -> Self {
        assert_eq!(z.len(), dim, "exponent vector length must equal dimension");
        let mut out = LaurentPoly {
            dim,
            order: c.order(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            out.terms.insert(ExponentVector { z, lambda }, c);
        }
        out
    }

    /// `z_j^e` with unit coefficient.
    pub fn z_pow(dim: usize, j: usize, e: i32) -> Self {
        let mut z = vec![0; dim];
        z[j] = e;
        Self::monomial(dim, z, 0, Cyclotomic::from_integer(1))
    }

    pub fn lambda(dim: usize) -> Self {
        Self::monomial(dim, vec![0; dim], 1, Cyclotomic::from_integer(1))
    }

    /// Sums the given terms, lifting coefficients to a common order.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Cyclotomic)>,
    {
        let mut out = Self::zero(dim);
        for (e, c) in terms {
            assert_eq!(e.z.len(), dim, "exponent vector length must equal dimension");
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: ExponentVector, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        if c.order() != self.order {
            let l = self.order.lcm(&c.order());
            if l != self.order {
                self.lift_in_place(l);
            }
        }
        let c = c.lift(self.order);
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn lift_in_place(&mut self, order: u32) {
        for c in self.terms.values_mut() {
            *c = c.lift(order);
        }
        self.order = order;
    }

    /// The same polynomial with coefficients expressed in order `order`.
    pub fn lift(&self, order: u32) -> Self {
        let mut out = self.clone();
        if order != self.order {
            out.lift_in_place(order);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Cyclotomic order shared by all coefficients.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Cyclotomic> {
        self.terms.get(e)
    }

    /// Coefficient of the `z^0 λ^0` term, zero if absent.
    pub fn constant_term(&self) -> Cyclotomic {
        self.terms
            .get(&ExponentVector::new(vec![0; self.dim], 0))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(1))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Checked `+` or `*`.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        self.check_dim(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let order = self.order.lcm(&other.order);
        let a = self.lift(order);
        let b = other.lift(order);
        let mut acc: BTreeMap<ExponentVector, Cyclotomic> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.add(eb);
                let c = ca.mul(cb);
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add(&c);
                        *o.get_mut() = s;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly {
            dim: self.dim,
            order,
            terms: acc,
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let order = self.order.lcm(&c.order());
        let c = c.lift(order);
        LaurentPoly {
            dim: self.dim,
            order,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.lift(order).mul(&c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `P(ζ(m,N) ⊙ z, λ)` with `ζ(m,N)_j = e^{2πi m_j / N}`.
    pub fn substitute_shift(&self, m: &[i64], n: u64) -> Result<Self> {
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: m.len(),
            });
        }
        assert!(n >= 1, "shift denominator must be positive");
        let n = n as i64;
        let g = m.iter().fold(n, |g, &x| g.gcd(&x));
        let n_red = n / g;
        let m_red: Vec<i64> = m.iter().map(|&x| (x / g).rem_euclid(n_red)).collect();
        if n_red == 1 {
            return Ok(self.clone());
        }
        let n_red = n_red as u32;
        let order = self.order.lcm(&n_red);
        let terms = self.terms.iter().map(|(e, c)| {
            let k: i64 = e.z.iter().zip(&m_red).map(|(&ej, &mj)| ej as i64 * mj).sum();
            let root = Cyclotomic::root_of_unity(n_red, k);
            (e.clone(), c.lift(order).mul(&root))
        });
        Ok(Self::from_terms(self.dim, terms).lift_min(order))
    }

    fn lift_min(mut self, order: u32) -> Self {
        if self.order != order && order.is_multiple_of(self.order) {
            self.lift_in_place(order);
        }
        self
    }

    /// Formal derivative in `λ`.
    pub fn lambda_derivative(&self) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.lambda > 0).map(|(e, c)| {
            let k = BigRational::from_integer(BigInt::from(e.lambda));
            (
                ExponentVector::new(e.z.clone(), e.lambda - 1),
                c.scale(&k),
            )
        });
        Self::from_terms(self.dim, terms).lift_min(self.order)
    }

    /// Floating evaluation at `(z0, λ0)`; cyclotomic coefficients use the principal root.
    pub fn eval_numeric(&self, z0: &[Complex64], lambda0: Complex64) -> Result<Complex64> {
        if z0.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: z0.len(),
            });
        }
        if let Some(i) = z0.iter().position(|z| *z == Complex64::new(0.0, 0.0)) {
            return Err(Error::ZeroCoordinate(i));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.to_complex();
            for (zj, &ej) in z0.iter().zip(&e.z) {
                t *= zj.powi(ej);
            }
            acc += t * lambda0.powu(e.lambda);
        }
        Ok(acc)
    }

    /// Evaluates at `z_j = e^{2πi k_j}`, computing each monomial's phase
    /// as `Σ n_j k_j` reduced mod 1 before the exponential.
    pub fn eval_torus(&self, k: &[f64], lambda0: Complex64) -> Complex64 {
        assert_eq!(k.len(), self.dim);
        self.eval_with_phase(lambda0, |z| {
            let p: f64 = z.iter().zip(k).map(|(&n, &kj)| n as f64 * kj).sum();
            p - p.floor()
        })
    }

    /// Evaluates at the grid point `k = r / n`, with the phase reduced exactly in integers.
    pub fn eval_grid(&self, r: &[i64], n: u64, lambda0: Complex64) -> Complex64 {
        assert_eq!(r.len(), self.dim);
        let n = n as i64;
        self.eval_with_phase(lambda0, |z| {
            let p: i64 = z.iter().zip(r).map(|(&e, &rj)| e as i64 * rj).sum();
            p.rem_euclid(n) as f64 / n as f64
        })
    }

    fn eval_with_phase(&self, lambda0: Complex64, phase: impl Fn(&[i32]) -> f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let p = phase(&e.z);
            let mono = unit_phase(p);
            acc += c.to_complex() * mono * lambda0.powu(e.lambda);
        }
        acc
    }

    /// Exact substitution of nonzero integers for the `z` variables,
    /// leaving a polynomial in `λ` alone (dimension 0).
    pub fn eval_z_exact(&self, point: &[BigInt]) -> Result<Self> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: point.len(),
            });
        }
        if let Some(i) = point.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate(i));
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = BigRational::one();
            for (x, &ej) in point.iter().zip(&e.z) {
                let p = num_traits::pow(x.clone(), ej.unsigned_abs() as usize);
                if ej >= 0 {
                    v *= BigRational::from_integer(p);
                } else {
                    v /= BigRational::from_integer(p);
                }
            }
            (ExponentVector::new(Vec::new(), e.lambda), c.scale(&v))
        });
        Ok(Self::from_terms(0, terms).lift_min(self.order))
    }

    /// Degree in `λ`; `None` for the zero polynomial.
    pub fn lambda_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.lambda).max()
    }

    /// Dense list of `λ`-coefficients: entry `k` multiplies `λ^k`.
    pub fn lambda_coeffs(&self) -> Vec<LaurentPoly> {
        let deg = match self.lambda_degree() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![LaurentPoly::zero(self.dim).lift_min(self.order); deg + 1];
        for (e, c) in &self.terms {
            out[e.lambda as usize]
                .terms
                .insert(ExponentVector::new(e.z.clone(), 0), c.clone());
        }
        out
    }

    /// Inverse of [`lambda_coeffs`](Self::lambda_coeffs).
    pub fn from_lambda_coeffs(dim: usize, coeffs: &[LaurentPoly]) -> Self {
        let terms = coeffs.iter().enumerate().flat_map(|(k, p)| {
            p.terms
                .iter()
                .map(move |(e, c)| (ExponentVector::new(e.z.clone(), e.lambda + k as u32), c.clone()))
        });
        Self::from_terms(dim, terms)
    }

    /// Substitutes `z_j → z_j^{q_j}`.
    pub fn scale_exponents(&self, q: &[i32]) -> Self {
        assert_eq!(q.len(), self.dim);
        LaurentPoly {
            dim: self.dim,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let z = e.z.iter().zip(q).map(|(a, b)| a * b).collect();
                    (ExponentVector::new(z, e.lambda), c.clone())
                })
                .collect(),
        }
    }

    /// `P(z, λ + a)`.
    pub fn shift_lambda(&self, a: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            // (λ + a)^k = Σ_i C(k,i) a^{k-i} λ^i
            let mut binom = BigInt::one();
            for i in 0..=e.lambda {
                let coef = c
                    .mul(&a.pow(e.lambda - i))
                    .scale(&BigRational::from_integer(binom.clone()));
                out.add_term(ExponentVector::new(e.z.clone(), i), coef);
                binom = binom * BigInt::from(e.lambda - i) / BigInt::from(i + 1);
            }
        }
        out.lift_min(self.order)
    }

    /// Conjugates every coefficient and replaces `z` by `z^{-1}`.
    pub fn conj_reflect(&self) -> Self {
        LaurentPoly {
            dim: self.dim,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let z = e.z.iter().map(|x| -x).collect();
                    (ExponentVector::new(z, e.lambda), c.conj())
                })
                .collect(),
        }
    }

    /// Distinct `z`-exponent vectors occurring in the polynomial.
    pub fn z_support(&self) -> Vec<Vec<i32>> {
        let mut s: Vec<Vec<i32>> = self.terms.keys().map(|e| e.z.clone()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Per-variable `(min, max)` exponent range; `None` for zero.
    pub fn z_bounds(&self) -> Option<Vec<(i32, i32)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b: Vec<(i32, i32)> = first.z.iter().map(|&x| (x, x)).collect();
        for e in it {
            for (bj, &x) in b.iter_mut().zip(&e.z) {
                bj.0 = bj.0.min(x);
                bj.1 = bj.1.max(x);
            }
        }
        Some(b)
    }

    /// Terms of maximal weight `Σ_j n_j + k` for `z^n λ^k`.
    pub fn top_weight_component(&self) -> Self {
        let weight = |e: &ExponentVector| e.z.iter().map(|&x| x as i64).sum::<i64>() + e.lambda as i64;
        let Some(top) = self.terms.keys().map(weight).max() else {
            return self.clone();
        };
        LaurentPoly {
            dim: self.dim,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| weight(e) == top)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` if the
    /// division is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.dim != divisor.dim {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.dim));
        }
        let (lead_e, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv()?;
        if divisor.len() == 1 {
            let terms = self.terms.iter().map(|(e, c)| {
                e.checked_sub(lead_e)
                    .map(|qe| (qe, c.mul(&lead_inv)))
            });
            let terms: Option<Vec<_>> = terms.collect();
            return Some(Self::from_terms(self.dim, terms?));
        }
        // Quotient exponents are confined to this box when division is exact.
        let ab = self.z_bounds()?;
        let db = divisor.z_bounds()?;
        let bx: Vec<(i32, i32)> = ab.iter().zip(&db).map(|(a, d)| (a.0 - d.0, a.1 - d.1)).collect();
        if bx.iter().any(|(lo, hi)| lo > hi) {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.dim);
        while let Some((e, c)) = rem.leading_term() {
            let qe = e.checked_sub(lead_e)?;
            if qe.z.iter().zip(&bx).any(|(&x, &(lo, hi))| x < lo || x > hi) {
                return None;
            }
            let qc = c.mul(&lead_inv);
            let step = LaurentPoly::monomial(self.dim, qe.z.clone(), qe.lambda, qc.clone());
            rem = rem.add_unchecked(&-(&step * divisor));
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(rhs, ArithOp::Add).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(&-rhs, ArithOp::Add).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(rhs, ArithOp::Mul).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            dim: self.dim,
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `e^{2πi p}` for `p ∈ [0, 1)`, exact at quarter turns.
fn unit_phase(p: f64) -> Complex64 {
    if p == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if p == 0.25 {
        Complex64::new(0.0, 1.0)
    } else if p == 0.5 {
        Complex64::new(-1.0, 0.0)
    } else if p == 0.75 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, TAU * p)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. `-1*z1 + lambda^2 + -3 + -1*z1^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (j, &x) in e.z.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("z{}", j + 1)),
                    _ => factors.push(format!("z{}^{}", j + 1, x)),
                }
            }
            match e.lambda {
                0 => {}
                1 => factors.push("lambda".into()),
                k => factors.push(format!("lambda^{k}")),
            }
            let cs = c.to_string();
            if factors.is_empty() {
                f.write_str(&cs)?;
            } else if cs == "1" {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", cs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: i32) -> LaurentPoly {
        LaurentPoly::z_pow(1, 0, e)
    }
    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::from_integer(1, n)
    }
    fn lam() -> LaurentPoly {
        LaurentPoly::lambda(1)
    }

    #[test]
    fn cancellation_and_identity() {
        let p = &z(1) + &z(-1);
        assert_eq!(&p + &-z(-1), z(1));
        assert_eq!(&p * &LaurentPoly::one(1), p);
        assert_eq!(&p - &p, LaurentPoly::zero(1));
    }

    #[test]
    fn product_of_linear_factors() {
        // (z − λ)(−z − λ) = λ² − z²
        let a = &z(1) - &lam();
        let b = &-z(1) - &lam();
        assert_eq!(&a * &b, &lam().pow(2) - &z(2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert!(matches!(
            a.arith(&b, ArithOp::Add),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn shift_substitution() {
        let p = &z(1) + &z(-1);
        assert_eq!(p.substitute_shift(&[1], 2).unwrap(), -p.clone());
        assert_eq!(p.substitute_shift(&[0], 5).unwrap(), p);
        let even = &(&(&lam().pow(2) - &z(2)) - &c(2)) - &z(-2);
        assert_eq!(even.substitute_shift(&[1], 2).unwrap(), even);
        // ζ = i: z² → −z²
        let q = even.substitute_shift(&[1], 4).unwrap();
        assert_eq!(q, &(&(&lam().pow(2) + &z(2)) - &c(2)) + &z(-2));
    }

    #[test]
    fn lambda_derivative_rules() {
        let p = &(&(&lam().pow(2) - &c(3)) - &z(1)) - &z(-1);
        assert_eq!(p.lambda_derivative(), lam().scale(&Cyclotomic::from_integer(2)));
        assert!((&z(1) + &c(4)).lambda_derivative().is_zero());
        assert_eq!(lam().pow(5).lambda_derivative(), lam().pow(4).scale(&Cyclotomic::from_integer(5)));
    }

    #[test]
    fn numeric_evaluation() {
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let zero = Complex64::new(0.0, 0.0);
        let p = &z(1) + &z(-1);
        assert!((p.eval_numeric(&[one], zero).unwrap() - 2.0).norm() < 1e-15);
        let q = &lam().pow(2) - &z(2);
        assert!((q.eval_numeric(&[i], zero).unwrap() - 1.0).norm() < 1e-15);
        assert_eq!(LaurentPoly::zero(1).eval_numeric(&[i], one).unwrap(), zero);
        assert!(matches!(p.eval_numeric(&[zero], zero), Err(Error::ZeroCoordinate(0))));
    }

    #[test]
    fn lambda_shift_and_coeffs() {
        // (λ+1)² = λ² + 2λ + 1
        let p = lam().pow(2).shift_lambda(&Cyclotomic::from_integer(1));
        let expected = &(&lam().pow(2) + &lam().scale(&Cyclotomic::from_integer(2))) + &c(1);
        assert_eq!(p, expected);
        let coeffs = expected.lambda_coeffs();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(LaurentPoly::from_lambda_coeffs(1, &coeffs), expected);
    }

    #[test]
    fn exact_division() {
        let a = &z(1) - &lam();
        let b = &z(-1) + &c(3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!((&prod + &c(1)).div_exact(&a).is_none());
    }

    #[test]
    fn rendering() {
        let p = &(&(&lam().pow(2) - &c(3)) - &z(1)) - &z(-1);
        assert_eq!(p.to_string(), "-1*z1 + lambda^2 + -3 + -1*z1^-1");
    }
}
