//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element of order `N` is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}`
//! of the principal root `ζ = e^{2πi/N}`, fully reduced modulo the `N`-th
//! cyclotomic polynomial. Elements of different orders are compared and
//! combined by lifting both into the field of order `lcm(N, M)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::upoly;

thread_local! {
    static MINPOLY_CACHE: RefCell<HashMap<u32, Rc<[i64]>>> = RefCell::new(HashMap::new());
}

/// The `n`-th cyclotomic polynomial, coefficients in ascending order.
///
/// Computed as `x^n - 1` divided by every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_minimal_poly(n: u32) -> Vec<i64> {
    cached_minpoly(n).to_vec()
}

fn cached_minpoly(n: u32) -> Rc<[i64]> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(hit) = MINPOLY_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return hit;
    }
    let n_us = n as usize;
    let mut num = vec![0i128; n_us + 1];
    num[0] = -1;
    num[n_us] = 1;
    for d in 1..n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let div: Vec<i128> = cached_minpoly(d).iter().map(|&c| c as i128).collect();
        num = exact_monic_div(&num, &div);
    }
    let poly: Rc<[i64]> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    MINPOLY_CACHE.with(|c| c.borrow_mut().insert(n, poly.clone()));
    poly
}

fn exact_monic_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// An element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); totient(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational_in(order, BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `q` embedded in the field of order `order`.
    pub fn from_rational_in(order: u32, q: BigRational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = q;
        out
    }

    /// `ζ_order^k` for the principal root `e^{2πi/order}`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut dense = vec![BigRational::zero(); e + 1];
        dense[e] = BigRational::one();
        Self::from_dense(order, dense)
    }

    /// Builds an element from coefficients of `1, ζ, ζ², …` of any length,
    /// reducing modulo the minimal polynomial.
    pub fn from_dense(order: u32, mut dense: Vec<BigRational>) -> Self {
        let phi = cached_minpoly(order);
        let deg = phi.len() - 1;
        for i in (deg..dense.len()).rev() {
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[i]);
            let base = i - deg;
            for (j, &pc) in phi[..deg].iter().enumerate() {
                if pc != 0 {
                    dense[base + j] -= &c * BigRational::from_integer(BigInt::from(pc));
                }
            }
        }
        dense.resize(deg, BigRational::zero());
        Cyclotomic {
            order,
            coeffs: dense,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the element in the field of order `target`; `order` must divide `target`.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift order {} into order {}",
            self.order,
            target
        );
        if let Some(q) = self.as_rational() {
            return Self::from_rational_in(target, q.clone());
        }
        let step = (target / self.order) as usize;
        let mut dense = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Self::from_dense(target, dense)
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Option<Self>) {
        if self.order == other.order {
            (std::borrow::Cow::Borrowed(self), None)
        } else {
            let l = self.order.lcm(&other.order);
            (std::borrow::Cow::Owned(self.lift(l)), Some(other.lift(l)))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let b = b.as_ref().unwrap_or(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic {
            order: a.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let b = b.as_ref().unwrap_or(other);
        if a.order <= 2 {
            return Cyclotomic {
                order: a.order,
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        if let Some(q) = a.as_rational() {
            return b.scale(q);
        }
        if let Some(q) = b.as_rational() {
            return a.scale(q);
        }
        let n = a.coeffs.len();
        let mut dense = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Self::from_dense(a.order, dense)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational_in(self.order, q.recip()));
        }
        let modulus: Vec<BigRational> = cached_minpoly(self.order)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let inv = upoly::inverse_mod(&self.coeffs, &modulus)?;
        Some(Self::from_dense(self.order, inv))
    }

    /// Complex conjugate, i.e. the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.as_rational().is_some() {
            return self.clone();
        }
        let n = self.order as usize;
        let mut dense = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[(n - i) % n] += c;
            }
        }
        Self::from_dense(self.order, dense)
    }

    /// Floating value using `ζ = e^{2πi/N}`.
    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            if i == 0 {
                acc.re += v;
            } else {
                acc += Complex64::from_polar(v, TAU * i as f64 / self.order as f64);
            }
        }
        acc
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => q.to_f64().unwrap_or(f64::NAN),
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        let b = b.as_ref().unwrap_or(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// `p/q` for rationals, `cyc(N)[c0,c1,...]` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return f.write_str(&fmt_rational(q));
        }
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        write!(f, "cyc({})[{}]", self.order, parts.join(","))
    }
}

/// Parses either a rational `p/q` (or integer) or `cyc(N)[c0,c1,...]`.
pub fn parse_cyclotomic(s: &str) -> Option<Cyclotomic> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("cyc(") {
        let (order, rest) = rest.split_once(")[")?;
        let body = rest.strip_suffix(']')?;
        let order: u32 = order.trim().parse().ok().filter(|&n| n >= 1)?;
        let coeffs = body
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cyclotomic::from_dense(order, coeffs));
    }
    parse_rational(s).map(Cyclotomic::from_rational)
}

/// Exact rational parsing: `"p"` or `"p/q"` with integer `p`, `q`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn minimal_polys() {
        assert_eq!(cyclotomic_minimal_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_minimal_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_minimal_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_minimal_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_minimal_poly(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_minimal_poly(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn roots_of_unity_have_their_order() {
        for n in 1..13u32 {
            for k in 0..n as i64 {
                let z = Cyclotomic::root_of_unity(n, k);
                assert_eq!(z.pow(n), Cyclotomic::one(n));
            }
        }
        // ζ_4 = i
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mixed_order_equality_and_lift() {
        // ζ_6^3 = -1 and ζ_6^2 = ζ_3
        assert_eq!(Cyclotomic::root_of_unity(6, 3), Cyclotomic::from_integer(-1));
        assert_eq!(Cyclotomic::root_of_unity(6, 2), Cyclotomic::root_of_unity(3, 1));
        let sum = Cyclotomic::root_of_unity(3, 1).add(&Cyclotomic::root_of_unity(4, 1));
        assert_eq!(sum.order(), 12);
        let back = sum.sub(&Cyclotomic::root_of_unity(4, 1));
        assert_eq!(back, Cyclotomic::root_of_unity(3, 1));
    }

    #[test]
    fn inverse_and_conjugate() {
        for n in [3u32, 5, 7, 8, 12] {
            let x = Cyclotomic::root_of_unity(n, 1)
                .add(&Cyclotomic::from_rational(r(2, 3)))
                .mul(&Cyclotomic::root_of_unity(n, 2).add(&Cyclotomic::from_integer(5)));
            let inv = x.inv().unwrap();
            assert_eq!(x.mul(&inv), Cyclotomic::one(n));
            let c = x.to_complex().conj();
            let cc = x.conj().to_complex();
            assert!((c - cc).norm() < 1e-12);
        }
        assert!(Cyclotomic::zero(5).inv().is_none());
    }

    #[test]
    fn numeric_value() {
        let z = Cyclotomic::root_of_unity(8, 3).to_complex();
        let expected = Complex64::from_polar(1.0, TAU * 3.0 / 8.0);
        assert!((z - expected).norm() < 1e-15);
    }

    #[test]
    fn parse_and_render() {
        let x = parse_cyclotomic("cyc(4)[1/2,-3]").unwrap();
        assert_eq!(x.to_string(), "cyc(4)[1/2,-3]");
        assert_eq!(parse_cyclotomic("-7/14").unwrap().to_string(), "-1/2");
        assert!(parse_rational("0.5").is_none());
        assert!(parse_rational("1/0").is_none());
    }
}
