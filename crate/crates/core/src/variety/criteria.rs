//! Square-freeness, condition `C_α`, period certificates and offset tests,
//! all decided through `λ`-resultants of the characteristic polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::report::{Method, TestRecord, Verdict, Witness};
use crate::algebra::cyclotomic::fmt_rational;
use crate::algebra::lattice::shift_as_fraction;
use crate::algebra::resultant::{resultant_degree_bound, resultant_term_bound, sylvester_dimension};
use crate::algebra::{
    discriminant_lambda, is_zero_probabilistic, resultant_lambda, support_period_group, Cyclotomic,
    LaurentPoly, PeriodGroup, ZeroTestConfig, ZeroVerdict,
};
use crate::error::{Error, Result};

/// Controls when symbolic resultants are computed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriteriaConfig {
    pub zero_test: ZeroTestConfig,
    /// Skip symbolic resultants entirely.
    pub probabilistic: bool,
    pub max_sylvester_dim: usize,
    pub max_terms: u64,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig {
            zero_test: ZeroTestConfig::default(),
            probabilistic: false,
            max_sylvester_dim: 16,
            max_terms: 20_000,
        }
    }
}

impl CriteriaConfig {
    fn symbolic_allowed(&self, p: &LaurentPoly, r: &LaurentPoly) -> bool {
        !self.probabilistic
            && sylvester_dimension(p, r) <= self.max_sylvester_dim
            && resultant_term_bound(p, r) <= self.max_terms
    }
}

/// Deterministic per-test seed.
pub fn derive_seed(seed: u64, tag: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(tag.as_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("digest has 32 bytes"))
}

fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag))
}

fn exponent_span(p: &LaurentPoly) -> u64 {
    p.z_bounds()
        .map(|b| b.iter().map(|(lo, hi)| (hi - lo) as u64).sum())
        .unwrap_or(0)
}

fn leading_span(p: &LaurentPoly) -> u64 {
    p.lambda_coeffs().last().map(exponent_span).unwrap_or(0)
}

fn render_point(p: &[BigInt]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

/// `Res_λ` of the specializations at `point`, or zero when a `λ`-leading
/// coefficient vanishes there (the specialization would not commute).
fn specialized_resultant(p: &LaurentPoly, r: &LaurentPoly, point: &[BigInt]) -> Cyclotomic {
    let (Ok(a), Ok(b)) = (p.eval_z_exact(point), r.eval_z_exact(point)) else {
        return Cyclotomic::zero(1);
    };
    if a.lambda_degree() != p.lambda_degree() || b.lambda_degree() != r.lambda_degree() {
        return Cyclotomic::zero(1);
    }
    resultant_lambda(&a, &b)
        .map(|x| x.constant_term())
        .unwrap_or_else(|_| Cyclotomic::zero(1))
}

fn specialized_discriminant(p: &LaurentPoly, point: &[BigInt]) -> Cyclotomic {
    let Ok(a) = p.eval_z_exact(point) else {
        return Cyclotomic::zero(1);
    };
    if a.lambda_degree() != p.lambda_degree() {
        return Cyclotomic::zero(1);
    }
    discriminant_lambda(&a)
        .map(|x| x.constant_term())
        .unwrap_or_else(|_| Cyclotomic::zero(1))
}

/// Square-free iff the `λ`-discriminant is not identically zero.
pub fn squarefree_test(p: &LaurentPoly, cfg: &CriteriaConfig, seed: u64) -> Result<TestRecord> {
    const NAME: &str = "squarefree";
    if p.lambda_degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantInLambda("square-free test argument"));
    }
    let dp = p.lambda_derivative();
    if cfg.symbolic_allowed(p, &dp) {
        let disc = discriminant_lambda(p)?;
        let verdict = if disc.is_zero() { Verdict::Fails } else { Verdict::Holds };
        return Ok(TestRecord::new(NAME, verdict, Method::Exact).with_witness(Witness::Polynomial {
            polynomial: disc.to_string(),
        }));
    }
    let degree = resultant_degree_bound(p, &dp) + 2 * leading_span(p);
    let mut rng = rng_for(seed, NAME);
    let v = is_zero_probabilistic(
        |pt| specialized_discriminant(p, pt),
        p.dim(),
        degree,
        cfg.zero_test,
        &mut rng,
    );
    Ok(zero_verdict_record(NAME, v, |_| {
        Witness::Polynomial {
            polynomial: "discriminant vanished at every sampled point".into(),
        }
    }))
}

fn zero_verdict_record(name: &str, v: ZeroVerdict, on_zero: impl FnOnce(f64) -> Witness) -> TestRecord {
    match v {
        ZeroVerdict::Nonzero { point, value } => TestRecord::new(name, Verdict::Holds, Method::Exact).with_witness(
            Witness::EvaluationPoint {
                point: render_point(&point),
                value: value.to_string(),
            },
        ),
        v @ ZeroVerdict::ProbablyZero { .. } => {
            let bound = v.failure_bound();
            TestRecord::new(name, Verdict::Fails, Method::Probabilistic)
                .with_witness(on_zero(bound))
                .with_bound(bound)
        }
    }
}

/// Canonical test name for the shift `α = m/N`.
pub fn c_alpha_name(m: &[i64], n: u64) -> String {
    let alpha: Vec<String> = shift_as_fraction(m, n).iter().map(fmt_rational).collect();
    format!("c_alpha[{}]", alpha.join(","))
}

/// Condition `C_α` for `α = m/N`: holds iff `Res_λ(P(z,λ), P(ζ⊙z,λ)) ≢ 0`.
///
/// A nonzero value of the resultant at a random integer point proves the
/// condition exactly; vanishing at every sample is confirmed symbolically
/// when the resultant is small enough, otherwise reported probabilistically.
pub fn c_alpha_test(p: &LaurentPoly, m: &[i64], n: u64, cfg: &CriteriaConfig, seed: u64) -> Result<TestRecord> {
    if m.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: m.len(),
        });
    }
    if n == 0 || m.iter().all(|&x| x.rem_euclid(n as i64) == 0) {
        return Err(Error::TrivialShift { m: m.to_vec(), n });
    }
    if p.lambda_degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantInLambda("C_alpha test argument"));
    }
    let name = c_alpha_name(m, n);
    let r = p.substitute_shift(m, n)?;
    if r == *p {
        return Ok(TestRecord::new(&name, Verdict::Fails, Method::Exact).with_witness(Witness::shift(
            m,
            n,
            "P(zeta*z, lambda) = P(z, lambda), so the resultant is identically zero",
        )));
    }
    let degree = resultant_degree_bound(p, &r) + leading_span(p) + leading_span(&r);
    let mut rng = rng_for(seed, &name);
    let v = is_zero_probabilistic(
        |pt| specialized_resultant(p, &r, pt),
        p.dim(),
        degree,
        cfg.zero_test,
        &mut rng,
    );
    if let ZeroVerdict::ProbablyZero { .. } = v {
        if cfg.symbolic_allowed(p, &r) {
            let res = resultant_lambda(p, &r)?;
            return Ok(if res.is_zero() {
                TestRecord::new(&name, Verdict::Fails, Method::Exact).with_witness(Witness::shift(
                    m,
                    n,
                    "Res_lambda(P(z, lambda), P(zeta*z, lambda)) = 0 identically",
                ))
            } else {
                TestRecord::new(&name, Verdict::Holds, Method::Exact).with_witness(Witness::Polynomial {
                    polynomial: res.to_string(),
                })
            });
        }
    }
    Ok(zero_verdict_record(&name, v, |_| {
        Witness::shift(m, n, "resultant vanished at every sampled point")
    }))
}

/// All shifts `m/N` with `2 ≤ N ≤ n_max`, one representative per reduced fraction.
pub fn reduced_shifts(dim: usize, n_max: u64) -> Vec<(Vec<i64>, u64)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let total = (n as usize).pow(dim as u32);
        for idx in 0..total {
            let mut m = vec![0i64; dim];
            let mut x = idx;
            for j in (0..dim).rev() {
                m[j] = (x % n as usize) as i64;
                x /= n as usize;
            }
            if m.iter().fold(n as i64, |g, &v| g.gcd(&v)) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

/// `C_α` for every reduced shift with denominator up to `n_max`, in a fixed order.
pub fn c_alpha_sweep(p: &LaurentPoly, n_max: u64, cfg: &CriteriaConfig, seed: u64) -> Result<Vec<TestRecord>> {
    reduced_shifts(p.dim(), n_max)
        .par_iter()
        .map(|(m, n)| c_alpha_test(p, m, *n, cfg, seed))
        .collect()
}

/// Support period group of `P` and the verdict "no non-trivial periods".
///
/// Holds when the group is trivial and `P` is square-free. Without the
/// irreducibility assertion a holding verdict carries that assumption.
pub fn no_nontrivial_periods_certificate(
    p: &LaurentPoly,
    irreducible: bool,
    squarefree: &TestRecord,
) -> Result<(PeriodGroup, TestRecord)> {
    const NAME: &str = "no_nontrivial_periods";
    let group = support_period_group(p)?;
    let witness = Witness::period_group(&group);
    let record = if group.is_continuum() {
        TestRecord::new(NAME, Verdict::ContinuumDegenerate, Method::Exact)
            .with_witness(witness)
            .with_detail(format!(
                "support lattice has rank {} < {}; P is invariant under a {}-dimensional torus",
                group.dim - group.continuum_rank,
                group.dim,
                group.continuum_rank
            ))
    } else if !group.is_trivial() {
        TestRecord::new(NAME, Verdict::Fails, Method::Exact)
            .with_witness(witness)
            .with_detail("P(zeta*z, lambda) = P(z, lambda) for every shift in the group")
    } else if !squarefree.holds() {
        let mut rec = TestRecord::new(NAME, squarefree.verdict, squarefree.method)
            .with_detail("support period group is trivial but P is not square-free");
        rec.witness = squarefree.witness.clone();
        rec.probabilistic_bound = squarefree.probabilistic_bound;
        rec
    } else {
        TestRecord::new(NAME, Verdict::Holds, squarefree.method).with_witness(witness)
    };
    let record = if irreducible || !record.holds() {
        record
    } else {
        record.with_assumption("conditional on irreducibility of P, which was not asserted")
    };
    Ok((group, record))
}

/// Name of the offset test for `a` and shift `m/N`.
pub fn offset_name(a: &BigRational, m: &[i64], n: u64) -> String {
    let alpha: Vec<String> = shift_as_fraction(m, n).iter().map(fmt_rational).collect();
    format!("offset[a={},alpha={}]", fmt_rational(a), alpha.join(","))
}

/// Refutes `P(z, λ) ≡ P(ζ⊙z, λ + a)` for `a ≠ 0` by comparing the constant
/// Fourier terms of the `(−λ)^{Q−1}` coefficients, which differ by `−Q·a`.
pub fn offset_test(p: &LaurentPoly, a: &BigRational, m: &[i64], n: u64) -> Result<TestRecord> {
    use num_traits::Zero;
    if a.is_zero() {
        return Err(Error::ZeroOffset);
    }
    let q = p
        .lambda_degree()
        .filter(|&q| q > 0)
        .ok_or(Error::ConstantInLambda("offset test argument"))?;
    let shifted = p.substitute_shift(m, n)?.shift_lambda(&Cyclotomic::from_rational(a.clone()));
    let sign = if (q - 1) % 2 == 0 { 1 } else { -1 };
    let trace_term = |x: &LaurentPoly| -> Cyclotomic {
        x.lambda_coeffs()[(q - 1) as usize]
            .constant_term()
            .scale(&BigRational::from_integer(sign.into()))
    };
    let original = trace_term(p);
    let moved = trace_term(&shifted);
    let diff = moved.sub(&original);
    let expected = Cyclotomic::from_rational(-a * BigRational::from_integer(BigInt::from(q)));
    if diff != expected {
        return Err(Error::Invariant(format!(
            "trace coefficient moved by {diff}, expected {expected}"
        )));
    }
    Ok(TestRecord::new(offset_name(a, m, n), Verdict::Holds, Method::Exact)
        .with_witness(Witness::CoefficientPair {
            original: original.to_string(),
            shifted: moved.to_string(),
            difference: diff.to_string(),
        })
        .with_detail("no constant offset possible"))
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
    fn q2() -> LaurentPoly {
        &(&(&lam() * &lam()) - &c(3)) - &(&z(1) + &z(-1))
    }
    fn loops() -> LaurentPoly {
        &(&(&lam() * &lam()) - &(&z(2) + &z(-2))) - &c(2)
    }
    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn squarefree_examples() {
        let cfg = CriteriaConfig::default();
        let t = squarefree_test(&q2(), &cfg, 0).unwrap();
        assert!(t.holds());
        let disc = &(&c(12) + &z(1).scale(&Cyclotomic::from_integer(4))) + &z(-1).scale(&Cyclotomic::from_integer(4));
        assert_eq!(
            t.witness,
            Some(Witness::Polynomial {
                polynomial: disc.to_string()
            })
        );
        let f = &(&lam() - &z(1)) - &z(-1);
        let t = squarefree_test(&(&f * &f), &cfg, 0).unwrap();
        assert_eq!(t.verdict, Verdict::Fails);
        assert!(squarefree_test(&loops(), &cfg, 0).unwrap().holds());
    }

    #[test]
    fn squarefree_probabilistic_mode() {
        let cfg = CriteriaConfig {
            probabilistic: true,
            ..Default::default()
        };
        let t = squarefree_test(&q2(), &cfg, 3).unwrap();
        assert!(t.holds());
        assert!(matches!(t.witness, Some(Witness::EvaluationPoint { .. })));
        let f = &(&lam() - &z(1)) - &z(-1);
        let t = squarefree_test(&(&f * &f), &cfg, 3).unwrap();
        assert_eq!(t.method, Method::Probabilistic);
        assert!(t.probabilistic_bound.unwrap() < 1e-20);
    }

    #[test]
    fn c_alpha_examples() {
        let cfg = CriteriaConfig::default();
        let t = c_alpha_test(&loops(), &[1], 2, &cfg, 0).unwrap();
        assert_eq!(t.verdict, Verdict::Fails);
        assert_eq!(t.method, Method::Exact);
        assert_eq!(t.name, "c_alpha[1/2]");
        assert!(c_alpha_test(&q2(), &[1], 2, &cfg, 0).unwrap().holds());
        assert!(c_alpha_test(&loops(), &[1], 4, &cfg, 0).unwrap().holds());
        assert!(matches!(
            c_alpha_test(&q2(), &[2], 2, &cfg, 0),
            Err(Error::TrivialShift { .. })
        ));
    }

    #[test]
    fn c_alpha_detects_factor_swap() {
        // (λ − z)(λ + z): the shift z → −z swaps the factors without fixing P's support lattice trivially.
        let p = &(&lam() - &z(1)) * &(&(&lam() + &z(1)) + &c(1));
        let cfg = CriteriaConfig::default();
        assert!(c_alpha_test(&p, &[1], 2, &cfg, 0).unwrap().holds());
        let swap = &(&lam() - &z(1)) * &(&lam() + &z(1));
        let t = c_alpha_test(&swap, &[1], 2, &cfg, 0).unwrap();
        assert_eq!(t.verdict, Verdict::Fails);
        // A factor shared only with a shifted copy: (λ − z)(λ − 2) vs (λ + z)(λ − 2).
        let shared = &(&lam() - &z(1)) * &(&lam() - &c(2));
        let t = c_alpha_test(&shared, &[1], 2, &cfg, 0).unwrap();
        assert_eq!(t.verdict, Verdict::Fails);
        assert_eq!(t.method, Method::Exact);
    }

    #[test]
    fn sweep_is_deterministic_and_reduced() {
        let shifts = reduced_shifts(1, 6);
        assert_eq!(shifts.len(), 1 + 2 + 2 + 4 + 2);
        let cfg = CriteriaConfig::default();
        let a = c_alpha_sweep(&q2(), 6, &cfg, 9).unwrap();
        let b = c_alpha_sweep(&q2(), 6, &cfg, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(TestRecord::holds));
        let l = c_alpha_sweep(&loops(), 6, &cfg, 9).unwrap();
        let failing: Vec<&str> = l.iter().filter(|t| !t.holds()).map(|t| t.name.as_str()).collect();
        assert_eq!(failing, vec!["c_alpha[1/2]"]);
    }

    #[test]
    fn period_certificates() {
        let cfg = CriteriaConfig::default();
        let sq = squarefree_test(&q2(), &cfg, 0).unwrap();
        let (g, t) = no_nontrivial_periods_certificate(&q2(), true, &sq).unwrap();
        assert!(g.is_trivial() && t.holds() && t.assumption.is_none());
        let (_, t) = no_nontrivial_periods_certificate(&q2(), false, &sq).unwrap();
        assert!(t.holds() && t.assumption.is_some());

        let sq = squarefree_test(&loops(), &cfg, 0).unwrap();
        let (g, t) = no_nontrivial_periods_certificate(&loops(), true, &sq).unwrap();
        assert_eq!(g.order, Some(2));
        assert_eq!(t.verdict, Verdict::Fails);

        let single = &(&(&z(1) + &z(-1)) + &c(5)) - &lam();
        let sq = squarefree_test(&single, &cfg, 0).unwrap();
        assert!(no_nontrivial_periods_certificate(&single, true, &sq).unwrap().1.holds());
    }

    #[test]
    fn continuum_is_reported() {
        let p = &(&LaurentPoly::monomial(2, vec![1, -1], 0, Cyclotomic::from_integer(1)) + &LaurentPoly::monomial(2, vec![-1, 1], 0, Cyclotomic::from_integer(1))) - &LaurentPoly::lambda(2);
        let sq = squarefree_test(&p, &CriteriaConfig::default(), 0).unwrap();
        let (_, t) = no_nontrivial_periods_certificate(&p, true, &sq).unwrap();
        assert_eq!(t.verdict, Verdict::ContinuumDegenerate);
    }

    #[test]
    fn offset_examples() {
        let t = offset_test(&q2(), &r(1, 1), &[1], 3).unwrap();
        assert_eq!(
            t.witness,
            Some(Witness::CoefficientPair {
                original: "0".into(),
                shifted: "-2".into(),
                difference: "-2".into()
            })
        );
        let single = &(&(&z(1) + &z(-1)) + &c(5)) - &lam();
        let t = offset_test(&single, &r(-1, 2), &[0], 1).unwrap();
        assert_eq!(
            t.witness,
            Some(Witness::CoefficientPair {
                original: "5".into(),
                shifted: "11/2".into(),
                difference: "1/2".into()
            })
        );
        assert!(matches!(offset_test(&q2(), &r(0, 1), &[1], 2), Err(Error::ZeroOffset)));
    }

    #[test]
    fn seeds_depend_on_tag() {
        assert_ne!(derive_seed(1, "a"), derive_seed(1, "b"));
        assert_eq!(derive_seed(1, "a"), derive_seed(1, "a"));
    }
}
