//! Consistency checks specific to periodic Schrödinger operators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::charpoly::charpoly;
use super::criteria::{derive_seed, reduced_shifts};
use super::report::{Method, TestRecord, Verdict, Witness};
use crate::algebra::{Cyclotomic, ExponentVector, LaurentPoly};
use crate::bands::hermitian_eigenvalues;
use crate::error::Result;
use crate::operator::spec::unravel;
use crate::operator::{build_dual_symbol, build_schrodinger_symbol, SchrodingerSpec};

/// `h(z, λ) = ∏_n (Σ_j ρ^j_{n_j} z_j − λ)` over the fundamental domain,
/// with `ρ^j_{n_j} = e^{2πi n_j / q_j}`.
pub fn top_component_product(periods: &[usize]) -> LaurentPoly {
    let d = periods.len();
    let l = periods.iter().fold(1u32, |acc, &q| num_integer::lcm(acc, q as u32));
    let size: usize = periods.iter().product();
    let mut h = LaurentPoly::one(d);
    for idx in 0..size {
        let n = unravel(idx, periods);
        let mut terms: Vec<(ExponentVector, Cyclotomic)> = (0..d)
            .map(|j| {
                let mut e = vec![0; d];
                e[j] = 1;
                let k = n[j] as i64 * (l / periods[j] as u32) as i64;
                (ExponentVector::new(e, 0), Cyclotomic::root_of_unity(l, k))
            })
            .collect();
        terms.push((ExponentVector::new(vec![0; d], 1), Cyclotomic::from_integer(-1)));
        h = &h * &LaurentPoly::from_terms(d, terms);
    }
    h
}

/// Checks that the top-weight component of `det(B_0 + B_V − λ)` is `h`, and
/// that `h(ζ⊙z, λ) ≠ h(z, λ)` for every `ζ = ζ(m, N)`, `N ≤ n_max`, with `ζ^q ≠ 1`.
pub fn top_component_check(spec: &SchrodingerSpec, n_max: u64) -> Result<TestRecord> {
    const NAME: &str = "top_component";
    let dual = charpoly(&build_dual_symbol(spec))?;
    let top = dual.poly().top_weight_component();
    let h = top_component_product(&spec.periods);
    if top != h {
        return Ok(TestRecord::new(NAME, Verdict::Fails, Method::Exact).with_witness(Witness::Comparison {
            left: top.to_string(),
            right: h.to_string(),
        }));
    }
    let mut checked = 0usize;
    for (m, n) in reduced_shifts(spec.dimension(), n_max) {
        let fixes_q = m
            .iter()
            .zip(&spec.periods)
            .all(|(&mj, &qj)| (mj * qj as i64).rem_euclid(n as i64) == 0);
        if fixes_q {
            continue;
        }
        checked += 1;
        if h.substitute_shift(&m, n)? == h {
            return Ok(TestRecord::new(NAME, Verdict::Fails, Method::Exact)
                .with_witness(Witness::shift(&m, n, "h(zeta*z, lambda) = h(z, lambda)")));
        }
    }
    Ok(TestRecord::new(NAME, Verdict::Holds, Method::Exact)
        .with_witness(Witness::Polynomial {
            polynomial: h.to_string(),
        })
        .with_detail(format!(
            "top component equals h; h moved by all {checked} shifts with zeta^q != 1, N <= {n_max}"
        )))
}

/// Exact identity `det(B_0 + B_V − λ)(z) = P(z^q, λ)` plus eigenvalue agreement
/// of the two symbols at `samples` random torus points.
pub fn dual_consistency_check(spec: &SchrodingerSpec, samples: usize, seed: u64) -> Result<TestRecord> {
    const NAME: &str = "dual_consistency";
    let direct = build_schrodinger_symbol(spec);
    let dual = build_dual_symbol(spec);
    let q: Vec<i32> = spec.periods.iter().map(|&x| x as i32).collect();
    let lhs = charpoly(&dual)?.into_poly();
    let rhs = charpoly(&direct)?.poly().scale_exponents(&q);
    if lhs != rhs {
        return Ok(TestRecord::new(NAME, Verdict::Fails, Method::Exact).with_witness(Witness::Comparison {
            left: lhs.to_string(),
            right: rhs.to_string(),
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, NAME));
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let k: Vec<f64> = (0..spec.dimension()).map(|_| rng.gen::<f64>()).collect();
        let qk: Vec<f64> = k.iter().zip(&spec.periods).map(|(x, &qj)| x * qj as f64).collect();
        let a = hermitian_eigenvalues(&dual.eval_symbol(&k))?;
        let b = hermitian_eigenvalues(&direct.eval_symbol(&qk))?;
        for (x, y) in a.iter().zip(&b) {
            worst = worst.max((x - y).abs());
        }
    }
    let detail = format!("exact identity holds; max eigenvalue deviation {worst:.3e} over {samples} points");
    let verdict = if worst <= 1e-9 { Verdict::Holds } else { Verdict::Fails };
    Ok(TestRecord::new(NAME, verdict, Method::Exact)
        .with_witness(Witness::Comparison {
            left: lhs.to_string(),
            right: rhs.to_string(),
        })
        .with_detail(detail))
}
