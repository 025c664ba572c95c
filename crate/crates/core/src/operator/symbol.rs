//! Floquet symbols: matrices of Laurent polynomials in `z_1..z_d`.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;

use super::spec::{ravel, unravel, GraphSpec, OperatorSpec, SchrodingerSpec};
use crate::algebra::{Cyclotomic, ExponentVector, LaurentPoly};
use crate::bands::eigen::ComplexMatrix;
use crate::error::{Error, Result};

/// Square matrix `𝒜(z)` of Laurent polynomials of `λ`-degree 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FloquetSymbol {
    dim: usize,
    size: usize,
    entries: Vec<LaurentPoly>,
}

/// Outcome of [`FloquetSymbol::validate_hermitian`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HermitianCheck {
    Pass,
    /// First `(i, j)` in row-major order where `𝒜_ij(z) ≠ conj(𝒜_ji)(z⁻¹)`.
    Fail { row: usize, col: usize },
}

impl HermitianCheck {
    pub fn is_pass(&self) -> bool {
        *self == HermitianCheck::Pass
    }
}

impl FloquetSymbol {
    pub fn zeros(dim: usize, size: usize) -> Self {
        FloquetSymbol {
            dim,
            size,
            entries: vec![LaurentPoly::zero(dim); size * size],
        }
    }

    /// Builds a symbol from row-major entries.
    pub fn from_entries(dim: usize, size: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {size}×{size} symbol, found {}",
                size * size,
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: e.dim(),
            });
        }
        if entries.iter().any(|e| e.lambda_degree().unwrap_or(0) > 0) {
            return Err(Error::InvalidArgument("symbol entries must not depend on λ".into()));
        }
        Ok(FloquetSymbol { dim, size, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    fn add_to(&mut self, i: usize, j: usize, p: &LaurentPoly) {
        let k = i * self.size + j;
        self.entries[k] = &self.entries[k] + p;
    }

    /// Checks `𝒜_ij(z) = conj(𝒜_ji)(z⁻¹)` entrywise.
    pub fn validate_hermitian(&self) -> HermitianCheck {
        for i in 0..self.size {
            for j in i..self.size {
                if *self.entry(i, j) != self.entry(j, i).conj_reflect() {
                    return HermitianCheck::Fail { row: i, col: j };
                }
            }
        }
        HermitianCheck::Pass
    }

    /// `𝒜(e^{2πik})`, symmetrized to be exactly Hermitian.
    pub fn eval_symbol(&self, k: &[f64]) -> ComplexMatrix {
        assert_eq!(k.len(), self.dim, "quasimomentum length must equal dimension");
        self.eval_with(|p| p.eval_torus(k, Complex64::new(0.0, 0.0)))
    }

    /// `𝒜` at the grid point `k = r / n`, with exact phase reduction.
    pub fn eval_grid(&self, r: &[i64], n: u64) -> ComplexMatrix {
        assert_eq!(r.len(), self.dim, "grid index length must equal dimension");
        self.eval_with(|p| p.eval_grid(r, n, Complex64::new(0.0, 0.0)))
    }

    fn eval_with(&self, f: impl Fn(&LaurentPoly) -> Complex64) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                m.set(i, j, f(self.entry(i, j)));
            }
        }
        m.symmetrize();
        m
    }
}

impl fmt::Display for FloquetSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[ {} ]", row.join(" | "))?;
        }
        Ok(())
    }
}

fn rational_poly(dim: usize, v: &BigRational) -> LaurentPoly {
    LaurentPoly::from_rational(dim, v.clone())
}

/// Symbol of the periodic Schrödinger operator on the fundamental-domain basis.
///
/// Each site `n` hops to `n ± e_j`; a hop leaving the box across face `j`
/// wraps back and picks up `z_j^{±1}`. Coincident hops are summed.
pub fn build_schrodinger_symbol(spec: &SchrodingerSpec) -> FloquetSymbol {
    let d = spec.dimension();
    let q = &spec.periods;
    let size = spec.cell_size();
    let mut a = FloquetSymbol::zeros(d, size);
    for idx in 0..size {
        let n = unravel(idx, q);
        a.add_to(idx, idx, &rational_poly(d, &spec.potential[idx]));
        for j in 0..d {
            for step in [-1i64, 1] {
                let target = n[j] as i64 + step;
                let (wrapped, wind) = target.div_mod_floor(&(q[j] as i64));
                let mut m = n.clone();
                m[j] = wind as usize;
                let jdx = ravel(&m, q);
                // n + step·e_j = m + wrapped·q_j e_j; the Bloch phase is z_j^{wrapped}.
                a.add_to(idx, jdx, &LaurentPoly::z_pow(d, j, wrapped as i32));
            }
        }
    }
    a
}

/// Symbol of a quotient-graph operator: `Σ w z^s` over edges plus onsite terms.
pub fn build_graph_symbol(spec: &GraphSpec) -> FloquetSymbol {
    let d = spec.dimension;
    let mut a = FloquetSymbol::zeros(d, spec.vertices);
    for (v, c) in spec.onsite.iter().enumerate() {
        a.add_to(v, v, &rational_poly(d, c));
    }
    for e in &spec.edges {
        let z: Vec<i32> = e.shift.iter().map(|&s| s as i32).collect();
        a.add_to(e.from, e.to, &LaurentPoly::monomial(d, z, 0, e.weight.clone()));
    }
    a
}

/// Direct symbol for either operator kind.
pub fn build_symbol(spec: &OperatorSpec) -> FloquetSymbol {
    match spec {
        OperatorSpec::Schrodinger(s) => build_schrodinger_symbol(s),
        OperatorSpec::Graph(g) => build_graph_symbol(g),
    }
}

/// Discrete Fourier transform of the potential over `Z^d / Γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialSpectrumTable {
    periods: Vec<usize>,
    order: u32,
    values: Vec<Cyclotomic>,
}

impl PotentialSpectrumTable {
    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    /// Cyclotomic order `lcm(q)` of the coefficients.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `V̂(m)`, with `m` reduced mod the periods.
    pub fn value(&self, m: &[i64]) -> &Cyclotomic {
        let r: Vec<usize> = m
            .iter()
            .zip(&self.periods)
            .map(|(&x, &qj)| x.rem_euclid(qj as i64) as usize)
            .collect();
        &self.values[ravel(&r, &self.periods)]
    }

    /// Row-major values over `∏ [0, q_j)`.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// `V(n) = Σ_m V̂(m) ω^{n·m}`; exact inverse of [`dft_potential`].
    pub fn inverse(&self) -> Vec<Cyclotomic> {
        let q = &self.periods;
        let size: usize = q.iter().product();
        (0..size)
            .map(|ndx| {
                let n = unravel(ndx, q);
                (0..size).fold(Cyclotomic::zero(self.order), |acc, mdx| {
                    let m = unravel(mdx, q);
                    let e = phase_exponent(&n, &m, q, self.order);
                    acc.add(&self.values[mdx].mul(&Cyclotomic::root_of_unity(self.order, e)))
                })
            })
            .collect()
    }
}

fn lcm_periods(q: &[usize]) -> u32 {
    q.iter().fold(1u32, |l, &x| l.lcm(&(x as u32)))
}

/// Exponent `e` with `ω^{n·m} = ζ_L^e`, where `ω_j = e^{2πi/q_j}` and `L = lcm(q)`.
fn phase_exponent(n: &[usize], m: &[usize], q: &[usize], l: u32) -> i64 {
    n.iter()
        .zip(m)
        .zip(q)
        .map(|((&a, &b), &qj)| (a * b) as i64 * (l as i64 / qj as i64))
        .sum()
}

/// `V̂(m) = (1/Q) Σ_n V(n) ω^{−n·m}`.
pub fn dft_potential(spec: &SchrodingerSpec) -> PotentialSpectrumTable {
    let q = &spec.periods;
    let size = spec.cell_size();
    let l = lcm_periods(q);
    let inv_q = BigRational::new(1.into(), (size as i64).into());
    let values = (0..size)
        .map(|mdx| {
            let m = unravel(mdx, q);
            (0..size)
                .fold(Cyclotomic::zero(l), |acc, ndx| {
                    let n = unravel(ndx, q);
                    let e = -phase_exponent(&n, &m, q, l);
                    let term = Cyclotomic::from_rational_in(l, spec.potential[ndx].clone())
                        .mul(&Cyclotomic::root_of_unity(l, e));
                    acc.add(&term)
                })
                .scale(&inv_q)
        })
        .collect();
    PotentialSpectrumTable {
        periods: q.clone(),
        order: l,
        values,
    }
}

/// Dual symbol `B_0 + B_V`: diagonal `Σ_j (ρ_j z_j + (ρ_j z_j)^{-1})` with
/// `ρ_j = e^{2πi n_j / q_j}`, off-diagonal `V̂(n − n′)`.
pub fn build_dual_symbol(spec: &SchrodingerSpec) -> FloquetSymbol {
    let d = spec.dimension();
    let q = &spec.periods;
    let size = spec.cell_size();
    let l = lcm_periods(q) as i64;
    let vhat = dft_potential(spec);
    let mut a = FloquetSymbol::zeros(d, size);
    for ndx in 0..size {
        let n = unravel(ndx, q);
        for j in 0..d {
            let k = n[j] as i64 * (l / q[j] as i64);
            let mut up = vec![0; d];
            up[j] = 1;
            let mut down = vec![0; d];
            down[j] = -1;
            let rho = Cyclotomic::root_of_unity(l as u32, k);
            let rho_inv = Cyclotomic::root_of_unity(l as u32, -k);
            let term = LaurentPoly::from_terms(
                d,
                [
                    (ExponentVector::new(up, 0), rho),
                    (ExponentVector::new(down, 0), rho_inv),
                ],
            );
            a.add_to(ndx, ndx, &term);
        }
        for mdx in 0..size {
            let m = unravel(mdx, q);
            let diff: Vec<i64> = n.iter().zip(&m).map(|(&x, &y)| x as i64 - y as i64).collect();
            a.add_to(ndx, mdx, &LaurentPoly::constant(d, vhat.value(&diff).clone()));
        }
    }
    a
}
