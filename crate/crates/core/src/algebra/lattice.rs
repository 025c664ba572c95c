//! Integer lattices, Smith normal form, and the group of torus shifts that
//! fix a Laurent polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Smith normal form `U · M · V = diag(d_1, …, d_r, 0, …)` of an integer matrix,
/// keeping only the column transform `V`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Positive elementary divisors `d_1 | d_2 | … | d_r`.
    pub divisors: Vec<i128>,
    /// Unimodular `cols × cols` column transform, row-major.
    pub v: Vec<Vec<i128>>,
}

/// Computes the Smith normal form of a `rows × cols` matrix.
pub fn smith_normal_form(m: &[Vec<i64>], cols: usize) -> SmithForm {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut divisors = Vec::new();

    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };
    // col_j -= q * col_t
    let sub_col = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, j: usize, t: usize, q: i128| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= q * row[t];
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero pivot in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { divisors, v };
            };
            a.swap(t, pi);
            if pj != t {
                swap_cols(&mut a, &mut v, t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    sub_col(&mut a, &mut v, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
    }
    SmithForm { divisors, v }
}

/// The group `{α ∈ Q^d / Z^d : n·α ∈ Z for every n in a lattice}`.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodGroup {
    pub dim: usize,
    /// Generators as reduced fractions in `[0, 1)`, rendered `p/q`.
    #[serde(serialize_with = "ser_vectors")]
    pub generators: Vec<Vec<BigRational>>,
    /// Group order, `None` when the group is positive-dimensional.
    pub order: Option<u64>,
    /// Dimension of the continuous part (`d − rank` of the lattice).
    pub continuum_rank: usize,
    #[serde(skip)]
    lattice: Vec<Vec<i64>>,
    #[serde(skip)]
    cyclic: Vec<(u64, Vec<BigRational>)>,
}

fn ser_vectors<S: serde::Serializer>(v: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let strs: Vec<String> = x.iter().map(super::cyclotomic::fmt_rational).collect();
        seq.serialize_element(&strs)?;
    }
    seq.end()
}

fn frac_mod1(q: BigRational) -> BigRational {
    let f = q.floor();
    q - f
}

impl PeriodGroup {
    /// Dual group of the lattice spanned by `rows` (vectors of length `dim`).
    pub fn from_lattice(dim: usize, rows: Vec<Vec<i64>>) -> Self {
        let snf = smith_normal_form(&rows, dim);
        let rank = snf.divisors.len();
        let mut cyclic = Vec::new();
        for (t, &d) in snf.divisors.iter().enumerate() {
            if d > 1 {
                let g: Vec<BigRational> = (0..dim)
                    .map(|i| frac_mod1(BigRational::new(BigInt::from(snf.v[i][t]), BigInt::from(d))))
                    .collect();
                cyclic.push((d as u64, g));
            }
        }
        let order = (rank == dim).then(|| snf.divisors.iter().map(|&d| d as u64).product());
        PeriodGroup {
            dim,
            generators: cyclic.iter().map(|(_, g)| g.clone()).collect(),
            order,
            continuum_rank: dim - rank,
            lattice: rows,
            cyclic,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == Some(1)
    }

    pub fn is_continuum(&self) -> bool {
        self.order.is_none()
    }

    /// Whether `n·α ∈ Z` for every lattice vector `n`.
    pub fn contains(&self, alpha: &[BigRational]) -> bool {
        assert_eq!(alpha.len(), self.dim);
        self.lattice.iter().all(|n| {
            let s: BigRational = n
                .iter()
                .zip(alpha)
                .map(|(&x, a)| a * BigRational::from_integer(BigInt::from(x)))
                .fold(BigRational::zero(), |acc, x| acc + x);
            s.is_integer()
        })
    }

    /// All elements of the finite part, generated by the SNF cyclic factors.
    /// For a continuum group this lists only the torsion part spanned by the generators.
    pub fn elements(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.dim]];
        for (d, g) in &self.cyclic {
            let mut next = Vec::with_capacity(out.len() * *d as usize);
            for base in &out {
                for c in 0..*d {
                    let c = BigRational::from_integer(BigInt::from(c));
                    next.push(
                        base.iter()
                            .zip(g)
                            .map(|(b, x)| frac_mod1(b + x * &c))
                            .collect(),
                    );
                }
            }
            out = next;
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Group of shifts `α` (mod `Z^d`) with `P(ζ ⊙ z, λ) ≡ P(z, λ)`, `ζ_j = e^{2πiα_j}`.
///
/// The identity holds iff `ζ^n = 1` for every `z`-exponent `n` in the support,
/// so the answer is the dual of the lattice spanned by the support.
pub fn support_period_group(p: &LaurentPoly) -> Result<PeriodGroup> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("period group argument"));
    }
    let rows: Vec<Vec<i64>> = p
        .z_support()
        .into_iter()
        .filter(|n| n.iter().any(|&x| x != 0))
        .map(|n| n.into_iter().map(i64::from).collect())
        .collect();
    Ok(PeriodGroup::from_lattice(p.dim(), rows))
}

/// `α = m / N` as reduced fractions in `[0, 1)`.
pub fn shift_as_fraction(m: &[i64], n: u64) -> Vec<BigRational> {
    m.iter()
        .map(|&x| frac_mod1(BigRational::new(BigInt::from(x), BigInt::from(n))))
        .collect()
}

/// Whether every component of `α` is an integer.
pub fn is_zero_mod_one(alpha: &[BigRational]) -> bool {
    alpha.iter().all(|a| a.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::Cyclotomic;
    use crate::algebra::laurent::ExponentVector;

    fn poly_with_support(dim: usize, support: &[&[i32]]) -> LaurentPoly {
        LaurentPoly::from_terms(
            dim,
            support
                .iter()
                .map(|n| (ExponentVector::new(n.to_vec(), 0), Cyclotomic::from_integer(1))),
        )
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn unit_exponents_give_trivial_group() {
        let g = support_period_group(&poly_with_support(1, &[&[1], &[-1], &[0]])).unwrap();
        assert!(g.is_trivial());
        assert_eq!(g.elements(), vec![vec![r(0, 1)]]);
    }

    #[test]
    fn even_exponents_give_half_period() {
        let g = support_period_group(&poly_with_support(1, &[&[2], &[-2], &[0]])).unwrap();
        assert_eq!(g.order, Some(2));
        assert_eq!(g.elements(), vec![vec![r(0, 1)], vec![r(1, 2)]]);
    }

    #[test]
    fn mixed_axes_give_order_six() {
        let g = support_period_group(&poly_with_support(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(g.order, Some(6));
        let els = g.elements();
        assert_eq!(els.len(), 6);
        for i in 0..2 {
            for j in 0..3 {
                assert!(els.contains(&vec![r(i, 2), r(j, 3)]));
            }
        }
    }

    #[test]
    fn deficient_rank_is_continuum() {
        let g = support_period_group(&poly_with_support(2, &[&[1, -1], &[-1, 1], &[0, 0]])).unwrap();
        assert!(g.is_continuum());
        assert_eq!(g.continuum_rank, 1);
        assert!(g.contains(&[r(1, 3), r(1, 3)]));
        assert!(!g.contains(&[r(1, 3), r(0, 1)]));
    }

    #[test]
    fn snf_of_non_diagonal_lattice() {
        // Lattice spanned by (2,1) and (0,2): index 4, group Z/4.
        let snf = smith_normal_form(&[vec![2, 1], vec![0, 2]], 2);
        assert_eq!(snf.divisors, vec![1, 4]);
        let g = PeriodGroup::from_lattice(2, vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(g.order, Some(4));
        for a in g.elements() {
            assert!(g.contains(&a));
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(support_period_group(&LaurentPoly::zero(1)).is_err());
    }
}
