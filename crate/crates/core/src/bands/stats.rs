//! Coincidence statistics of band functions on a grid.
//!
//! Band labels `s`, `w` are 1-based (`λ^1 ≤ … ≤ λ^Q`); grid shifts `m` are
//! multi-indices in `{0..N-1}^d` and wrap modulo `N`.

use rayon::prelude::*;
use serde::Serialize;

use super::sweep::{sweep_grid, BandGrid, SweepOptions};
use crate::error::{Error, Result};
use crate::operator::FloquetSymbol;

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::BadTolerance(tau))
    }
}

/// `counts[((s·Q + w)·P + m)]` of `|λ^s(r+m) − λ^w(r) − target| ≤ tol` for each tolerance.
fn shifted_counts(grid: &BandGrid, target: f64, tols: &[f64]) -> Vec<Vec<u64>> {
    let q = grid.bands();
    let p = grid.points();
    let per_m: Vec<Vec<u64>> = (0..p)
        .into_par_iter()
        .map(|mi| {
            let m = grid.unravel(mi);
            let mut c = vec![0u64; q * q * tols.len()];
            for r in 0..p {
                let a = grid.at(grid.shifted(r, &m));
                let b = grid.at(r);
                for s in 0..q {
                    for w in 0..q {
                        let diff = (a[s] - b[w] - target).abs();
                        for (t, &tol) in tols.iter().enumerate() {
                            if diff <= tol {
                                c[(s * q + w) * tols.len() + t] += 1;
                            }
                        }
                    }
                }
            }
            c
        })
        .collect();
    (0..tols.len())
        .map(|t| {
            let mut out = vec![0u64; q * q * p];
            for (mi, c) in per_m.iter().enumerate() {
                for sw in 0..q * q {
                    out[sw * p + mi] = c[sw * tols.len() + t];
                }
            }
            out
        })
        .collect()
}

/// Largest count over `m ≠ 0` for one band pair, with the first maximizing shift.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairSup {
    pub s: usize,
    pub w: usize,
    pub sup: f64,
    pub argmax_m: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairCounts {
    pub s: usize,
    pub w: usize,
    /// Indexed by the flat (row-major) shift `m`.
    pub counts: Vec<u64>,
}

/// Overlap counts `#{r : |λ^s((r+m)/N) − λ^w(r/N)| ≤ τ}` and the statistic
/// `ρ(N) = max_{m≠0, s, w} count / N^d`, also at `τ/10` and `10τ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OverlapReport {
    pub n: usize,
    pub dim: usize,
    pub tau: f64,
    pub rho: f64,
    pub rho_tau_div_10: f64,
    pub rho_tau_times_10: f64,
    pub pair_sups: Vec<PairSup>,
    pub degeneracy: f64,
    pub counts: Vec<PairCounts>,
    #[serde(skip)]
    bands: usize,
}

impl OverlapReport {
    /// Count for bands `s`, `w` (1-based) and shift `m`.
    pub fn count(&self, s: usize, w: usize, m: &[usize]) -> u64 {
        assert!((1..=self.bands).contains(&s) && (1..=self.bands).contains(&w));
        let mi = m.iter().fold(0, |acc, &x| acc * self.n + x % self.n);
        self.counts[(s - 1) * self.bands + (w - 1)].counts[mi]
    }
}

fn sup_excluding_zero(counts: &[u64], points: usize) -> (f64, Option<usize>) {
    let mut best = (0u64, None);
    for (mi, &c) in counts.iter().enumerate().skip(1) {
        if best.1.is_none() || c > best.0 {
            best = (c, Some(mi));
        }
    }
    (best.0 as f64 / points as f64, best.1)
}

pub fn overlap_statistic(grid: &BandGrid, tau: f64) -> Result<OverlapReport> {
    check_tau(tau)?;
    let q = grid.bands();
    let p = grid.points();
    let all = shifted_counts(grid, 0.0, &[tau, tau / 10.0, tau * 10.0]);
    let rho_of = |counts: &[u64]| -> f64 {
        (0..q * q)
            .map(|sw| sup_excluding_zero(&counts[sw * p..(sw + 1) * p], p).0)
            .fold(0.0, f64::max)
    };
    let main = &all[0];
    let mut pair_sups = Vec::with_capacity(q * q);
    let mut counts = Vec::with_capacity(q * q);
    for s in 0..q {
        for w in 0..q {
            let slice = &main[(s * q + w) * p..(s * q + w + 1) * p];
            let (sup, arg) = sup_excluding_zero(slice, p);
            pair_sups.push(PairSup {
                s: s + 1,
                w: w + 1,
                sup,
                argmax_m: arg.map(|mi| grid.unravel(mi)),
            });
            counts.push(PairCounts {
                s: s + 1,
                w: w + 1,
                counts: slice.to_vec(),
            });
        }
    }
    Ok(OverlapReport {
        n: grid.n(),
        dim: grid.dim(),
        tau,
        rho: rho_of(main),
        rho_tau_div_10: rho_of(&all[1]),
        rho_tau_times_10: rho_of(&all[2]),
        pair_sups,
        degeneracy: degeneracy_statistic(grid, tau)?,
        counts,
        bands: q,
    })
}

/// Fraction of grid points where two distinct bands are within `τ`.
pub fn degeneracy_statistic(grid: &BandGrid, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let p = grid.points();
    let hits = (0..p)
        .filter(|&r| grid.at(r).windows(2).any(|w| (w[1] - w[0]).abs() <= tau))
        .count();
    Ok(hits as f64 / p as f64)
}

/// Counts of `|λ^s((r+m)/N) − λ^w(r/N) − a| ≤ τ` over all `(s, w, m)`, including `m = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OffsetReport {
    pub a: f64,
    pub tau: f64,
    /// Largest count over all `(s, w, m)` divided by `N^d`.
    pub max_fraction: f64,
    pub counts: Vec<PairCounts>,
    #[serde(skip)]
    n: usize,
    #[serde(skip)]
    bands: usize,
}

impl OffsetReport {
    pub fn count(&self, s: usize, w: usize, m: &[usize]) -> u64 {
        assert!((1..=self.bands).contains(&s) && (1..=self.bands).contains(&w));
        let mi = m.iter().fold(0, |acc, &x| acc * self.n + x % self.n);
        self.counts[(s - 1) * self.bands + (w - 1)].counts[mi]
    }
}

pub fn offset_statistic(grid: &BandGrid, a: f64, tau: f64) -> Result<OffsetReport> {
    check_tau(tau)?;
    if a == 0.0 || !a.is_finite() {
        return Err(Error::ZeroOffset);
    }
    let q = grid.bands();
    let p = grid.points();
    let all = shifted_counts(grid, a, &[tau]);
    let main = &all[0];
    let max = main.iter().copied().max().unwrap_or(0);
    let counts = (0..q * q)
        .map(|sw| PairCounts {
            s: sw / q + 1,
            w: sw % q + 1,
            counts: main[sw * p..(sw + 1) * p].to_vec(),
        })
        .collect();
    Ok(OffsetReport {
        a,
        tau,
        max_fraction: max as f64 / p as f64,
        counts,
        n: grid.n(),
        bands: q,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OffsetSummary {
    pub a: f64,
    pub max_fraction: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayRow {
    pub n: usize,
    pub rho: f64,
    pub rho_tau_div_10: f64,
    pub rho_tau_times_10: f64,
    pub degeneracy: f64,
    pub pair_sups: Vec<PairSup>,
    pub offsets: Vec<OffsetSummary>,
}

/// `ρ(N)` across grid sizes with trend flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayTable {
    pub tau: f64,
    pub rows: Vec<DecayRow>,
    pub strictly_decreasing: bool,
    pub non_increasing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
}

impl DecayTable {
    pub fn rhos(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.rho).collect()
    }

    /// Plot-ready CSV: `N,rho,rho_tau_div_10,rho_tau_times_10,degeneracy`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,rho,rho_tau_div_10,rho_tau_times_10,degeneracy\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n, r.rho, r.rho_tau_div_10, r.rho_tau_times_10, r.degeneracy
            ));
        }
        out
    }
}

pub fn decay_series(a: &FloquetSymbol, ns: &[usize], tau: f64, offsets: &[f64], opts: &SweepOptions) -> Result<DecayTable> {
    check_tau(tau)?;
    if ns.is_empty() {
        return Err(Error::InvalidArgument("at least one grid size is required".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("grid sizes must be increasing".into()));
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let grid = sweep_grid(a, n, opts)?;
        let ov = overlap_statistic(&grid, tau)?;
        let offsets = offsets
            .iter()
            .map(|&x| {
                offset_statistic(&grid, x, tau).map(|o| OffsetSummary {
                    a: x,
                    max_fraction: o.max_fraction,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(DecayRow {
            n,
            rho: ov.rho,
            rho_tau_div_10: ov.rho_tau_div_10,
            rho_tau_times_10: ov.rho_tau_times_10,
            degeneracy: ov.degeneracy,
            pair_sups: ov.pair_sups,
            offsets,
        });
    }
    let rhos: Vec<f64> = rows.iter().map(|r| r.rho).collect();
    let strictly_decreasing = rhos.windows(2).all(|w| w[1] < w[0]);
    let non_increasing = rhos.windows(2).all(|w| w[1] <= w[0]);
    let flag = if rhos.len() >= 2 && rhos[rhos.len() - 1] >= rhos[0] && rhos[0] > 0.0 {
        Some("non-decaying: period suspected".to_string())
    } else if !non_increasing {
        Some("non-monotone".to_string())
    } else {
        None
    };
    Ok(DecayTable {
        tau,
        rows,
        strictly_decreasing,
        non_increasing,
        flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;
    use crate::operator::{build_schrodinger_symbol, SchrodingerSpec};

    fn free() -> FloquetSymbol {
        build_schrodinger_symbol(&SchrodingerSpec::with_integer_potential(vec![1], &[0]).unwrap())
    }

    fn loops() -> FloquetSymbol {
        let c = &LaurentPoly::z_pow(1, 0, 1) + &LaurentPoly::z_pow(1, 0, -1);
        FloquetSymbol::from_entries(1, 2, vec![c.clone(), LaurentPoly::zero(1), LaurentPoly::zero(1), -&c]).unwrap()
    }

    fn grid(a: &FloquetSymbol, n: usize) -> BandGrid {
        sweep_grid(a, n, &SweepOptions::default()).unwrap()
    }

    #[test]
    fn free_band_rho() {
        let r = overlap_statistic(&grid(&free(), 16), 1e-8).unwrap();
        assert_eq!(r.rho, 0.125);
        assert_eq!(r.count(1, 1, &[2]), 2);
        assert_eq!(r.count(1, 1, &[3]), 0);
        assert_eq!(r.count(1, 1, &[0]), 16);
    }

    #[test]
    fn loops_half_shift() {
        let r = overlap_statistic(&grid(&loops(), 8), 1e-8).unwrap();
        assert_eq!(r.count(2, 2, &[4]), 8);
        assert_eq!(r.rho, 1.0);
        assert_eq!(degeneracy_statistic(&grid(&loops(), 8), 1e-8).unwrap(), 0.25);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_statistic(&grid(&free(), 8), 1e-8).unwrap(), 0.0);
        let q2 = build_schrodinger_symbol(&SchrodingerSpec::with_integer_potential(vec![2], &[1, -1]).unwrap());
        assert_eq!(degeneracy_statistic(&grid(&q2, 16), 1e-8).unwrap(), 0.0);
    }

    #[test]
    fn offset_examples() {
        let g = grid(&free(), 8);
        assert_eq!(offset_statistic(&g, 10.0, 1e-8).unwrap().max_fraction, 0.0);
        assert_eq!(offset_statistic(&g, 2.0, 1e-8).unwrap().count(1, 1, &[0]), 0);
        let o = offset_statistic(&grid(&loops(), 8), 4.0, 1e-8).unwrap();
        assert_eq!(o.count(2, 1, &[0]), 2);
        assert!(matches!(offset_statistic(&g, 0.0, 1e-8), Err(Error::ZeroOffset)));
    }

    #[test]
    fn decay_examples() {
        let t = decay_series(&free(), &[8, 16, 32, 64], 1e-8, &[], &SweepOptions::default()).unwrap();
        assert_eq!(t.rhos(), vec![0.25, 0.125, 0.0625, 0.03125]);
        assert!(t.strictly_decreasing && t.flag.is_none());
        let t = decay_series(&loops(), &[8, 16], 1e-8, &[1.0], &SweepOptions::default()).unwrap();
        assert_eq!(t.rhos(), vec![1.0, 1.0]);
        assert_eq!(t.flag.as_deref(), Some("non-decaying: period suspected"));
    }

    #[test]
    fn single_point_rho_is_zero() {
        let r = overlap_statistic(&grid(&loops(), 1), 1e-8).unwrap();
        assert_eq!(r.rho, 0.0);
        assert!(matches!(overlap_statistic(&grid(&loops(), 1), 0.0), Err(Error::BadTolerance(_))));
    }
}
