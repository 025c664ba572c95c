//! Band functions sampled on the grid `{r / N : r ∈ {0..N-1}^d}`.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::operator::FloquetSymbol;

/// Default cap on stored eigenvalues `N^d · Q`.
pub const DEFAULT_MAX_VALUES: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub max_values: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            workers: None,
            max_values: DEFAULT_MAX_VALUES,
        }
    }
}

/// Sorted eigenvalues at every grid point, row-major in `r` (last axis fastest).
#[derive(Clone, Debug, PartialEq)]
pub struct BandGrid {
    dim: usize,
    n: usize,
    bands: usize,
    values: Vec<f64>,
}

impl BandGrid {
    /// Builds a grid from precomputed values, checking shape and ordering.
    pub fn from_values(dim: usize, n: usize, bands: usize, values: Vec<f64>) -> Result<Self> {
        let points = grid_points(dim, n)?;
        if values.len() as u64 != points.saturating_mul(bands as u64) {
            return Err(Error::InvalidArgument(format!(
                "expected {} values, found {}",
                points * bands as u64,
                values.len()
            )));
        }
        if bands > 0 && values.chunks(bands).any(|c| c.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::InvalidArgument("band values must be non-decreasing at each point".into()));
        }
        Ok(BandGrid {
            dim,
            n,
            bands,
            values,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of bands `Q`.
    pub fn bands(&self) -> usize {
        self.bands
    }

    /// `N^d`.
    pub fn points(&self) -> usize {
        self.values.len() / self.bands.max(1)
    }

    /// Sorted eigenvalues at the grid point with flat index `idx`.
    pub fn at(&self, idx: usize) -> &[f64] {
        &self.values[idx * self.bands..(idx + 1) * self.bands]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Multi-index of a flat grid index.
    pub fn unravel(&self, mut idx: usize) -> Vec<usize> {
        let mut r = vec![0; self.dim];
        for j in (0..self.dim).rev() {
            r[j] = idx % self.n;
            idx /= self.n;
        }
        r
    }

    /// Flat index of `(r + m) mod N`.
    pub fn shifted(&self, idx: usize, m: &[usize]) -> usize {
        let r = self.unravel(idx);
        r.iter()
            .zip(m)
            .fold(0, |acc, (&x, &y)| acc * self.n + (x + y) % self.n)
    }

    /// CSV with header `k_1..k_d,lambda_1..lambda_Q`, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (1..=self.dim)
            .map(|j| format!("k_{j}"))
            .chain((1..=self.bands).map(|s| format!("lambda_{s}")))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for idx in 0..self.points() {
            let r = self.unravel(idx);
            let mut fields: Vec<String> = r.iter().map(|&x| fmt_sig(x as f64 / self.n as f64)).collect();
            fields.extend(self.at(idx).iter().map(|&x| fmt_sig(x)));
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }
}

/// Decimal rendering rounded to 12 significant digits; `-0` prints as `0`.
pub fn fmt_sig(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        "0".to_string()
    } else {
        format!("{rounded}")
    }
}

fn grid_points(dim: usize, n: usize) -> Result<u64> {
    (n as u64)
        .checked_pow(dim as u32)
        .ok_or_else(|| Error::ResourceCap(format!("grid {n}^{dim} overflows")))
}

/// Eigenvalues of `A(r / N)` for every `r`; independent of worker count.
pub fn sweep_grid(a: &FloquetSymbol, n: usize, opts: &SweepOptions) -> Result<BandGrid> {
    if n == 0 {
        return Err(Error::InvalidArgument("grid size N must be at least 1".into()));
    }
    let d = a.dim();
    let q = a.size();
    let points = grid_points(d, n)?;
    let total = points.saturating_mul(q as u64);
    if total > opts.max_values {
        return Err(Error::ResourceCap(format!(
            "N^d * Q = {n}^{d} * {q} = {total} values exceeds the cap of {}",
            opts.max_values
        )));
    }
    let mut values = vec![0.0; total as usize];
    let fill = |values: &mut [f64]| -> Result<()> {
        values
            .par_chunks_mut(q.max(1))
            .enumerate()
            .try_for_each(|(idx, slot)| {
                let mut r = vec![0i64; d];
                let mut x = idx;
                for j in (0..d).rev() {
                    r[j] = (x % n) as i64;
                    x /= n;
                }
                let eig = hermitian_eigenvalues(&a.eval_grid(&r, n as u64))?;
                slot.copy_from_slice(&eig);
                Ok(())
            })
    };
    if q > 0 {
        match opts.workers {
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
                pool.install(|| fill(&mut values))?;
            }
            None => fill(&mut values)?,
        }
    }
    Ok(BandGrid {
        dim: d,
        n,
        bands: q,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{build_schrodinger_symbol, SchrodingerSpec};

    fn sch(q: &[usize], v: &[i64]) -> FloquetSymbol {
        build_schrodinger_symbol(&SchrodingerSpec::with_integer_potential(q.to_vec(), v).unwrap())
    }

    #[test]
    fn free_band_cosine_table() {
        let g = sweep_grid(&sch(&[1], &[0]), 4, &SweepOptions::default()).unwrap();
        let expect = [2.0, 0.0, -2.0, 0.0];
        for (x, y) in g.values().iter().zip(expect) {
            assert!((x - y).abs() < 1e-15);
        }
    }

    #[test]
    fn single_point_grid() {
        let g = sweep_grid(&sch(&[2, 1], &[1, 2]), 1, &SweepOptions::default()).unwrap();
        assert_eq!(g.points(), 1);
        assert_eq!(g.to_csv().lines().count(), 2);
    }

    #[test]
    fn period_two_half_grid() {
        let g = sweep_grid(&sch(&[2], &[1, -1]), 2, &SweepOptions::default()).unwrap();
        let s5 = 5f64.sqrt();
        assert!((g.at(0)[0] + s5).abs() < 1e-14 && (g.at(0)[1] - s5).abs() < 1e-14);
        assert!((g.at(1)[0] + 1.0).abs() < 1e-14 && (g.at(1)[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn csv_format() {
        let g = sweep_grid(&sch(&[1], &[0]), 4, &SweepOptions::default()).unwrap();
        let csv = g.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "k_1,lambda_1");
        assert_eq!(lines[1], "0,2");
        assert_eq!(lines[2], "0.25,0");
        assert_eq!(lines[3], "0.5,-2");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig(-0.0), "0");
    }

    #[test]
    fn resource_cap() {
        let opts = SweepOptions {
            workers: Some(1),
            max_values: 10,
        };
        assert!(matches!(sweep_grid(&sch(&[1], &[0]), 11, &opts), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn workers_do_not_change_output() {
        let a = sch(&[2, 2], &[1, 0, -2, 5]);
        let one = sweep_grid(&a, 8, &SweepOptions { workers: Some(1), ..Default::default() }).unwrap();
        let four = sweep_grid(&a, 8, &SweepOptions { workers: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one.to_csv(), four.to_csv());
    }
}
