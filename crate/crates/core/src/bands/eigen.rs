//! Dense complex matrices and a self-contained Hermitian eigenvalue solver.
//!
//! The matrix is reduced to real symmetric tridiagonal form by complex
//! Householder reflections (the complex off-diagonal is made real by a
//! diagonal phase change, which does not alter the spectrum), then the
//! tridiagonal eigenvalues are found with implicit-shift QL iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Row-major dense complex square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ComplexMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum()
    }

    /// Largest `|M_ij − conj(M_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Replaces the matrix by `(M + M^*) / 2`.
    pub fn symmetrize(&mut self) {
        for i in 0..self.n {
            let d = self.get(i, i);
            self.set(i, i, Complex64::new(d.re, 0.0));
            for j in i + 1..self.n {
                let avg = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                self.set(i, j, avg);
                self.set(j, i, avg.conj());
            }
        }
    }
}

const HERMITIAN_TOL: f64 = 1e-10;

/// All eigenvalues of a Hermitian matrix in non-decreasing order.
///
/// The input is symmetrized first; a deviation from Hermitian larger than
/// `1e-10 · (1 + max|M_ij|)` is rejected.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let scale = 1.0 + m.data.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let dev = m.hermitian_deviation();
    if dev > HERMITIAN_TOL * scale {
        return Err(Error::NonHermitianMatrix(dev));
    }
    let mut a = m.clone();
    a.symmetrize();
    let (mut d, mut e) = tridiagonalize(&mut a);
    tql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Householder reduction; returns the real diagonal and the moduli of the
/// sub-diagonal (`e[i]` couples `i` and `i + 1`, `e[n-1] = 0`).
fn tridiagonalize(a: &mut ComplexMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.n;
    let zero = Complex64::new(0.0, 0.0);
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];
    for k in 0..n.saturating_sub(2) {
        let norm_x: f64 = (k + 1..n).map(|i| a.get(i, k).norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = a.get(k + 1, k);
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm_x;
        for vi in v.iter_mut() {
            *vi = zero;
        }
        for i in k + 1..n {
            v[i] = a.get(i, k);
        }
        v[k + 1] -= alpha;
        let vnorm_sq: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm_sq;
        // p = τ A v
        for i in 0..n {
            let mut s = zero;
            for j in k + 1..n {
                s += a.get(i, j) * v[j];
            }
            p[i] = s * tau;
        }
        // K = τ (v^* p) / 2, w = p − K v
        let vp: Complex64 = (k + 1..n).map(|i| v[i].conj() * p[i]).sum();
        let kk = vp.re * tau * 0.5;
        let w: Vec<Complex64> = (0..n).map(|i| p[i] - v[i] * kk).collect();
        // A ← A − v w^* − w v^*
        for i in 0..n {
            for j in 0..n {
                let upd = v[i] * w[j].conj() + w[i] * v[j].conj();
                if upd != zero {
                    let x = a.get(i, j) - upd;
                    a.set(i, j, x);
                }
            }
        }
    }
    let d: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let mut e = vec![0.0; n];
    for i in 0..n.saturating_sub(1) {
        e[i] = a.get(i + 1, i).norm();
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix (EISPACK `tql1`).
fn tql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 60 {
                    return Err(Error::NoConvergence);
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    let r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
