//! Dense row-major matrices, LU factorization with partial pivoting, and a
//! 1-norm reciprocal condition number estimate.
//!
//! Collocation matrices at desk scale (N up to ~1500) are dense and are
//! factored once per assembly, then reused for many right-hand sides, so a
//! straightforward in-crate implementation is sufficient and keeps the crate
//! `no_std`-compatible.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense row-major matrix of `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    nrows: usize,
    ncols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![0.0; nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Mat { nrows, ncols, data }
    }

    pub fn from_rows(nrows: usize, ncols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), nrows * ncols);
        Mat { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// `out = self * x`.
    pub fn matvec_into(&self, x: &[f64], out: &mut [f64]) {
        assert_eq!(x.len(), self.ncols);
        assert_eq!(out.len(), self.nrows);
        for (i, o) in out.iter_mut().enumerate() {
            let row = self.row(i);
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(x.iter()) {
                acc += a * b;
            }
            *o = acc;
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.nrows];
        self.matvec_into(x, &mut out);
        out
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = Mat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = out.row_mut(i);
                for (o, r) in orow.iter_mut().zip(rrow.iter()) {
                    *o += a * r;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)])
    }

    /// New matrix from a contiguous column range.
    pub fn columns(&self, start: usize, len: usize) -> Mat {
        assert!(start + len <= self.ncols);
        Mat::from_fn(self.nrows, len, |i, j| self[(i, start + j)])
    }

    /// `self - rhs`.
    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let data = self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a - b).collect();
        Mat { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn add_assign(&mut self, rhs: &Mat) {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
    }

    /// Scale row `i` by `s`, for all rows (diagonal left-multiplication).
    pub fn scale_rows(&mut self, scales: &[f64]) {
        assert_eq!(scales.len(), self.nrows);
        for (i, s) in scales.iter().enumerate() {
            for v in self.row_mut(i) {
                *v *= s;
            }
        }
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.nrows {
            let s: f64 = self.row(i).iter().map(|v| libm::fabs(*v)).sum();
            best = best.max(s);
        }
        best
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        let mut sums = vec![0.0f64; self.ncols];
        for i in 0..self.nrows {
            for (s, v) in sums.iter_mut().zip(self.row(i)) {
                *s += libm::fabs(*v);
            }
        }
        sums.into_iter().fold(0.0f64, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)))
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.ncols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.ncols + j]
    }
}

/// LU factorization with partial pivoting, `P A = L U`.
///
/// Solves with `A` and `A^T` share the factorization; no inverse is formed.
#[derive(Clone, Debug)]
pub struct LuFactor {
    n: usize,
    lu: Mat,
    piv: Vec<usize>,
}

impl LuFactor {
    /// Factor a square matrix. Fails only on an exact zero pivot; near
    /// singularity is reported through [`LuFactor::rcond_one`].
    pub fn factor(a: &Mat) -> Result<Self> {
        assert!(a.is_square(), "LU factorization needs a square matrix");
        let n = a.nrows;
        let mut lu = a.clone();
        let mut piv = vec![0usize; n];
        for k in 0..n {
            let mut p = k;
            let mut best = libm::fabs(lu[(k, k)]);
            for i in k + 1..n {
                let v = libm::fabs(lu[(i, k)]);
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best == 0.0 {
                return Err(Error::SingularMatrix);
            }
            piv[k] = p;
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let m = lu[(i, k)] / pivot;
                lu[(i, k)] = m;
                if m != 0.0 {
                    for j in k + 1..n {
                        lu[(i, j)] -= m * lu[(k, j)];
                    }
                }
            }
        }
        Ok(LuFactor { n, lu, piv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Solve `A x = b` in place.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        assert_eq!(b.len(), self.n);
        for k in 0..self.n {
            b.swap(k, self.piv[k]);
        }
        // Ly = Pb, unit lower triangular.
        for i in 1..self.n {
            let row = self.lu.row(i);
            let mut acc = b[i];
            for j in 0..i {
                acc -= row[j] * b[j];
            }
            b[i] = acc;
        }
        // Ux = y.
        for i in (0..self.n).rev() {
            let row = self.lu.row(i);
            let mut acc = b[i];
            for j in i + 1..self.n {
                acc -= row[j] * b[j];
            }
            b[i] = acc / row[i];
        }
    }

    /// Solve `A^T x = b` in place.
    pub fn solve_transpose_in_place(&self, b: &mut [f64]) {
        assert_eq!(b.len(), self.n);
        // U^T z = b, lower triangular with diagonal from U.
        for i in 0..self.n {
            let mut acc = b[i];
            for j in 0..i {
                acc -= self.lu[(j, i)] * b[j];
            }
            b[i] = acc / self.lu[(i, i)];
        }
        // L^T w = z, unit upper triangular.
        for i in (0..self.n).rev() {
            let mut acc = b[i];
            for j in i + 1..self.n {
                acc -= self.lu[(j, i)] * b[j];
            }
            b[i] = acc;
        }
        // x = P^T w: undo the swaps in reverse order.
        for k in (0..self.n).rev() {
            b.swap(k, self.piv[k]);
        }
    }

    /// Solve `A X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Mat {
        assert_eq!(b.nrows, self.n);
        let mut out = Mat::zeros(b.nrows, b.ncols);
        let mut col = vec![0.0; self.n];
        for j in 0..b.ncols {
            for i in 0..self.n {
                col[i] = b[(i, j)];
            }
            self.solve_in_place(&mut col);
            for i in 0..self.n {
                out[(i, j)] = col[i];
            }
        }
        out
    }

    /// Solve `X A = B`, i.e. `X = B A^{-1}`, row by row via transposed solves.
    pub fn solve_right(&self, b: &Mat) -> Mat {
        assert_eq!(b.ncols, self.n);
        let mut out = b.clone();
        for i in 0..out.nrows {
            self.solve_transpose_in_place(out.row_mut(i));
        }
        out
    }

    /// Hager-style estimate of `||A^{-1}||_1`.
    fn inverse_norm_one_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let mut x = vec![1.0 / n as f64; n];
        self.solve_in_place(&mut x);
        let mut est: f64 = x.iter().map(|v| libm::fabs(*v)).sum();
        if n > 1 {
            let mut probe = vec![0.0; n];
            for _ in 0..5 {
                let mut s: Vec<f64> = x.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }).collect();
                self.solve_transpose_in_place(&mut s);
                let mut j = 0;
                let mut zmax = 0.0;
                for (idx, v) in s.iter().enumerate() {
                    let a = libm::fabs(*v);
                    if a > zmax {
                        zmax = a;
                        j = idx;
                    }
                }
                let zdotx: f64 = s.iter().zip(probe.iter()).map(|(a, b)| a * b).sum();
                if zmax <= libm::fabs(zdotx) {
                    break;
                }
                probe.iter_mut().for_each(|v| *v = 0.0);
                probe[j] = 1.0;
                x.copy_from_slice(&probe);
                self.solve_in_place(&mut x);
                let new_est: f64 = x.iter().map(|v| libm::fabs(*v)).sum();
                if new_est <= est {
                    break;
                }
                est = new_est;
            }
            // Alternating probe vector guards against adversarial cancellation.
            let mut alt: Vec<f64> = (0..n)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    sign * (1.0 + i as f64 / (n - 1) as f64)
                })
                .collect();
            self.solve_in_place(&mut alt);
            let alt_est: f64 = alt.iter().map(|v| libm::fabs(*v)).sum::<f64>() * 2.0 / (3.0 * n as f64);
            est = est.max(alt_est);
        }
        est
    }

    /// Reciprocal condition number estimate in the 1-norm, given `||A||_1`.
    pub fn rcond_one(&self, a_norm_one: f64) -> f64 {
        if a_norm_one == 0.0 {
            return 0.0;
        }
        let inv = self.inverse_norm_one_estimate();
        if inv == 0.0 {
            return 0.0;
        }
        1.0 / (a_norm_one * inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn splitmix(state: &mut u64) -> f64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }

    #[test]
    fn solve_roundtrip() {
        let mut s = 42u64;
        let n = 12;
        let a = Mat::from_fn(n, n, |i, j| splitmix(&mut s) + if i == j { 4.0 } else { 0.0 });
        let x_true: Vec<f64> = (0..n).map(|i| i as f64 - 3.5).collect();
        let b = a.matvec(&x_true);
        let lu = LuFactor::factor(&a).unwrap();
        let mut x = b.clone();
        lu.solve_in_place(&mut x);
        for (xi, ti) in x.iter().zip(x_true.iter()) {
            assert!((xi - ti).abs() < 1e-11, "{xi} vs {ti}");
        }
    }

    #[test]
    fn transpose_solve_matches_transposed_matrix() {
        let mut s = 7u64;
        let n = 9;
        let a = Mat::from_fn(n, n, |i, j| splitmix(&mut s) + if i == j { 3.0 } else { 0.0 });
        let at = a.transpose();
        let b: Vec<f64> = (0..n).map(|i| 0.3 * i as f64 - 1.0).collect();

        let lu = LuFactor::factor(&a).unwrap();
        let mut x1 = b.clone();
        lu.solve_transpose_in_place(&mut x1);

        let lut = LuFactor::factor(&at).unwrap();
        let mut x2 = b.clone();
        lut.solve_in_place(&mut x2);

        for (u, v) in x1.iter().zip(x2.iter()) {
            assert!((u - v).abs() < 1e-11);
        }
    }

    #[test]
    fn solve_right_produces_b_a_inverse() {
        let mut s = 11u64;
        let n = 8;
        let a = Mat::from_fn(n, n, |i, j| splitmix(&mut s) + if i == j { 3.0 } else { 0.0 });
        let b = Mat::from_fn(3, n, |_, _| splitmix(&mut s));
        let lu = LuFactor::factor(&a).unwrap();
        let x = lu.solve_right(&b);
        // X A should reproduce B.
        let xa = x.matmul(&a);
        assert!(xa.sub(&b).max_abs() < 1e-11);
    }

    #[test]
    fn singular_matrix_is_detected() {
        let a = Mat::from_fn(3, 3, |i, _| i as f64); // rank 1
        assert!(matches!(LuFactor::factor(&a), Err(Error::SingularMatrix)));
    }

    #[test]
    fn rcond_of_identity_is_one() {
        let a = Mat::identity(6);
        let lu = LuFactor::factor(&a).unwrap();
        let r = lu.rcond_one(a.norm_one());
        assert!((r - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rcond_of_scaled_diagonal() {
        let mut a = Mat::identity(2);
        a[(1, 1)] = 1e-12;
        let lu = LuFactor::factor(&a).unwrap();
        let r = lu.rcond_one(a.norm_one());
        assert!(r > 0.5e-12 && r < 2e-12, "rcond = {r}");
    }

    #[test]
    fn norms() {
        let a = Mat::from_rows(2, 2, vec![1.0, -2.0, 3.0, 4.0]);
        assert_eq!(a.norm_inf(), 7.0);
        assert_eq!(a.norm_one(), 6.0);
    }
}
