//! Dense column-major matrices and vector helpers.

use std::ops::{Index, IndexMut};

use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix stored column-major: entry `(i, j)` lives at `data[i + j * rows]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for j in 0..cols {
            for i in 0..rows {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * columns.len());
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            data.extend_from_slice(c);
        }
        Ok(Self {
            rows,
            cols: columns.len(),
            data,
        })
    }

    /// Row-major literal constructor, convenient in tests.
    pub fn from_rows(rows: usize, cols: usize, entries: &[S]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self::from_fn(rows, cols, |i, j| entries[i * cols + j])
    }

    pub fn diag(entries: &[S]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn col(&self, j: usize) -> &[S] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, j: usize) -> &mut [S] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[S]> + '_ {
        (0..self.cols).map(move |j| self.col(j))
    }

    pub fn to_columns(&self) -> Vec<Vec<S>> {
        self.columns().map(|c| c.to_vec()).collect()
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i + a * self.rows, i + b * self.rows);
        }
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            for k in 0..self.cols {
                let b = rhs[(k, j)];
                if b == S::zero() {
                    continue;
                }
                let a = self.col(k);
                let o = out.col_mut(j);
                for i in 0..a.len() {
                    o[i] = o[i] + a[i] * b;
                }
            }
        }
        out
    }

    /// `self* · rhs` without forming the adjoint.
    pub fn adjoint_mul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.rows, rhs.rows, "row dimensions");
        Mat::from_fn(self.cols, rhs.cols, |i, j| dot(self.col(i), rhs.col(j)))
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length");
        let mut out = vec![S::zero(); self.rows];
        for (k, &b) in v.iter().enumerate() {
            axpy(b, self.col(k), &mut out);
        }
        out
    }

    /// `self* · v`.
    pub fn adjoint_mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.rows, v.len(), "vector length");
        self.columns().map(|c| dot(c, v)).collect()
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shapes");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> S::Real {
        norm(&self.data)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat<S> {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for &j in idx {
            data.extend_from_slice(self.col(j));
        }
        Mat {
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn first_columns(&self, k: usize) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: k,
            data: self.data[..k * self.rows].to_vec(),
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.rows, rhs.rows, "row dimensions");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            data,
        }
    }

    pub fn push_column(&mut self, c: &[S]) {
        assert_eq!(c.len(), self.rows, "column length");
        self.data.extend_from_slice(c);
        self.cols += 1;
    }

    /// Largest entrywise deviation of `self* self` from the identity.
    pub fn orthonormality_defect(&self) -> S::Real {
        let g = self.adjoint_mul(self);
        let mut worst = S::Real::zero();
        for j in 0..g.cols {
            for i in 0..g.rows {
                let target = if i == j { S::one() } else { S::zero() };
                worst = worst.max((g[(i, j)] - target).modulus());
            }
        }
        worst
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i + j * self.rows]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i + j * self.rows]
    }
}

/// `⟨a, b⟩ = Σ conj(a_k) b_k`, conjugate-linear in `a`.
#[inline]
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (&x, &y) in a.iter().zip(b) {
        acc = acc + x.conj() * y;
    }
    acc
}

/// Euclidean norm, scaled to avoid overflow and underflow.
pub fn norm<S: Scalar>(v: &[S]) -> S::Real {
    let mut scale = S::Real::zero();
    for &x in v {
        scale = scale.max(x.re().abs()).max(x.im().abs());
    }
    if scale == S::Real::zero() || !scale.is_finite() {
        return scale;
    }
    let inv = scale.recip();
    let mut s = S::Real::zero();
    for &x in v {
        s = s + (x.scale(inv)).modulus_sqr();
    }
    scale * s.sqrt()
}

pub fn norm_sqr<S: Scalar>(v: &[S]) -> S::Real {
    v.iter().fold(S::Real::zero(), |acc, &x| acc + x.modulus_sqr())
}

/// `y ← y + a·x`.
#[inline]
pub fn axpy<S: Scalar>(a: S, x: &[S], y: &mut [S]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = *yi + a * xi;
    }
}

pub fn scale_vec<S: Scalar>(a: S, x: &[S]) -> Vec<S> {
    x.iter().map(|&v| a * v).collect()
}

pub fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn add_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

/// Returns `v / ‖v‖`, or `None` for a zero vector.
pub fn normalized<S: Scalar>(v: &[S]) -> Option<Vec<S>> {
    let n = norm(v);
    if n == S::Real::zero() || !n.is_finite() {
        None
    } else {
        Some(v.iter().map(|&x| x.scale(n.recip())).collect())
    }
}

pub fn unit_vector<S: Scalar>(n: usize, k: usize) -> Vec<S> {
    let mut e = vec![S::zero(); n];
    e[k] = S::one();
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn column_major_layout() {
        let m = Mat::from_rows(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(m.col(0), &[1.0, 4.0]);
        assert_eq!(m.col(2), &[3.0, 6.0]);
        assert_eq!(m[(1, 1)], 5.0);
    }

    #[test]
    fn product_and_adjoint_product_agree() {
        let a = Mat::from_rows(
            2,
            2,
            &[
                Complex64::new(1.0, 1.0),
                Complex64::new(0.0, 2.0),
                Complex64::new(-1.0, 0.5),
                Complex64::new(3.0, 0.0),
            ],
        );
        let b = Mat::from_rows(2, 1, &[Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.0)]);
        let direct = a.adjoint().mul(&b);
        let fused = a.adjoint_mul(&b);
        assert!(direct.sub(&fused).frobenius_norm() < 1e-15);
    }

    #[test]
    fn dot_is_conjugate_linear_on_the_left() {
        let i = Complex64::new(0.0, 1.0);
        let a = [i];
        let b = [Complex64::new(1.0, 0.0)];
        assert_eq!(dot(&a, &b), -i);
        assert_eq!(dot(&b, &a), i);
    }

    #[test]
    fn norm_survives_extreme_scales() {
        let big = [1e200f64, 1e200];
        assert!((norm(&big) / 1e200 - 2f64.sqrt()).abs() < 1e-15);
        let tiny = [1e-200f64, 1e-200];
        assert!((norm(&tiny) / 1e-200 - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(norm::<f64>(&[]), 0.0);
    }
}
