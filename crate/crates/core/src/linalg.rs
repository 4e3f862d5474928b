//! Decompositions: one-sided Jacobi SVD, pivoted LU, Cholesky, and
//! rank-revealing orthonormalization.

use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::mat::{axpy, dot, norm, unit_vector, Mat};
use crate::scalar::{RealScalar, Scalar};
use crate::tolerance::ToleranceConfig;

/// Thin singular value decomposition `M = U · diag(sigma) · V*`.
///
/// For an `m × n` input, `U` is `m × k`, `V` is `n × k` with `k = min(m, n)`,
/// and `sigma` is sorted in descending order.
#[derive(Debug, Clone)]
pub struct Svd<S: Scalar> {
    pub u: Mat<S>,
    pub sigma: Vec<S::Real>,
    pub v: Mat<S>,
}

impl<S: Scalar> Svd<S> {
    pub fn reconstruct(&self) -> Mat<S> {
        let mut us = self.u.clone();
        for (j, &s) in self.sigma.iter().enumerate() {
            for x in us.col_mut(j) {
                *x = x.scale(s);
            }
        }
        us.mul(&self.v.adjoint())
    }

    /// Number of singular values above `rank_rel_tol · σ_max · max(m, n)`.
    pub fn rank(&self, cfg: &ToleranceConfig) -> usize {
        let Some(&smax) = self.sigma.first() else {
            return 0;
        };
        if smax == S::Real::zero() {
            return 0;
        }
        let dim = self.u.nrows().max(self.v.nrows());
        let thresh = cfg.rank_tol::<S::Real>() * smax * S::Real::lit(dim as f64);
        self.sigma.iter().take_while(|&&s| s > thresh).count()
    }
}

const MAX_SWEEPS: usize = 80;

pub fn svd<S: Scalar>(m: &Mat<S>) -> Svd<S> {
    if m.nrows() < m.ncols() {
        let t = jacobi_tall(&m.adjoint());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    jacobi_tall(m)
}

fn jacobi_tall<S: Scalar>(m: &Mat<S>) -> Svd<S> {
    let rows = m.nrows();
    let n = m.ncols();
    let mut a = m.clone();
    let mut v = Mat::<S>::identity(n);
    let eps = S::Real::epsilon();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = norm_sqr_col(&a, p);
                let beta = norm_sqr_col(&a, q);
                let gamma = dot(a.col(p), a.col(q));
                let g = gamma.modulus();
                if g == S::Real::zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma.scale(g.recip()).conj();
                let zeta = (beta - alpha) / (g + g);
                let t = zeta.signum() / (zeta.abs() + zeta.hypot(S::Real::one()));
                let c = (S::Real::one() + t * t).sqrt().recip();
                let s = c * t;
                rotate(&mut a, p, q, phase, c, s);
                rotate(&mut v, p, q, phase, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sigma: Vec<S::Real> = (0..n).map(|j| norm(a.col(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].partial_cmp(&sigma[i]).unwrap_or(std::cmp::Ordering::Equal));
    sigma = order.iter().map(|&j| sigma[j]).collect();
    let a = a.select_columns(&order);
    let v = v.select_columns(&order);

    let mut u = Mat::zeros(rows, n);
    let tiny = S::Real::min_positive_value().sqrt();
    let mut pending = Vec::new();
    for (j, &sj) in sigma.iter().enumerate() {
        if sj > tiny {
            let inv = sj.recip();
            for (dst, &src) in u.col_mut(j).iter_mut().zip(a.col(j)) {
                *dst = src.scale(inv);
            }
        } else {
            pending.push(j);
        }
    }
    for j in pending {
        let col = completion_vector(&u, j);
        u.col_mut(j).copy_from_slice(&col);
    }
    Svd { u, sigma, v }
}

#[inline]
fn norm_sqr_col<S: Scalar>(a: &Mat<S>, j: usize) -> S::Real {
    a.col(j)
        .iter()
        .fold(S::Real::zero(), |acc, &x| acc + x.modulus_sqr())
}

/// Applies `a_q ← a_q·phase`, then the real rotation
/// `a_p ← c·a_p − s·a_q`, `a_q ← s·a_p + c·a_q`.
fn rotate<S: Scalar>(a: &mut Mat<S>, p: usize, q: usize, phase: S, c: S::Real, s: S::Real) {
    let rows = a.nrows();
    for i in 0..rows {
        let x = a[(i, p)];
        let y = a[(i, q)] * phase;
        a[(i, p)] = x.scale(c) - y.scale(s);
        a[(i, q)] = x.scale(s) + y.scale(c);
    }
}

/// A unit vector orthogonal to columns `0..` of `u` other than `skip` that
/// are already filled in (nonzero).
fn completion_vector<S: Scalar>(u: &Mat<S>, skip: usize) -> Vec<S> {
    let rows = u.nrows();
    let filled: Vec<usize> = (0..u.ncols())
        .filter(|&j| j != skip && norm(u.col(j)) > S::Real::zero())
        .collect();
    let mut best: Option<(S::Real, Vec<S>)> = None;
    for k in 0..rows {
        let mut e = unit_vector::<S>(rows, k);
        for _ in 0..2 {
            for &j in &filled {
                let c = dot(u.col(j), &e);
                axpy(-c, u.col(j), &mut e);
            }
        }
        let r = norm(&e);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, e));
        }
    }
    let (r, e) = best.expect("rows > 0 whenever a column exists");
    e.into_iter().map(|x| x.scale(r.recip())).collect()
}

/// LU factorization with partial pivoting, `P·M = L·U`.
#[derive(Debug, Clone)]
pub struct Lu<S: Scalar> {
    lu: Mat<S>,
    perm: Vec<usize>,
    odd: bool,
    singular: bool,
}

impl<S: Scalar> Lu<S> {
    pub fn new(m: &Mat<S>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let n = m.nrows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut odd = false;
        let mut singular = false;
        for k in 0..n {
            let mut piv = k;
            let mut best = lu[(k, k)].modulus();
            for i in (k + 1)..n {
                let v = lu[(i, k)].modulus();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == S::Real::zero() {
                singular = true;
                continue;
            }
            if piv != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(piv, j)];
                    lu[(piv, j)] = t;
                }
                perm.swap(k, piv);
                odd = !odd;
            }
            let d = lu[(k, k)];
            for i in (k + 1)..n {
                let f = lu[(i, k)] / d;
                lu[(i, k)] = f;
                for j in (k + 1)..n {
                    let t = lu[(k, j)];
                    lu[(i, j)] = lu[(i, j)] - f * t;
                }
            }
        }
        Ok(Self {
            lu,
            perm,
            odd,
            singular,
        })
    }

    pub fn det(&self) -> S {
        if self.singular {
            return S::zero();
        }
        let n = self.lu.nrows();
        let mut d = S::one();
        for i in 0..n {
            d = d * self.lu[(i, i)];
        }
        if self.odd {
            -d
        } else {
            d
        }
    }

    pub fn solve_vec(&self, b: &[S]) -> Result<Vec<S>> {
        if self.singular {
            return Err(Error::Singular);
        }
        let n = self.lu.nrows();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut x: Vec<S> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut s = x[i];
            for (j, &xj) in x.iter().enumerate().take(i) {
                s = s - self.lu[(i, j)] * xj;
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for (j, &xj) in x.iter().enumerate().skip(i + 1) {
                s = s - self.lu[(i, j)] * xj;
            }
            x[i] = s / self.lu[(i, i)];
        }
        Ok(x)
    }

    pub fn solve(&self, b: &Mat<S>) -> Result<Mat<S>> {
        let cols: Result<Vec<Vec<S>>> = b.columns().map(|c| self.solve_vec(c)).collect();
        Mat::from_columns(b.nrows(), &cols?)
    }
}

/// Determinant via pivoted LU; the empty matrix has determinant 1.
pub fn det<S: Scalar>(m: &Mat<S>) -> Result<S> {
    match (m.nrows(), m.ncols()) {
        (0, 0) => Ok(S::one()),
        (1, 1) => Ok(m[(0, 0)]),
        _ => Ok(Lu::new(m)?.det()),
    }
}

pub fn solve<S: Scalar>(m: &Mat<S>, b: &Mat<S>) -> Result<Mat<S>> {
    Lu::new(m)?.solve(b)
}

/// Lower-triangular Cholesky factor `L` with `M = L·L*` for Hermitian
/// positive definite `M`.
pub fn cholesky<S: Scalar>(m: &Mat<S>) -> Result<Mat<S>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    let mut l = Mat::<S>::zeros(n, n);
    for j in 0..n {
        let mut d = m[(j, j)].re();
        for k in 0..j {
            d = d - l[(j, k)].modulus_sqr();
        }
        if d <= S::Real::zero() || !d.is_finite() {
            return Err(Error::NotPositiveDefinite);
        }
        let d = d.sqrt();
        l[(j, j)] = S::from_real(d);
        for i in (j + 1)..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s = s - l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s.scale(d.recip());
        }
    }
    Ok(l)
}

/// Solves `L·X = B` for lower-triangular `L`.
pub fn solve_lower<S: Scalar>(l: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let n = l.nrows();
    let mut x = b.clone();
    for c in 0..b.ncols() {
        let col = x.col_mut(c);
        for i in 0..n {
            let mut s = col[i];
            for j in 0..i {
                s = s - l[(i, j)] * col[j];
            }
            col[i] = s / l[(i, i)];
        }
    }
    x
}

/// Orthonormal basis of the span of `m`'s columns, with its numerical rank.
pub fn orthonormalize<S: Scalar>(m: &Mat<S>, cfg: &ToleranceConfig) -> (Mat<S>, usize) {
    if m.ncols() == 0 || m.nrows() == 0 {
        return (Mat::zeros(m.nrows(), 0), 0);
    }
    let d = svd(m);
    let r = d.rank(cfg);
    let u = if m.nrows() >= m.ncols() {
        d.u.first_columns(r)
    } else {
        d.u.first_columns(r.min(d.u.ncols()))
    };
    (u, r)
}

/// Orthonormal basis of the orthogonal complement of the span of `q`'s
/// (orthonormal) columns, built by pivoted Gram–Schmidt on coordinate vectors.
pub fn orthonormal_complement<S: Scalar>(q: &Mat<S>) -> Mat<S> {
    let n = q.nrows();
    let p = q.ncols();
    let mut basis = q.clone();
    let mut out = Mat::zeros(n, 0);
    for _ in p..n {
        let mut best: Option<(S::Real, Vec<S>)> = None;
        for k in 0..n {
            let mut e = unit_vector::<S>(n, k);
            for _ in 0..2 {
                for j in 0..basis.ncols() {
                    let c = dot(basis.col(j), &e);
                    axpy(-c, basis.col(j), &mut e);
                }
            }
            let r = norm(&e);
            if best.as_ref().is_none_or(|(b, _)| r > *b) {
                best = Some((r, e));
            }
        }
        let (r, e) = best.expect("n > 0");
        let e: Vec<S> = e.into_iter().map(|x| x.scale(r.recip())).collect();
        basis.push_column(&e);
        out.push_column(&e);
    }
    out
}

/// 2-norm condition number of a Hermitian positive semidefinite matrix.
pub fn condition_number<S: Scalar>(m: &Mat<S>) -> S::Real {
    let d = svd(m);
    match (d.sigma.first(), d.sigma.last()) {
        (Some(&hi), Some(&lo)) if lo > S::Real::zero() => hi / lo,
        (Some(_), Some(_)) => S::Real::infinity(),
        _ => S::Real::one(),
    }
}
