//! Seeded random subspaces and unitary maps.

use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mat::{axpy, dot, norm, Mat};
use crate::scalar::{RealScalar, Scalar};
use crate::subspace::Subspace;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector<S: Scalar>(rng: &mut Rng, n: usize) -> Vec<S> {
    (0..n).map(|_| S::sample_gaussian(rng)).collect()
}

pub fn gaussian_matrix<S: Scalar>(rng: &mut Rng, rows: usize, cols: usize) -> Mat<S> {
    Mat::from_fn(rows, cols, |_, _| S::sample_gaussian(rng))
}

/// Haar-distributed orthonormal `n × k` frame: Gram–Schmidt (applied twice)
/// on Gaussian columns.
pub fn haar_frame<S: Scalar>(rng: &mut Rng, n: usize, k: usize) -> Mat<S> {
    assert!(k <= n, "frame wider than ambient space");
    let mut q = Mat::zeros(n, 0);
    let floor = S::Real::lit(1e-6);
    while q.ncols() < k {
        let mut x = random_vector::<S>(rng, n);
        let start = norm(&x);
        for _ in 0..2 {
            for j in 0..q.ncols() {
                let c = dot(q.col(j), &x);
                axpy(-c, q.col(j), &mut x);
            }
        }
        let r = norm(&x);
        if r <= floor * start {
            continue;
        }
        let inv = r.recip();
        let x: Vec<S> = x.into_iter().map(|z| z.scale(inv)).collect();
        q.push_column(&x);
    }
    q
}

/// Haar-uniform point of the Grassmannian `G_k(𝔽ⁿ)`.
pub fn random_subspace<S: Scalar>(rng: &mut Rng, n: usize, k: usize) -> Subspace<S> {
    Subspace::from_orthonormal_unchecked(haar_frame(rng, n, k))
}

/// Haar-distributed orthogonal or unitary `n × n` matrix.
pub fn random_unitary<S: Scalar>(rng: &mut Rng, n: usize) -> Mat<S> {
    haar_frame(rng, n, n)
}

/// Uniform random `k`-subspace of `v`.
pub fn random_subspace_within<S: Scalar>(rng: &mut Rng, v: &Subspace<S>, k: usize) -> Subspace<S> {
    let c = haar_frame::<S>(rng, v.dim(), k);
    Subspace::from_orthonormal_unchecked(v.basis().mul(&c))
}

/// Random unit vector of `v`.
pub fn random_unit_in<S: Scalar>(rng: &mut Rng, v: &Subspace<S>) -> Vec<S> {
    let c = haar_frame::<S>(rng, v.dim(), 1);
    v.basis().mul_vec(c.col(0))
}

/// Uniform real number in `[lo, hi)`.
pub fn uniform<R: RealScalar>(rng: &mut Rng, lo: R, hi: R) -> R {
    use rand::Rng as _;
    let u: f64 = rng.random();
    lo + (hi - lo) * R::lit(u)
}

pub fn uniform_usize(rng: &mut Rng, lo: usize, hi_inclusive: usize) -> usize {
    use rand::Rng as _;
    rng.random_range(lo..=hi_inclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn frames_are_orthonormal() {
        let mut rng = seeded(1);
        for n in 0..9 {
            for k in 0..=n {
                let q: Mat<Complex64> = haar_frame(&mut rng, n, k);
                assert_eq!((q.nrows(), q.ncols()), (n, k));
                assert!(q.orthonormality_defect() < 1e-13);
            }
        }
    }

    #[test]
    fn seeding_is_deterministic() {
        let a: Mat<f64> = haar_frame(&mut seeded(9), 5, 3);
        let b: Mat<f64> = haar_frame(&mut seeded(9), 5, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn subspace_within_is_contained() {
        let mut rng = seeded(2);
        let v: Subspace<Complex64> = random_subspace(&mut rng, 6, 4);
        let u = random_subspace_within(&mut rng, &v, 2);
        assert_eq!(u.dim(), 2);
        assert!(v.contains(&u, &Default::default()).unwrap());
    }
}
