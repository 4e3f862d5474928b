//! Angles from arbitrary (non-orthonormal) bases via Gram determinants, and
//! from projection matrices.
//!
//! With `A = (⟨w_i, w_j⟩)`, `B = (⟨w_i, v_j⟩)`, `D = (⟨v_i, v_j⟩)`:
//! `cos² Θ_{V,W} = det(B* A⁻¹ B) / det D` and
//! `cos² Θ⊥_{V,W} = det(A − B D⁻¹ B*) / det A`.
//! The cosine is taken from the determinant ratio; the sine is read off the
//! projection residuals whitened by the Cholesky factor of the Gram matrix,
//! so both ends of `[0, π/2]` stay accurate.

use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{product, product_sine, CosSin};
use crate::linalg::{cholesky, det, solve, solve_lower, svd};
use crate::mat::Mat;
use crate::scalar::{RealScalar, Scalar};
use crate::tolerance::{clamp_unit, ToleranceConfig};

const MAX_GRAM_CONDITION: f64 = 1e12;

/// Which angle a projection matrix determines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Theta,
    Perp,
}

fn condition_limit<R: RealScalar>() -> R {
    R::lit(MAX_GRAM_CONDITION).min((R::lit(100.0) * R::epsilon()).recip())
}

/// Rejects dependent lists and lists whose Gram matrix has condition number
/// above the limit (`cond(Gram) = cond(M)²`).
fn check_basis<S: Scalar>(m: &Mat<S>, which: &str) -> Result<()> {
    if m.ncols() == 0 {
        return Ok(());
    }
    let sigma = svd(m).sigma;
    let (hi, lo) = (sigma[0], sigma[sigma.len() - 1]);
    if m.ncols() > m.nrows() || lo.is_nan() || lo <= S::Real::zero() {
        return Err(Error::Precondition(format!("basis {which} is linearly dependent")));
    }
    let c = (hi / lo).powi(2);
    if c > condition_limit::<S::Real>() {
        return Err(Error::IllConditioned {
            condition: num_traits::ToPrimitive::to_f64(&c).unwrap_or(f64::INFINITY),
        });
    }
    Ok(())
}

fn to_mat<S: Scalar>(n: usize, vs: &[Vec<S>]) -> Result<Mat<S>> {
    Mat::from_columns(n, vs)
}

/// Singular values of `L⁻¹ X*` with `G = L L*`. When `X` holds the residuals
/// of a basis with Gram matrix `G` after projecting onto the other subspace,
/// their squared product is `det Gram(X) / det G` and they are the sines of
/// the principal angles; for the projections they are the cosines.
fn whitened_values<S: Scalar>(g: &Mat<S>, x: &Mat<S>) -> Result<Vec<S::Real>> {
    let l = cholesky(g)?;
    let y = solve_lower(&l, &x.adjoint());
    Ok(svd(&y).sigma.into_iter().map(clamp_unit).collect())
}

/// Splits `x` (columns in `𝔽ⁿ`) against the span of `basis` with Gram matrix
/// `gram`: returns `(projection, residual)`, solving `gram · c = basis* x`.
fn split<S: Scalar>(basis: &Mat<S>, gram: &Mat<S>, x: &Mat<S>) -> Result<(Mat<S>, Mat<S>)> {
    let c = solve(gram, &basis.adjoint_mul(x))?;
    let proj = basis.mul(&c);
    let residual = x.sub(&proj);
    Ok((proj, residual))
}

fn checked<S: Scalar>(v: &Mat<S>, w: &Mat<S>) -> Result<(Mat<S>, Mat<S>)> {
    crate::error::ensure_dim(v.nrows(), w.nrows())?;
    check_basis(v, "V")?;
    check_basis(w, "W")?;
    Ok((v.adjoint_mul(v), w.adjoint_mul(w)))
}

fn gram_cos_sin<S: Scalar>(v: &Mat<S>, w: &Mat<S>) -> Result<CosSin<S::Real>> {
    let (d, a) = checked(v, w)?;
    let (p, q) = (v.ncols(), w.ncols());
    if p == 0 {
        return Ok(CosSin::zero());
    }
    if p > q {
        return Ok(CosSin::right());
    }
    let (proj, residual) = split(w, &a, v)?;
    let cosines = whitened_values(&d, &proj)?;
    let sines = whitened_values(&d, &residual)?;
    Ok(CosSin {
        cos: product(&cosines),
        sin: product_sine(&sines),
    })
}

fn complementary_gram_cos_sin<S: Scalar>(v: &Mat<S>, w: &Mat<S>) -> Result<CosSin<S::Real>> {
    let (d, a) = checked(v, w)?;
    if v.ncols() == 0 || w.ncols() == 0 {
        return Ok(CosSin::zero());
    }
    let (proj, residual) = split(v, &d, w)?;
    let cosines = whitened_values(&a, &proj)?;
    let sines = whitened_values(&a, &residual)?;
    Ok(CosSin {
        cos: product(&sines),
        sin: product_sine(&cosines),
    })
}

/// Literal determinant ratios `(det(B* A⁻¹ B) / det D, det(A − B D⁻¹ B*) / det A)`.
pub fn gram_determinant_ratios<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
) -> Result<(S::Real, S::Real)> {
    let (vm, wm) = (to_mat(n, v)?, to_mat(n, w)?);
    let (d, a) = checked(&vm, &wm)?;
    let b = wm.adjoint_mul(&vm);
    let theta = if vm.ncols() > wm.ncols() {
        S::Real::zero()
    } else {
        det(&b.adjoint_mul(&solve(&a, &b)?))?.re() / det(&d)?.re()
    };
    let perp = if vm.ncols() == 0 || wm.ncols() == 0 {
        S::Real::one()
    } else {
        det(&a.sub(&b.mul(&solve(&d, &b.adjoint())?)))?.re() / det(&a)?.re()
    };
    Ok((clamp_unit(theta), clamp_unit(perp)))
}

/// `Θ_{V,W}` from spanning lists of `V` and `W` (each linearly independent).
pub fn angle_from_gram<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    _cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(gram_cos_sin(&to_mat(n, v)?, &to_mat(n, w)?)?.angle())
}

/// `cos Θ_{V,W} = √(det(B* A⁻¹ B) / det D)`.
pub fn cos_from_gram<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    _cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(gram_cos_sin(&to_mat(n, v)?, &to_mat(n, w)?)?.cos)
}

/// Equal-dimension shortcut `cos² Θ = |det B|² / (det A · det D)`.
pub fn cos_from_gram_equal_dim<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    _cfg: &ToleranceConfig,
) -> Result<S::Real> {
    if v.len() != w.len() {
        return Err(Error::Precondition(format!(
            "equal dimensions required, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    let (vm, wm) = (to_mat(n, v)?, to_mat(n, w)?);
    let (d, a) = checked(&vm, &wm)?;
    let b = det(&wm.adjoint_mul(&vm))?.modulus_sqr();
    let den = det(&a)?.re() * det(&d)?.re();
    Ok(clamp_unit(b / den).sqrt())
}

pub fn angle_from_gram_equal_dim<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(cfg.acos(cos_from_gram_equal_dim(n, v, w, cfg)?))
}

/// `Θ⊥_{V,W}` from spanning lists.
pub fn complementary_from_gram<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    _cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(complementary_gram_cos_sin(&to_mat(n, v)?, &to_mat(n, w)?)?.angle())
}

/// `cos Θ⊥_{V,W} = √(det(A − B D⁻¹ B*) / det A)`.
pub fn cos_complementary_from_gram<S: Scalar>(
    n: usize,
    v: &[Vec<S>],
    w: &[Vec<S>],
    _cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(complementary_gram_cos_sin(&to_mat(n, v)?, &to_mat(n, w)?)?.cos)
}

/// Angle from the `q × p` matrix of the orthogonal projection `V → W` in
/// orthonormal bases: `cos² Θ = det(P* P)`, `cos² Θ⊥ = det(1 − P P*)`.
pub fn angle_from_projection_matrix<S: Scalar>(p: &Mat<S>, mode: Mode) -> Result<S::Real> {
    let d = match mode {
        Mode::Theta => det(&p.adjoint_mul(p))?,
        Mode::Perp => det(&Mat::identity(p.nrows()).sub(&p.mul(&p.adjoint())))?,
    };
    Ok(clamp_unit(clamp_unit(d.re()).sqrt()).acos())
}

/// Whether the Gram matrix of a list has full rank within the conditioning
/// limit.
pub fn is_well_conditioned<S: Scalar>(n: usize, vs: &[Vec<S>]) -> Result<bool> {
    Ok(check_basis(&to_mat(n, vs)?, "").is_ok())
}
