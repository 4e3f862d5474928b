//! Vector angles, Grassmann angles `Θ`, complementary angles `Θ⊥`, oriented
//! angles and projection factors, computed from principal angles.
//!
//! Every angle is evaluated as `atan2(sin, cos)` from a cosine product and an
//! independently accumulated sine, so angles near 0 keep full precision.

use num_complex::Complex;
use num_traits::{Float, FloatConst, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::mat::{dot, norm, sub_vec, add_vec, Mat};
use crate::principal::principal_factors;
use crate::scalar::{phase, Field, RealScalar, Scalar};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

/// Beyond this many factors the cosine product is accumulated in log space.
const LOG_PRODUCT_THRESHOLD: usize = 20;

/// Cosine and sine of an angle, kept separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosSin<R> {
    pub cos: R,
    pub sin: R,
}

impl<R: RealScalar> CosSin<R> {
    pub fn angle(&self) -> R {
        self.sin.atan2(self.cos)
    }

    pub(crate) fn right() -> Self {
        Self {
            cos: R::zero(),
            sin: R::one(),
        }
    }

    pub(crate) fn zero() -> Self {
        Self {
            cos: R::one(),
            sin: R::zero(),
        }
    }
}

/// `Π c_i`, in log space for long products.
pub(crate) fn product<R: RealScalar>(xs: &[R]) -> R {
    if xs.len() <= LOG_PRODUCT_THRESHOLD {
        return xs.iter().fold(R::one(), |a, &x| a * x);
    }
    if xs.iter().any(|&x| x <= R::zero()) {
        return R::zero();
    }
    xs.iter().map(|&x| x.ln()).fold(R::zero(), |a, l| a + l).exp()
}

/// `√(1 − Π(1 − s_i²))`, accumulated through `ln(1 − s²)`.
pub(crate) fn product_sine<R: RealScalar>(s: &[R]) -> R {
    let mut log_keep = R::zero();
    for &si in s {
        if si >= R::one() {
            return R::one();
        }
        log_keep = log_keep + (-(si * si)).ln_1p();
    }
    (-log_keep.exp_m1()).max(R::zero()).min(R::one()).sqrt()
}

/// Angle whose cosine is `Π c_i` given pairs with `c_i² + s_i² = 1`.
pub(crate) fn product_angle<R: RealScalar>(c: &[R], s: &[R]) -> CosSin<R> {
    CosSin {
        cos: product(c),
        sin: product_sine(s),
    }
}

/// Angles between two vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorAngles<S: Scalar> {
    /// Euclidean angle `θ ∈ [0, π]` of the underlying real vectors.
    pub theta: S::Real,
    /// Hermitian angle `γ ∈ [0, π/2]`.
    pub gamma: S::Real,
    /// `⟨v, w⟩ / (‖v‖‖w‖)`.
    pub zeta_cos: S,
    /// `arg ⟨v, w⟩`, absent when `v ⊥ w`.
    pub phase: Option<S::Real>,
}

/// Angle between unit vectors `a`, `b` as `2·atan2(‖a − b‖, ‖a + b‖)`.
fn unit_angle<S: Scalar>(a: &[S], b: &[S]) -> S::Real {
    let d = norm(&sub_vec(a, b));
    let s = norm(&add_vec(a, b));
    let two = S::Real::one() + S::Real::one();
    two * d.atan2(s)
}

pub fn vector_angles<S: Scalar>(v: &[S], w: &[S], cfg: &ToleranceConfig) -> Result<VectorAngles<S>> {
    crate::error::ensure_dim(v.len(), w.len())?;
    let half = S::Real::FRAC_PI_2();
    let nv = norm(v);
    let nw = norm(w);
    if nv == S::Real::zero() {
        return Ok(VectorAngles {
            theta: S::Real::zero(),
            gamma: S::Real::zero(),
            zeta_cos: S::one(),
            phase: None,
        });
    }
    if nw == S::Real::zero() {
        return Ok(VectorAngles {
            theta: half,
            gamma: half,
            zeta_cos: S::zero(),
            phase: None,
        });
    }
    let a: Vec<S> = v.iter().map(|&x| x.scale(nv.recip())).collect();
    let b: Vec<S> = w.iter().map(|&x| x.scale(nw.recip())).collect();
    let zeta = dot(&a, &b);
    let theta = unit_angle(&a, &b);
    let m = zeta.modulus();
    let (gamma, ph) = if m <= cfg.tol() {
        (half, None)
    } else {
        let unit = zeta.scale(m.recip());
        let b_rot: Vec<S> = b.iter().map(|&x| x * unit.conj()).collect();
        (unit_angle(&a, &b_rot), Some(phase(zeta)))
    };
    Ok(VectorAngles {
        theta,
        gamma,
        zeta_cos: zeta,
        phase: ph,
    })
}

/// `(cos Θ_{V,W}, sin Θ_{V,W})`.
pub fn grassmann_cos_sin<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<CosSin<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() {
        return Ok(CosSin::zero());
    }
    if v.dim() > w.dim() {
        return Ok(CosSin::right());
    }
    let (c, s) = principal_factors(v, w, cfg)?;
    Ok(product_angle(&c, &s))
}

/// Grassmann angle `Θ_{V,W}`: `arccos Π cos θ_i` when `dim V ≤ dim W`,
/// otherwise `π/2`; `Θ_{{0},W} = 0`.
pub fn grassmann_angle<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(grassmann_cos_sin(v, w, cfg)?.angle())
}

pub fn cos_grassmann_angle<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(grassmann_cos_sin(v, w, cfg)?.cos)
}

/// `(cos Θ⊥_{V,W}, sin Θ⊥_{V,W})` with `cos Θ⊥ = Π sin θ_i`.
pub fn complementary_cos_sin<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<CosSin<S::Real>> {
    v.check_same_ambient(w)?;
    let (c, s) = principal_factors(v, w, cfg)?;
    Ok(product_angle(&s, &c))
}

/// Complementary Grassmann angle `Θ⊥_{V,W} = Θ_{V,W⊥}`.
pub fn complementary_angle<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(complementary_cos_sin(v, w, cfg)?.angle())
}

pub fn cos_complementary_angle<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(complementary_cos_sin(v, w, cfg)?.cos)
}

/// `Θ_{V⊥,W}` for nonzero `V`, `W`: `arccos Π_{i>r} sin θ_i` when `V + W` is
/// the whole space (`r = dim V∩W`), otherwise `π/2`.
pub fn theta_vperp_w_cos_sin<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<CosSin<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    if v.sum(w, cfg)?.dim() < v.ambient_dim() {
        return Ok(CosSin::right());
    }
    let (c, s) = principal_factors(v, w, cfg)?;
    let tol = cfg.tol::<S::Real>();
    let r = c
        .iter()
        .zip(&s)
        .take_while(|(&ci, &si)| si.atan2(ci) <= tol)
        .count();
    Ok(product_angle(&s[r..], &c[r..]))
}

pub fn theta_vperp_w<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(theta_vperp_w_cos_sin(v, w, cfg)?.angle())
}

/// `π_{V,W}`: volume contraction under projection, `cos Θ` over ℝ and
/// `cos² Θ` over ℂ.
pub fn projection_factor<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    let c = cos_grassmann_angle(v, w, cfg)?;
    Ok(match S::FIELD {
        Field::Real => c,
        Field::Complex => c * c,
    })
}

/// `(cos Θ_{V,W}, cos Θ_{V_ℝ,W_ℝ})` for complex subspaces.
pub fn real_complex_relation<R: RealScalar>(
    v: &Subspace<Complex<R>>,
    w: &Subspace<Complex<R>>,
    cfg: &ToleranceConfig,
) -> Result<(R, R)> {
    let c = cos_grassmann_angle(v, w, cfg)?;
    let r = cos_grassmann_angle(&v.realify(), &w.realify(), cfg)?;
    Ok((c, r))
}

/// Summary of the angle family for an ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleReport<R> {
    pub theta: R,
    pub theta_reverse: R,
    pub theta_perp: R,
    pub theta_min_sym: R,
    pub theta_max_sym: R,
    pub projection_factor: R,
}

pub fn angle_report<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<AngleReport<S::Real>> {
    let forward = grassmann_cos_sin(v, w, cfg)?;
    let theta = forward.angle();
    let theta_reverse = grassmann_angle(w, v, cfg)?;
    let theta_perp = complementary_angle(v, w, cfg)?;
    let projection_factor = match S::FIELD {
        Field::Real => forward.cos,
        Field::Complex => forward.cos * forward.cos,
    };
    Ok(AngleReport {
        theta,
        theta_reverse,
        theta_perp,
        theta_min_sym: theta.min(theta_reverse),
        theta_max_sym: theta.max(theta_reverse),
        projection_factor,
    })
}

/// A subspace oriented by an ordered basis; the orientation blade is
/// `v₁ ∧ … ∧ v_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedSubspace<S: Scalar> {
    frame: Mat<S>,
}

impl<S: Scalar> OrientedSubspace<S> {
    /// Fails when the frame is linearly dependent.
    pub fn new(ambient_dim: usize, frame: &[Vec<S>], cfg: &ToleranceConfig) -> Result<Self> {
        let m = Mat::from_columns(ambient_dim, frame)?;
        let (_, rank) = crate::linalg::orthonormalize(&m, cfg);
        if rank != frame.len() {
            return Err(Error::Precondition("orientation frame is linearly dependent".into()));
        }
        Ok(Self { frame: m })
    }

    /// Orients `V` by its stored orthonormal basis.
    pub fn from_subspace(v: &Subspace<S>) -> Self {
        Self {
            frame: v.basis().clone(),
        }
    }

    pub fn frame(&self) -> &Mat<S> {
        &self.frame
    }

    pub fn dim(&self) -> usize {
        self.frame.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.frame.nrows()
    }

    pub fn subspace(&self, cfg: &ToleranceConfig) -> Subspace<S> {
        Subspace::from_matrix(&self.frame, cfg)
    }

    /// Reverses (real) or rotates (complex) the orientation by `e^{iφ}`.
    pub fn rephased(&self, phase: S::Real) -> Self {
        let mut frame = self.frame.clone();
        if frame.ncols() > 0 {
            let z = S::from_phase(phase);
            for x in frame.col_mut(0) {
                *x = *x * z;
            }
        }
        Self { frame }
    }

    /// `⟨ν, ω⟩ = det(⟨v_i, w_j⟩)` for the orientation blades.
    pub fn blade_inner(&self, other: &Self) -> Result<S> {
        crate::error::ensure_dim(self.ambient_dim(), other.ambient_dim())?;
        if self.dim() != other.dim() {
            return Ok(S::zero());
        }
        det(&self.frame.adjoint_mul(&other.frame))
    }

    /// `‖ν‖`.
    pub fn blade_norm(&self) -> Result<S::Real> {
        Ok(self.blade_inner(self)?.re().max(S::Real::zero()).sqrt())
    }

    pub fn blade(&self) -> Result<crate::exterior::Multivector<S>> {
        let cols = self.frame.to_columns();
        let vs: Vec<&[S]> = cols.iter().map(Vec::as_slice).collect();
        crate::exterior::wedge_vectors(self.ambient_dim(), &vs)
    }
}

/// Oriented Grassmann angle `𝚯_{V,W}`, with `cos 𝚯 = e^{iφ} cos Θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedAngle<S: Scalar> {
    pub magnitude: S::Real,
    /// `φ_{V,W}`; absent when `V ⊥̃ W`.
    pub phase: Option<S::Real>,
    pub cos_value: S,
}

impl<S: Scalar> OrientedAngle<S> {
    /// Real value of `𝚯`: `Θ` for phase 0 and `π − Θ` for phase `π`.
    pub fn real_angle(&self) -> Option<S::Real> {
        let p = self.phase?;
        if p == S::Real::zero() {
            Some(self.magnitude)
        } else if (p.abs() - S::Real::PI()).abs() <= S::Real::epsilon() {
            Some(S::Real::PI() - self.magnitude)
        } else {
            None
        }
    }
}

pub fn oriented_angle<S: Scalar>(
    v: &OrientedSubspace<S>,
    w: &OrientedSubspace<S>,
    cfg: &ToleranceConfig,
) -> Result<OrientedAngle<S>> {
    crate::error::ensure_dim(v.ambient_dim(), w.ambient_dim())?;
    if v.dim() != w.dim() {
        return Err(Error::Precondition(format!(
            "oriented angle needs equal dimensions, got {} and {}",
            v.dim(),
            w.dim()
        )));
    }
    let scale = v.blade_norm()? * w.blade_norm()?;
    let cos_value = v.blade_inner(w)?.scale(scale.recip());
    let magnitude = grassmann_angle(&v.subspace(cfg), &w.subspace(cfg), cfg)?;
    let ph = if cos_value.modulus() > cfg.tol() {
        Some(phase(cos_value))
    } else {
        None
    };
    Ok(OrientedAngle {
        magnitude,
        phase: ph,
        cos_value,
    })
}
