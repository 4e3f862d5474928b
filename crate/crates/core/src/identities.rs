//! Executable checks of the summation and product identities for Grassmann
//! angles, the bounds relating `Θ` and `Θ⊥`, and the complexifiability
//! obstruction.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::MultiIndex;
use crate::grassmann::{
    complementary_cos_sin, cos_complementary_angle, cos_grassmann_angle, grassmann_cos_sin,
    oriented_angle, OrientedSubspace,
};
use crate::mat::{norm, scale_vec, Mat};
use crate::principal::{
    is_partially_orthogonal, principal_decomposition, principal_factors, Partition,
};
use crate::scalar::{RealScalar, Scalar};
use crate::subspace::{require_real, Subspace};
use crate::tolerance::ToleranceConfig;

/// Outcome of comparing two sides of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityResult<R> {
    pub lhs: R,
    pub rhs: R,
    pub residual: R,
    pub passed: bool,
}

impl<R: RealScalar> IdentityResult<R> {
    pub fn new(lhs: R, rhs: R, tol: R) -> Self {
        let residual = (lhs - rhs).abs();
        Self {
            lhs,
            rhs,
            residual,
            passed: residual <= tol,
        }
    }
}

/// `[θ^min, θ^max]` of `V` with respect to `W`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularRange<R> {
    pub theta_min: R,
    pub theta_max: R,
    pub delta: R,
}

pub fn angular_range<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<AngularRange<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    let pd = principal_decomposition(v, w, cfg)?;
    let theta_min = pd.angles[0];
    let theta_max = if v.dim() <= w.dim() {
        *pd.angles.last().expect("nonzero subspaces")
    } else {
        S::Real::FRAC_PI_2()
    };
    Ok(AngularRange {
        theta_min,
        theta_max,
        delta: theta_max - theta_min,
    })
}

fn ensure_orthogonal_parts<S: Scalar>(parts: &Partition<S>, cfg: &ToleranceConfig) -> Result<()> {
    if parts.is_orthogonal(cfg)? {
        Ok(())
    } else {
        Err(Error::Precondition("partition is not orthogonal".into()))
    }
}

/// `Σ cos² Θ_{L,W_i} = 1` for a line `L` and an orthogonal partition of the
/// ambient space.
pub fn check_line_partition<S: Scalar>(
    l: &Subspace<S>,
    parts: &Partition<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    if l.dim() != 1 {
        return Err(Error::Precondition(format!("expected a line, got dimension {}", l.dim())));
    }
    ensure_orthogonal_parts(parts, cfg)?;
    parts.ensure_sums_to(&Subspace::full(l.ambient_dim()), cfg)?;
    let mut lhs = S::Real::zero();
    for w in parts.parts() {
        let c = cos_grassmann_angle(l, w, cfg)?;
        lhs = lhs + c * c;
    }
    Ok(IdentityResult::new(lhs, S::Real::one(), cfg.tol()))
}

/// Normalizes the columns of an orthogonal basis of the ambient space.
fn orthonormal_basis<S: Scalar>(basis: &Mat<S>, n: usize, cfg: &ToleranceConfig) -> Result<Mat<S>> {
    if basis.nrows() != n || basis.ncols() != n {
        return Err(Error::Precondition(format!(
            "basis must be {n}x{n}, got {}x{}",
            basis.nrows(),
            basis.ncols()
        )));
    }
    let mut cols = Vec::with_capacity(n);
    for c in basis.columns() {
        let r = norm(c);
        if r <= cfg.tol() {
            return Err(Error::Precondition("basis has a zero vector".into()));
        }
        cols.push(scale_vec(S::from_real(r.recip()), c));
    }
    let q = Mat::from_columns(n, &cols)?;
    if q.orthonormality_defect() > cfg.tol() {
        return Err(Error::Precondition("basis is not orthogonal".into()));
    }
    Ok(q)
}

fn zero_based(index: &MultiIndex) -> Vec<usize> {
    index.indices().iter().map(|i| i - 1).collect()
}

/// `C(n, k)` in exact integer arithmetic.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Sum over the coordinate `q`-subspaces `W_I` of an orthogonal basis:
/// `Σ cos² Θ_{V,W_I} = C(n−p, n−q)` when `p ≤ q`, otherwise
/// `Σ cos² Θ_{W_I,V} = C(p, q)`.
pub fn check_coordinate_identity<S: Scalar>(
    v: &Subspace<S>,
    basis: &Mat<S>,
    q: usize,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    let n = v.ambient_dim();
    if q > n {
        return Err(Error::Precondition(format!("q = {q} exceeds the ambient dimension {n}")));
    }
    let basis = orthonormal_basis(basis, n, cfg)?;
    let p = v.dim();
    let mut lhs = S::Real::zero();
    for index in MultiIndex::all(q, n) {
        let wi = Subspace::coordinate_subspace_of_basis(&basis, &zero_based(&index));
        let c = if p <= q {
            cos_grassmann_angle(v, &wi, cfg)?
        } else {
            cos_grassmann_angle(&wi, v, cfg)?
        };
        lhs = lhs + c * c;
    }
    let target = if p <= q {
        binomial(n - p, n - q)
    } else {
        binomial(p, q)
    };
    let rhs = S::Real::from_u128(target).expect("binomial representable");
    Ok(IdentityResult::new(lhs, rhs, cfg.tol()))
}

/// Both sides of the oriented coordinate sum, with the slack of the
/// inequality `cos Θ_{V,W} ≤ Σ cos Θ_{V,X_I} cos Θ_{W,X_I}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedSumResult<S: Scalar> {
    pub lhs: S,
    pub rhs: S,
    pub residual: S::Real,
    pub passed: bool,
    pub inequality_slack: S::Real,
}

fn blade_cos<S: Scalar>(a: &OrientedSubspace<S>, b: &OrientedSubspace<S>) -> Result<S> {
    let scale = a.blade_norm()? * b.blade_norm()?;
    Ok(a.blade_inner(b)?.scale(scale.recip()))
}

/// `cos 𝚯_{V,W} = Σ_I cos 𝚯_{V,X_I} cos 𝚯_{X_I,W}` over the coordinate
/// `p`-subspaces `X_I` of an orthogonal basis, oriented by its coordinate
/// blades.
pub fn check_oriented_sum<S: Scalar>(
    v: &OrientedSubspace<S>,
    w: &OrientedSubspace<S>,
    basis: &Mat<S>,
    cfg: &ToleranceConfig,
) -> Result<OrientedSumResult<S>> {
    let n = v.ambient_dim();
    let basis = orthonormal_basis(basis, n, cfg)?;
    let lhs = oriented_angle(v, w, cfg)?.cos_value;
    let p = v.dim();
    let mut rhs = S::zero();
    let mut bound = S::Real::zero();
    for index in MultiIndex::all(p, n) {
        let x = OrientedSubspace::from_subspace(&Subspace::coordinate_subspace_of_basis(
            &basis,
            &zero_based(&index),
        ));
        let vx = blade_cos(v, &x)?;
        let xw = blade_cos(&x, w)?;
        rhs = rhs + vx * xw;
        bound = bound + vx.modulus() * xw.modulus();
    }
    let residual = (lhs - rhs).modulus();
    Ok(OrientedSumResult {
        lhs,
        rhs,
        residual,
        passed: residual <= cfg.tol(),
        inequality_slack: bound - lhs.modulus(),
    })
}

/// `cos² Θ_{U,W} = Σ_I cos² Θ_{U,V_I} cos² Θ_{V_I,W}` over the coordinate
/// `r`-subspaces `V_I` of a principal basis of `V` with respect to `W`.
pub fn check_principal_coordinate<S: Scalar>(
    u: &Subspace<S>,
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    if !v.contains(u, cfg)? {
        return Err(Error::Precondition("U is not contained in V".into()));
    }
    let pd = principal_decomposition(v, w, cfg)?;
    let c = cos_grassmann_angle(u, w, cfg)?;
    let mut rhs = S::Real::zero();
    for index in MultiIndex::all(u.dim(), v.dim()) {
        let vi = Subspace::coordinate_subspace_of_basis(&pd.left_basis, &zero_based(&index));
        let a = cos_grassmann_angle(u, &vi, cfg)?;
        let b = cos_grassmann_angle(&vi, w, cfg)?;
        rhs = rhs + a * a * b * b;
    }
    Ok(IdentityResult::new(c * c, rhs, cfg.tol()))
}

/// `Π cos Θ_{V_i,W} · Π_{i<k} cos Θ⊥_{P(V_i),P(T_i)} / cos Θ⊥_{V_i,T_i}`
/// with `T_i = V_{i+1} ⊕ … ⊕ V_k`; zero when some `V_i ⊥̃ W`.
fn partition_product<S: Scalar>(
    parts: &[Subspace<S>],
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    for vi in parts {
        if is_partially_orthogonal(vi, w, cfg)? {
            return Ok(S::Real::zero());
        }
    }
    let mut acc = S::Real::one();
    for vi in parts {
        acc = acc * cos_grassmann_angle(vi, w, cfg)?;
    }
    let mut tail = Subspace::zero(w.ambient_dim());
    for vi in parts.iter().rev() {
        if !tail.is_zero() {
            let projected = cos_complementary_angle(
                &w.project_subspace(vi, cfg)?,
                &w.project_subspace(&tail, cfg)?,
                cfg,
            )?;
            acc = acc * projected / cos_complementary_angle(vi, &tail, cfg)?;
        }
        tail = vi.sum(&tail, cfg)?;
    }
    Ok(acc)
}

/// `cos Θ_{V₁⊕V₂,W} = cos Θ_{V₁,W} cos Θ_{V₂,W} · cos Θ⊥_{P(V₁),P(V₂)} / cos Θ⊥_{V₁,V₂}`.
pub fn direct_sum_angle<S: Scalar>(
    v1: &Subspace<S>,
    v2: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    let parts = Partition::new(vec![v1.clone(), v2.clone()], cfg)
        .map_err(|_| Error::Precondition("summands overlap".into()))?;
    check_partition_formula(&parts, w, cfg)
}

/// The direct-sum formula iterated over a partition `V = V₁ ⊕ … ⊕ V_k`.
pub fn check_partition_formula<S: Scalar>(
    parts: &Partition<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    let v = parts.sum(cfg)?;
    let lhs = cos_grassmann_angle(&v, w, cfg)?;
    let rhs = partition_product(parts.parts(), w, cfg)?;
    Ok(IdentityResult::new(lhs, rhs, cfg.tol()))
}

/// Whether an orthogonal partition of `V` is principal with respect to `W`,
/// decided by `cos Θ_{V,W} = Π cos Θ_{V_i,W}`.
pub fn characterize_principal_partition<S: Scalar>(
    v: &Subspace<S>,
    parts: &Partition<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<bool> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    if is_partially_orthogonal(v, w, cfg)? {
        return Err(Error::Precondition("V is partially orthogonal to W".into()));
    }
    parts.ensure_sums_to(v, cfg)?;
    ensure_orthogonal_parts(parts, cfg)?;
    let lhs = cos_grassmann_angle(v, w, cfg)?;
    let mut rhs = S::Real::one();
    for vi in parts.parts() {
        rhs = rhs * cos_grassmann_angle(vi, w, cfg)?;
    }
    Ok((lhs - rhs).abs() <= cfg.tol())
}

/// `cos Θ⊥_{V,W} = Π sin θ_i` against the definition `cos Θ_{V,W⊥}`.
pub fn check_product_of_sines<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    let lhs = complementary_cos_sin(v, w, cfg)?.cos;
    let rhs = cos_grassmann_angle(v, &w.complement(), cfg)?;
    Ok(IdentityResult::new(lhs, rhs, cfg.tol()))
}

/// `Θ⊥_{V,W} = Θ⊥_{W,V}` and `Θ_{V,W} = Θ_{W⊥,V⊥}`, compared as angles.
pub fn check_symmetries<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<[IdentityResult<S::Real>; 2]> {
    let tol = cfg.tol();
    let perp = IdentityResult::new(
        complementary_cos_sin(v, w, cfg)?.angle(),
        complementary_cos_sin(w, v, cfg)?.angle(),
        tol,
    );
    let dual = IdentityResult::new(
        grassmann_cos_sin(v, w, cfg)?.angle(),
        grassmann_cos_sin(&w.complement(), &v.complement(), cfg)?.angle(),
        tol,
    );
    Ok([perp, dual])
}

/// `cos Θ_{V,U} = cos Θ_{V,P(V)} cos Θ_{P(V),U}` for `U ⊂ W`, `P = P_W`.
pub fn check_spherical_pythagorean<S: Scalar>(
    v: &Subspace<S>,
    u: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    if !w.contains(u, cfg)? {
        return Err(Error::Precondition("U is not contained in W".into()));
    }
    let pv = w.project_subspace(v, cfg)?;
    let lhs = cos_grassmann_angle(v, u, cfg)?;
    let rhs = cos_grassmann_angle(v, &pv, cfg)? * cos_grassmann_angle(&pv, u, cfg)?;
    Ok(IdentityResult::new(lhs, rhs, cfg.tol()))
}

/// `‖ν₁∧ν₂‖² = (‖ν₁‖²‖ν₂‖² − |⟨ν₁,ν₂⟩|²) · cos² Θ⊥ / sin² Θ` for oriented
/// subspaces of equal dimension with `V₁ ≠ V₂`.
pub fn check_blade_wedge_identity<S: Scalar>(
    v1: &OrientedSubspace<S>,
    v2: &OrientedSubspace<S>,
    cfg: &ToleranceConfig,
) -> Result<IdentityResult<S::Real>> {
    if v1.dim() != v2.dim() {
        return Err(Error::Precondition("blades must have equal grade".into()));
    }
    let s1 = v1.subspace(cfg);
    let s2 = v2.subspace(cfg);
    let theta = grassmann_cos_sin(&s1, &s2, cfg)?;
    if theta.sin <= cfg.tol() {
        return Err(Error::Precondition("subspaces coincide".into()));
    }
    let lhs = v1.blade()?.wedge(&v2.blade()?)?.norm_sqr();
    let n1 = v1.blade_norm()?;
    let n2 = v2.blade_norm()?;
    let gram = n1 * n1 * n2 * n2 - v1.blade_inner(v2)?.modulus_sqr();
    let perp = cos_complementary_angle(&s1, &s2, cfg)?;
    let rhs = gram * perp * perp / (theta.sin * theta.sin);
    Ok(IdentityResult::new(lhs, rhs, cfg.tol()))
}

/// One inequality or equality among the `(Θ, Θ⊥)` constraints. `slack` is
/// the margin by which it holds; negative means violated. Equalities report
/// `−|lhs − rhs|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck<R> {
    pub name: &'static str,
    pub slack: R,
    pub holds: bool,
}

/// Equality cases for `cos Θ + cos Θ⊥ ≤ cos Δθ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityCase {
    /// `dim V∩W⊥ ≥ p − 1`.
    A,
    /// `dim V∩W ≥ p − 1`.
    B,
    /// `Δθ = π/2`.
    C,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport<R> {
    pub dim: usize,
    pub theta: R,
    pub theta_perp: R,
    /// Absent when `W = {0}`.
    pub range: Option<AngularRange<R>>,
    pub checks: Vec<BoundCheck<R>>,
    /// Whether `cos Θ + cos Θ⊥` meets its `Δθ` bound within tolerance.
    pub at_boundary: bool,
    pub equality_cases: Vec<EqualityCase>,
}

impl<R: RealScalar> FeasibilityReport<R> {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck<R>> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Largest violation over all checks, zero when every check holds exactly.
    pub fn worst_violation(&self) -> R {
        self.checks
            .iter()
            .fold(R::zero(), |a, c| a.max(-c.slack))
    }
}

fn at_least<R: RealScalar>(name: &'static str, value: R, bound: R, tol: R) -> BoundCheck<R> {
    let slack = value - bound;
    BoundCheck {
        name,
        slack,
        holds: slack >= -tol,
    }
}

fn at_most<R: RealScalar>(name: &'static str, value: R, bound: R, tol: R) -> BoundCheck<R> {
    at_least(name, bound, value, tol)
}

fn equal<R: RealScalar>(name: &'static str, value: R, target: R, tol: R) -> BoundCheck<R> {
    let slack = -(value - target).abs();
    BoundCheck {
        name,
        slack,
        holds: slack >= -tol,
    }
}

/// Evaluates every applicable constraint on `(Θ_{V,W}, Θ⊥_{V,W})` for
/// nonzero `V`.
pub fn theta_pair_feasibility<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<FeasibilityReport<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    let tol = cfg.tol::<S::Real>();
    let half_pi = S::Real::FRAC_PI_2();
    let t = grassmann_cos_sin(v, w, cfg)?;
    let tp = complementary_cos_sin(v, w, cfg)?;
    let (theta, theta_perp) = (t.angle(), tp.angle());
    let angle_sum = theta + theta_perp;
    let cos_sum = t.cos + tp.cos;
    let cos2_sum = t.cos * t.cos + tp.cos * tp.cos;

    let mut checks = vec![
        at_least("cos2_sum_lower", cos2_sum, S::Real::zero(), tol),
        at_most("cos2_sum_upper", cos2_sum, S::Real::one(), tol),
        at_least("angle_sum_lower", angle_sum, half_pi, tol),
        at_most("angle_sum_upper", angle_sum, S::Real::PI(), tol),
    ];
    let p = v.dim();
    let mut report = FeasibilityReport {
        dim: p,
        theta,
        theta_perp,
        range: None,
        checks: Vec::new(),
        at_boundary: false,
        equality_cases: Vec::new(),
    };
    if w.is_zero() {
        report.checks = checks;
        return Ok(report);
    }

    let range = angular_range(v, w, cfg)?;
    let cos_delta = range.delta.cos();
    let angle_floor = half_pi + range.delta;
    match p {
        1 => {
            checks.push(equal("line_angle_sum", angle_sum, half_pi, tol));
            checks.push(at_least("line_cos_sum", cos_sum, S::Real::one(), tol));
            report.at_boundary = (cos_sum - S::Real::one()).abs() <= tol;
        }
        2 => {
            checks.push(at_least("plane_angle_sum", angle_sum, angle_floor, tol));
            checks.push(equal("plane_cos_sum", cos_sum, cos_delta, tol));
            report.at_boundary = true;
        }
        _ => {
            checks.push(at_least("angle_sum_range", angle_sum, angle_floor, tol));
            checks.push(at_most("cos_sum_range", cos_sum, cos_delta, tol));
            report.at_boundary = (cos_delta - cos_sum).abs() <= tol;
        }
    }

    let (c, s) = principal_factors(v, w, cfg)?;
    let angles: Vec<S::Real> = c.iter().zip(&s).map(|(&ci, &si)| si.atan2(ci)).collect();
    let extra = p.saturating_sub(w.dim());
    let right = angles.iter().filter(|&&a| a >= half_pi - tol).count() + extra;
    let flat = angles.iter().filter(|&&a| a <= tol).count();
    if right + 1 >= p {
        report.equality_cases.push(EqualityCase::A);
    }
    if flat + 1 >= p {
        report.equality_cases.push(EqualityCase::B);
    }
    if range.delta >= half_pi - tol {
        report.equality_cases.push(EqualityCase::C);
    }
    report.range = Some(range);
    report.checks = checks;
    Ok(report)
}

/// `(cos Θ)^{2/p} + (cos Θ⊥)^{2/p} = 1` when `Δθ = 0`; `None` when the
/// angular range is not zero or either side is `{0}`.
pub fn check_zero_range_curve<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<Option<IdentityResult<S::Real>>> {
    if v.is_zero() || w.is_zero() {
        return Ok(None);
    }
    let range = angular_range(v, w, cfg)?;
    if range.delta > cfg.tol() {
        return Ok(None);
    }
    let two = S::Real::one() + S::Real::one();
    let e = two / S::Real::from_usize(v.dim()).expect("dimension representable");
    let lhs = cos_grassmann_angle(v, w, cfg)?.powf(e) + cos_complementary_angle(v, w, cfg)?.powf(e);
    Ok(Some(IdentityResult::new(lhs, S::Real::one(), cfg.tol())))
}

/// Verdict of the necessary condition for simultaneous complexifiability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Complexifiability {
    Obstructed,
    Inconclusive,
}

impl fmt::Display for Complexifiability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Obstructed => "OBSTRUCTED",
            Self::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Tests real subspaces of even dimension against
/// `(cos Θ)^{1/2} + (cos Θ⊥)^{1/2} ≤ cos Δθ`, which must be an equality
/// when `dim V = 4`. Below dimension 4 there is no criterion.
pub fn complexifiability_obstruction<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<Complexifiability> {
    require_real::<S>()?;
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    for (what, d) in [("ambient", v.ambient_dim()), ("V", v.dim()), ("W", w.dim())] {
        if d % 2 != 0 {
            return Err(Error::Precondition(format!("{what} has odd dimension {d}")));
        }
    }
    if v.dim() < 4 {
        return Ok(Complexifiability::Inconclusive);
    }
    let tol = cfg.tol::<S::Real>();
    let lhs = cos_grassmann_angle(v, w, cfg)?.sqrt() + cos_complementary_angle(v, w, cfg)?.sqrt();
    let rhs = angular_range(v, w, cfg)?.delta.cos();
    let fires = if v.dim() == 4 {
        (lhs - rhs).abs() > tol
    } else {
        lhs > rhs + tol
    };
    Ok(if fires {
        Complexifiability::Obstructed
    } else {
        Complexifiability::Inconclusive
    })
}
