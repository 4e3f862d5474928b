//! Fubini–Study and asymmetric distances, Hausdorff distances between full
//! sub-Grassmannians, triangle equality cases and Grassmannian geodesics.

use num_traits::{Float, FloatConst, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{grassmann_angle, vector_angles};
use crate::mat::{dot, norm, normalized, sub_vec, Mat};
use crate::principal::is_partially_orthogonal;
use crate::random::{random_subspace_within, seeded, uniform_usize};
use crate::scalar::{RealScalar, Scalar};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 42;

/// `d_FS(V, W)`: `Θ_{V,W}` on each `G_p(X)`, `π/2` across dimensions.
pub fn fubini_study<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>, cfg: &ToleranceConfig) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    if v.dim() != w.dim() {
        return Ok(S::Real::FRAC_PI_2());
    }
    grassmann_angle(v, w, cfg)
}

/// Asymmetric metric on the full Grassmannian, `d(V, W) = Θ_{V,W}`.
pub fn asymmetric_distance<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    grassmann_angle(v, w, cfg)
}

/// `h(G(V), G(W)) = Θ_{V,W}`.
pub fn directed_hausdorff<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    grassmann_angle(v, w, cfg)
}

/// `H(G(V), G(W)) = max(Θ_{V,W}, Θ_{W,V})`.
pub fn symmetric_hausdorff<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    Ok(grassmann_angle(v, w, cfg)?.max(grassmann_angle(w, v, cfg)?))
}

/// Monte-Carlo lower estimate of `h(G(V), G(W))` under `d_FS`: the maximum
/// over sampled nonzero `V′ ⊂ V` of the minimum over candidates `W′ ⊂ W`
/// (random ones of the same dimension, plus `P_W(V′)`).
pub fn sampled_directed_hausdorff<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    samples: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    let mut rng = seeded(seed);
    let mut worst = S::Real::zero();
    if v.is_zero() {
        return Ok(worst);
    }
    for _ in 0..samples {
        let k = uniform_usize(&mut rng, 1, v.dim());
        let vs = random_subspace_within(&mut rng, v, k);
        let mut best = fubini_study(&vs, &w.project_subspace(&vs, cfg)?, cfg)?;
        if k <= w.dim() {
            for _ in 0..4 {
                let ws = random_subspace_within(&mut rng, w, k);
                best = best.min(fubini_study(&vs, &ws, cfg)?);
            }
        }
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Which equality case of `Θ_{U,W} ≤ Θ_{U,V} + Θ_{V,W}` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TriangleTag {
    Strict,
    CaseI,
    CaseIi,
    CaseIii,
}

impl std::fmt::Display for TriangleTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Strict => "STRICT",
            Self::CaseI => "CASE_I",
            Self::CaseIi => "CASE_II",
            Self::CaseIii => "CASE_III",
        })
    }
}

/// `v = a·u + b·w` with `a, b > 0`, `⟨u, w⟩ ≥ 0`, and
/// `U = span(u) ⊕ A`, `V = span(v) ⊕ A ⊕ B`, `W = span(w) ⊕ A ⊕ B ⊕ C`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleWitness<S: Scalar> {
    pub u: Vec<S>,
    pub v: Vec<S>,
    pub w: Vec<S>,
    pub a: S::Real,
    pub b: S::Real,
    pub sub_a: Subspace<S>,
    pub sub_b: Subspace<S>,
    pub sub_c: Subspace<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleCase<S: Scalar> {
    pub tag: TriangleTag,
    /// `Θ_{U,W} − Θ_{U,V} − Θ_{V,W}` (never positive beyond rounding).
    pub gap: S::Real,
    pub witness: Option<TriangleWitness<S>>,
}

fn single_direction<S: Scalar>(x: &Subspace<S>, a: &Subspace<S>, cfg: &ToleranceConfig) -> Result<Option<Vec<S>>> {
    let rest = x.relative_complement(a, cfg)?;
    Ok((rest.dim() == 1).then(|| rest.basis().col(0).to_vec()))
}

/// Builds and checks the case (iii) configuration.
fn case_iii_witness<S: Scalar>(
    (su, sv, sw): (&Subspace<S>, &Subspace<S>, &Subspace<S>),
    angles: (S::Real, S::Real, S::Real),
    cfg: &ToleranceConfig,
) -> Result<Option<TriangleWitness<S>>> {
    let tol = cfg.tol::<S::Real>();
    let sub_a = su.intersect(sv, cfg)?.intersect(sw, cfg)?;
    let Some(u) = single_direction(su, &sub_a, cfg)? else {
        return Ok(None);
    };
    let Some(v) = normalized(&sv.project_vector(&u)?) else {
        return Ok(None);
    };
    let pw = sw.project_vector(&u)?;
    let w = if norm(&pw) > tol {
        normalized(&pw)
    } else {
        let c = dot(&u, &v);
        normalized(&sub_vec(&v, &u.iter().map(|&x| x * c).collect::<Vec<_>>()))
    };
    let Some(w) = w else { return Ok(None) };

    // v = a·u + b·w by least squares on [u w].
    let m = Mat::from_columns(u.len(), &[u.clone(), w.clone()])?;
    let g = m.adjoint_mul(&m);
    let rhs = m.adjoint_mul_vec(&v);
    let coef = match crate::linalg::Lu::new(&g).and_then(|lu| lu.solve_vec(&rhs)) {
        Ok(c) => c,
        Err(_) => return Ok(None),
    };
    let fit = m.mul_vec(&coef);
    if norm(&sub_vec(&fit, &v)) > tol {
        return Ok(None);
    }
    let (a, b) = (coef[0], coef[1]);
    let real_positive = |z: S| z.im().abs() <= tol && z.re() > tol;
    if !real_positive(a) || !real_positive(b) {
        return Ok(None);
    }
    let uw = dot(&u, &w);
    if uw.im().abs() > tol || uw.re() < -tol {
        return Ok(None);
    }

    let n = su.ambient_dim();
    let line = |x: &Vec<S>| Subspace::from_spanning(n, std::slice::from_ref(x), cfg);
    let (lu, lv, lw) = (line(&u)?, line(&v)?, line(&w)?);
    let p_vu = sv.project_subspace(su, cfg)?;
    let sub_b = sv.relative_complement(&p_vu, cfg)?;
    let k = lw.sum(&sub_a, cfg)?.sum(&sub_b, cfg)?;
    let sub_c = sw.relative_complement(&k, cfg)?;

    let plane = lu.sum(&lw, cfg)?;
    for x in [&sub_a, &sub_b, &sub_c] {
        if !x.is_orthogonal_to(&plane, cfg)? {
            return Ok(None);
        }
    }
    if !sub_a.is_orthogonal_to(&sub_b, cfg)?
        || !sub_a.is_orthogonal_to(&sub_c, cfg)?
        || !sub_b.is_orthogonal_to(&sub_c, cfg)?
    {
        return Ok(None);
    }
    let rebuilt_u = lu.sum(&sub_a, cfg)?;
    let rebuilt_v = lv.sum(&sub_a, cfg)?.sum(&sub_b, cfg)?;
    let rebuilt_w = k.sum(&sub_c, cfg)?;
    if !rebuilt_u.span_eq(su, cfg)? || !rebuilt_v.span_eq(sv, cfg)? || !rebuilt_w.span_eq(sw, cfg)? {
        return Ok(None);
    }
    let (t_uv, t_vw, t_uw) = angles;
    let close = |x: S::Real, y: S::Real| (x - y).abs() <= S::Real::lit(cfg.compare_tol.sqrt());
    let th = |x: &[S], y: &[S]| vector_angles(x, y, cfg).map(|r| r.theta);
    if !close(th(&u, &v)?, t_uv) || !close(th(&u, &w)?, t_uw) || !close(th(&v, &w)?, t_vw) {
        return Ok(None);
    }
    Ok(Some(TriangleWitness {
        u,
        v,
        w,
        a: a.re(),
        b: b.re(),
        sub_a,
        sub_b,
        sub_c,
    }))
}

/// Classifies `(U, V, W)` by the equality cases of the triangle inequality,
/// checked in the order (i), (ii), (iii).
pub fn classify_triangle_equality<S: Scalar>(
    u: &Subspace<S>,
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<TriangleCase<S>> {
    u.check_same_ambient(v)?;
    u.check_same_ambient(w)?;
    let t_uv = grassmann_angle(u, v, cfg)?;
    let t_vw = grassmann_angle(v, w, cfg)?;
    let t_uw = grassmann_angle(u, w, cfg)?;
    let gap = t_uw - t_uv - t_vw;
    let strict = |witness| TriangleCase {
        tag: TriangleTag::Strict,
        gap,
        witness,
    };
    if gap.abs() > cfg.tol() {
        return Ok(strict(None));
    }
    let tagged = |tag| TriangleCase {
        tag,
        gap,
        witness: None,
    };
    let u_po_w = is_partially_orthogonal(u, w, cfg)?;
    if v.contains(u, cfg)? && (u_po_w || w.contains(&v.relative_complement(u, cfg)?, cfg)?) {
        return Ok(tagged(TriangleTag::CaseI));
    }
    if w.contains(v, cfg)? && (u_po_w || v.contains(&w.project_subspace(u, cfg)?, cfg)?) {
        return Ok(tagged(TriangleTag::CaseIi));
    }
    match case_iii_witness((u, v, w), (t_uv, t_vw, t_uw), cfg)? {
        Some(wit) => Ok(TriangleCase {
            tag: TriangleTag::CaseIii,
            gap,
            witness: Some(wit),
        }),
        None => Ok(strict(None)),
    }
}

/// Unit directions `u ∈ U ⊖ (U∩W)` and `w′ ⊥ u` with `W = (U∩W) ⊕ span(u cos Θ + w′ sin Θ)`.
fn geodesic_frame<S: Scalar>(
    u: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<(Subspace<S>, Vec<S>, Vec<S>)> {
    u.check_same_ambient(w)?;
    if u.dim() != w.dim() {
        return Err(Error::Precondition(format!(
            "geodesic endpoints must have equal dimensions, got {} and {}",
            u.dim(),
            w.dim()
        )));
    }
    let common = u.intersect(w, cfg)?;
    if u.dim() == 0 || common.dim() + 1 != u.dim() {
        return Err(Error::Precondition(format!(
            "intersection has dimension {} but the geodesic stays in G_{}(X) only for dimension {}",
            common.dim(),
            u.dim(),
            u.dim().saturating_sub(1)
        )));
    }
    let du = single_direction(u, &common, cfg)?.ok_or_else(|| Error::Precondition("degenerate endpoint".into()))?;
    let dw = single_direction(w, &common, cfg)?.ok_or_else(|| Error::Precondition("degenerate endpoint".into()))?;
    let zeta = dot(&du, &dw);
    let m = zeta.modulus();
    let dw: Vec<S> = if m > cfg.tol() {
        let unit = zeta.scale(m.recip());
        dw.iter().map(|&x| x * unit.conj()).collect()
    } else {
        dw
    };
    let c = dot(&du, &dw);
    let perp = sub_vec(&dw, &du.iter().map(|&x| x * c).collect::<Vec<_>>());
    let perp = normalized(&perp).ok_or_else(|| Error::Precondition("endpoints coincide".into()))?;
    Ok((common, du, perp))
}

/// `V(t, φ) = (U∩W) ⊕ span(u cos t + e^{iφ} w′ sin t)` with `u`, `w′`
/// orthonormal, so `t` is arc length and `V(Θ_{U,W}, 0) = W`. Over ℝ the
/// phase must be 0 or π.
pub fn geodesic_point<S: Scalar>(
    u: &Subspace<S>,
    w: &Subspace<S>,
    t: S::Real,
    phase: Option<S::Real>,
    cfg: &ToleranceConfig,
) -> Result<Subspace<S>> {
    let (common, du, perp) = geodesic_frame(u, w, cfg)?;
    let z = S::from_phase(phase.unwrap_or(S::Real::zero()));
    let (c, s) = (t.cos(), t.sin());
    let dir: Vec<S> = du
        .iter()
        .zip(&perp)
        .map(|(&a, &b)| a.scale(c) + z * b.scale(s))
        .collect();
    let line = Subspace::from_spanning(u.ambient_dim(), &[dir], cfg)?;
    common.sum(&line, cfg)
}
