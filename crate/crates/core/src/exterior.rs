//! Dense Grassmann algebra `ΛX` over `𝔽ⁿ`.
//!
//! A multivector stores `2ⁿ` coefficients indexed by bit-masks: bit `k`
//! (0-based) stands for the basis vector `e_{k+1}`, and the mask's popcount is
//! the grade. Coordinate blades `e_I` are orthonormal.

use num_traits::{Float, Zero};

use crate::error::{ensure_dim, Error, Result};
use crate::mat::Mat;
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;
use crate::tolerance::{clamp_unit, ToleranceConfig};

pub const REAL_CAP: usize = 12;
pub const COMPLEX_CAP: usize = 10;

/// Largest ambient dimension the dense representation accepts for `S`.
pub fn cap<S: Scalar>() -> usize {
    match S::FIELD {
        Field::Real => REAL_CAP,
        Field::Complex => COMPLEX_CAP,
    }
}

fn check_cap<S: Scalar>(n: usize) -> Result<()> {
    let cap = cap::<S>();
    if n > cap {
        Err(Error::CapExceeded { dim: n, cap })
    } else {
        Ok(())
    }
}

/// Strictly increasing 1-based indices `(i₁ < … < i_p)` drawn from `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    indices: Vec<usize>,
    q: usize,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>, q: usize) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&i| (1..=q).contains(&i));
        if !increasing || !in_range {
            return Err(Error::Precondition(format!(
                "multi-index {indices:?} is not strictly increasing within 1..={q}"
            )));
        }
        Ok(Self { indices, q })
    }

    /// All multi-indices of grade `p` over `1..=q`, in lexicographic order.
    pub fn all(p: usize, q: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p);
        fn rec(start: usize, p: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if cur.len() == p {
                out.push(MultiIndex {
                    indices: cur.clone(),
                    q,
                });
                return;
            }
            for i in start..=q {
                if q - i + 1 < p - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, p, q, cur, out);
                cur.pop();
            }
        }
        rec(1, p, q, &mut cur, &mut out);
        out
    }

    pub fn from_mask(mask: usize, q: usize) -> Self {
        let indices = (0..q).filter(|&k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        Self { indices, q }
    }

    pub fn mask(&self) -> usize {
        self.indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn grade(&self) -> usize {
        self.indices.len()
    }

    pub fn upper(&self) -> usize {
        self.q
    }

    /// `‖I‖ = i₁ + … + i_p`.
    pub fn norm(&self) -> usize {
        self.indices.iter().sum()
    }

    /// Sorted complement `I′` in `1..=q`.
    pub fn complement(&self) -> MultiIndex {
        let indices = (1..=self.q).filter(|i| !self.indices.contains(i)).collect();
        MultiIndex { indices, q: self.q }
    }

    /// `ε_I = (−1)^{‖I‖ + p(p+1)/2}`.
    pub fn epsilon(&self) -> i8 {
        let p = self.grade();
        if (self.norm() + p * (p + 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Sign of the permutation sorting `seq` (distinct entries), by inversion count.
pub fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of `e_A ∧ e_B` relative to `e_{A∪B}` for disjoint masks: the parity of
/// pairs `a ∈ A`, `b ∈ B` with `a > b`.
#[inline]
pub fn wedge_sign(a: usize, b: usize) -> i8 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let k = rest.trailing_zeros();
        swaps += (a >> (k + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[inline]
fn signed<S: Scalar>(s: i8, x: S) -> S {
    if s < 0 {
        -x
    } else {
        x
    }
}

/// Element of `ΛX` with dense coefficients over coordinate blades.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    n: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(n: usize) -> Result<Self> {
        check_cap::<S>(n)?;
        Ok(Self {
            n,
            coeffs: vec![S::zero(); 1 << n],
        })
    }

    pub fn scalar(n: usize, s: S) -> Result<Self> {
        let mut m = Self::zero(n)?;
        m.coeffs[0] = s;
        Ok(m)
    }

    /// Coordinate blade `e_I` for the bit-mask `mask`.
    pub fn basis_blade(n: usize, mask: usize) -> Result<Self> {
        let mut m = Self::zero(n)?;
        if mask >= m.coeffs.len() {
            return Err(Error::Precondition(format!("mask {mask:#b} outside Λ𝔽^{n}")));
        }
        m.coeffs[mask] = S::one();
        Ok(m)
    }

    pub fn vector(v: &[S]) -> Result<Self> {
        let mut m = Self::zero(v.len())?;
        for (k, &x) in v.iter().enumerate() {
            m.coeffs[1 << k] = x;
        }
        Ok(m)
    }

    pub fn from_coefficients(n: usize, coeffs: Vec<S>) -> Result<Self> {
        check_cap::<S>(n)?;
        ensure_dim(1 << n, coeffs.len())?;
        Ok(Self { n, coeffs })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> S {
        self.coeffs[mask]
    }

    pub fn coeff_at(&self, index: &MultiIndex) -> S {
        self.coeffs[index.mask()]
    }

    pub fn set_coeff(&mut self, mask: usize, value: S) {
        self.coeffs[mask] = value;
    }

    fn check(&self, other: &Self) -> Result<()> {
        ensure_dim(self.n, other.n)
    }

    pub fn grade_part(&self, p: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| if m.count_ones() as usize == p { c } else { S::zero() })
            .collect();
        Self { n: self.n, coeffs }
    }

    /// Grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self
            .nonzero()
            .map(|(m, _)| m.count_ones() as usize)
            .collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, S)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, &c)| (m, c))
    }

    pub fn norm_sqr(&self) -> S::Real {
        self.coeffs
            .iter()
            .fold(S::Real::zero(), |a, &c| a + c.modulus_sqr())
    }

    pub fn norm(&self) -> S::Real {
        crate::mat::norm(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a + b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a - b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn scale(&self, s: S) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// Exterior product `self ∧ other`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = vec![S::zero(); self.coeffs.len()];
        let rhs: Vec<(usize, S)> = other.nonzero().collect();
        for (a, x) in self.nonzero() {
            for &(b, y) in &rhs {
                if a & b != 0 {
                    continue;
                }
                out[a | b] = out[a | b] + signed(wedge_sign(a, b), x * y);
            }
        }
        Ok(Self {
            n: self.n,
            coeffs: out,
        })
    }

    /// `⟨self, other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<S> {
        self.check(other)?;
        Ok(crate::mat::dot(&self.coeffs, &other.coeffs))
    }

    /// Left contraction `self ⌋ other`, expanded over coordinate blades:
    /// `e_A ⌋ e_B = ε_I e_{B∖A}` when `A ⊂ B`, where `I` lists the positions of
    /// `A` inside `B`.
    pub fn contract(&self, other: &Self) -> Result<Self> {
        contract_with_sign(self, other, MultiIndex::epsilon)
    }

    /// Left contraction computed from its defining adjointness: the
    /// coefficient on `e_M` is `⟨self ∧ e_M, other⟩`.
    pub fn contract_adjoint(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n)?;
        for m in 0..self.coeffs.len() {
            let em = Self::basis_blade(self.n, m)?;
            out.coeffs[m] = self.wedge(&em)?.inner(other)?;
        }
        Ok(out)
    }
}

/// Contraction with a pluggable sign rule for the coordinate expansion.
pub(crate) fn contract_with_sign<S: Scalar>(
    nu: &Multivector<S>,
    omega: &Multivector<S>,
    sign: fn(&MultiIndex) -> i8,
) -> Result<Multivector<S>> {
    nu.check(omega)?;
    let mut out = vec![S::zero(); omega.coeffs.len()];
    let left: Vec<(usize, S)> = nu.nonzero().collect();
    for (b, y) in omega.nonzero() {
        let q = b.count_ones() as usize;
        let positions = mask_positions(b);
        for &(a, x) in &left {
            if a & !b != 0 {
                continue;
            }
            let idx: Vec<usize> = positions
                .iter()
                .enumerate()
                .filter(|(_, &bit)| a >> bit & 1 == 1)
                .map(|(pos, _)| pos + 1)
                .collect();
            let i = MultiIndex { indices: idx, q };
            let t = b & !a;
            out[t] = out[t] + signed(sign(&i), x.conj() * y);
        }
    }
    Ok(Multivector {
        n: omega.n,
        coeffs: out,
    })
}

fn mask_positions(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|&k| mask >> k & 1 == 1)
        .collect()
}

/// `w₁ ∧ … ∧ w_k`.
pub fn wedge_vectors<S: Scalar>(n: usize, vectors: &[&[S]]) -> Result<Multivector<S>> {
    let mut acc = Multivector::scalar(n, S::one())?;
    for v in vectors {
        ensure_dim(n, v.len())?;
        acc = acc.wedge(&Multivector::vector(v)?)?;
    }
    Ok(acc)
}

/// Coordinate blade `ω_I = w_{i₁} ∧ … ∧ w_{i_p}` of a frame.
pub fn coordinate_blade<S: Scalar>(
    n: usize,
    frame: &[Vec<S>],
    index: &MultiIndex,
) -> Result<Multivector<S>> {
    let vs: Vec<&[S]> = index.indices().iter().map(|&i| frame[i - 1].as_slice()).collect();
    wedge_vectors(n, &vs)
}

/// `ν ⌋ ω` for `ω = w₁ ∧ … ∧ w_q` given by its frame, expanded as
/// `Σ_I ε_I ⟨ν, ω_I⟩ ω_{I′}` over grade-`p` multi-indices; `ν` homogeneous of
/// grade `p`.
pub fn contract_by_frame<S: Scalar>(
    nu: &Multivector<S>,
    p: usize,
    frame: &[Vec<S>],
) -> Result<Multivector<S>> {
    let n = nu.ambient_dim();
    let q = frame.len();
    let mut out = Multivector::zero(n)?;
    if p > q {
        return Ok(out);
    }
    for i in MultiIndex::all(p, q) {
        let wi = coordinate_blade(n, frame, &i)?;
        let c = nu.inner(&wi)?;
        if c.is_zero() {
            continue;
        }
        let wc = coordinate_blade(n, frame, &i.complement())?;
        out = out.add(&wc.scale(signed(i.epsilon(), c)))?;
    }
    Ok(out)
}

/// A simple multivector representing a subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Blade<S: Scalar> {
    mv: Multivector<S>,
    grade: usize,
}

impl<S: Scalar> Blade<S> {
    pub fn from_vectors(n: usize, vectors: &[Vec<S>]) -> Result<Self> {
        let vs: Vec<&[S]> = vectors.iter().map(Vec::as_slice).collect();
        Ok(Self {
            mv: wedge_vectors(n, &vs)?,
            grade: vectors.len(),
        })
    }

    pub fn multivector(&self) -> &Multivector<S> {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector<S> {
        self.mv
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn norm(&self) -> S::Real {
        self.mv.norm()
    }

    /// The subspace `{x : x ∧ ν = 0}`, recovered as the span of the
    /// contractions `e_J ⌋ ν` over grade-`(p−1)` coordinate blades.
    pub fn subspace(&self, cfg: &ToleranceConfig) -> Result<Subspace<S>> {
        let n = self.mv.ambient_dim();
        if self.grade == 0 {
            return Ok(Subspace::zero(n));
        }
        let mut vectors = Vec::new();
        for j in MultiIndex::all(self.grade - 1, n) {
            let ej = Multivector::basis_blade(n, j.mask())?;
            let c = ej.contract(&self.mv)?;
            let v: Vec<S> = (0..n).map(|k| c.coeff(1 << k)).collect();
            if v.iter().any(|x| !x.is_zero()) {
                vectors.push(v);
            }
        }
        Subspace::from_spanning(n, &vectors, cfg)
    }
}

/// Unit blade `b₁ ∧ … ∧ b_p` of an orthonormal basis of `V`; `{0}` maps to the
/// scalar 1.
pub fn blade_of<S: Scalar>(v: &Subspace<S>) -> Result<Blade<S>> {
    check_cap::<S>(v.ambient_dim())?;
    Blade::from_vectors(v.ambient_dim(), &v.basis().to_columns())
}

/// Induced projection `ΛP` onto `ΛW`, extended linearly from
/// `P(e_{i₁} ∧ … ∧ e_{i_p}) = Pe_{i₁} ∧ … ∧ Pe_{i_p}`.
pub fn project_multivector<S: Scalar>(
    w: &Subspace<S>,
    x: &Multivector<S>,
) -> Result<Multivector<S>> {
    let n = x.ambient_dim();
    ensure_dim(w.ambient_dim(), n)?;
    let p: Mat<S> = w.projector();
    let mut out = Multivector::zero(n)?;
    for (mask, c) in x.nonzero() {
        let cols: Vec<&[S]> = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| p.col(k)).collect();
        let img = wedge_vectors(n, &cols)?;
        out = out.add(&img.scale(c))?;
    }
    Ok(out)
}

/// `cos Θ_{V,W} = ‖P ν‖` for the unit blade `ν` of `V`.
pub fn oracle_cos_grassmann<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    let nu = blade_of(v)?.into_multivector();
    Ok(project_multivector(w, &nu)?.norm())
}

/// `Θ_{V,W}` from `‖Pν‖ = cos Θ`, with the sine read off `‖ν − Pν‖`.
pub fn oracle_grassmann_angle<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    let nu = blade_of(v)?.into_multivector();
    let pnu = project_multivector(w, &nu)?;
    let c = clamp_unit(pnu.norm());
    let s = clamp_unit(nu.sub(&pnu)?.norm());
    Ok(s.atan2(c))
}

/// `cos Θ⊥_{V,W} = ‖ν ∧ ω‖` for unit blades.
pub fn oracle_cos_complementary<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    let nu = blade_of(v)?.into_multivector();
    let omega = blade_of(w)?.into_multivector();
    Ok(nu.wedge(&omega)?.norm())
}

/// `Θ⊥_{V,W}` from `‖ν ∧ ω‖ = cos Θ⊥`, with the sine read off
/// `‖ν − ΛP_{W⊥} ν‖`.
pub fn oracle_complementary_angle<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
) -> Result<S::Real> {
    let c = clamp_unit(oracle_cos_complementary(v, w)?);
    let nu = blade_of(v)?.into_multivector();
    let pnu = project_multivector(&w.complement(), &nu)?;
    let s = clamp_unit(nu.sub(&pnu)?.norm());
    Ok(s.atan2(c))
}

/// `cos Θ_{V,W} = ‖ν ⌋ ω‖` for unit blades.
pub fn oracle_cos_contraction<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<S::Real> {
    oracle_cos_contraction_with(v, w, MultiIndex::epsilon)
}

pub(crate) fn oracle_cos_contraction_with<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    sign: fn(&MultiIndex) -> i8,
) -> Result<S::Real> {
    v.check_same_ambient(w)?;
    let nu = blade_of(v)?.into_multivector();
    let omega = blade_of(w)?.into_multivector();
    Ok(contract_with_sign(&nu, &omega, sign)?.norm())
}

pub fn oracle_contraction_angle<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<S::Real> {
    Ok(clamp_unit(oracle_cos_contraction(v, w)?).acos())
}
