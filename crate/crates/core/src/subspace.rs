//! Subspaces of `𝔽ⁿ` stored by an orthonormal basis.

use num_complex::Complex;
use num_traits::{Float, FloatConst, One, Zero};

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{orthonormal_complement, orthonormalize};
use crate::mat::{norm, sub_vec, Mat};
use crate::principal::principal_decomposition;
use crate::scalar::{Field, RealScalar, Scalar};
use crate::tolerance::ToleranceConfig;

/// A linear subspace of `𝔽ⁿ`, held as an `n × p` matrix with orthonormal
/// columns. The zero subspace has `p = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<S: Scalar> {
    basis: Mat<S>,
}

impl<S: Scalar> Subspace<S> {
    /// Span of `vectors`, each of length `ambient_dim`. The dimension is the
    /// numerical rank of the list.
    pub fn from_spanning(
        ambient_dim: usize,
        vectors: &[Vec<S>],
        cfg: &ToleranceConfig,
    ) -> Result<Self> {
        let m = Mat::from_columns(ambient_dim, vectors)?;
        Ok(Self::from_matrix(&m, cfg))
    }

    /// Span of the columns of `m`.
    pub fn from_matrix(m: &Mat<S>, cfg: &ToleranceConfig) -> Self {
        let (q, _) = orthonormalize(m, cfg);
        Self { basis: q }
    }

    /// Wraps a matrix that already has orthonormal columns.
    pub fn from_orthonormal(basis: Mat<S>, cfg: &ToleranceConfig) -> Result<Self> {
        if basis.ncols() > 0 && basis.orthonormality_defect() > cfg.tol() {
            return Err(Error::Precondition("basis columns are not orthonormal".into()));
        }
        Ok(Self { basis })
    }

    pub(crate) fn from_orthonormal_unchecked(basis: Mat<S>) -> Self {
        Self { basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            basis: Mat::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            basis: Mat::identity(ambient_dim),
        }
    }

    /// Span of the coordinate vectors `e_i`, `i ∈ indices` (0-based).
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let basis = Mat::from_fn(ambient_dim, indices.len(), |i, j| {
            if i == indices[j] {
                S::one()
            } else {
                S::zero()
            }
        });
        Self { basis }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    #[inline]
    pub fn field(&self) -> Field {
        S::FIELD
    }

    #[inline]
    pub fn basis(&self) -> &Mat<S> {
        &self.basis
    }

    pub(crate) fn check_same_ambient(&self, other: &Self) -> Result<()> {
        ensure_dim(self.ambient_dim(), other.ambient_dim())
    }

    /// Orthogonal projection matrix `Q·Q*`.
    pub fn projector(&self) -> Mat<S> {
        self.basis.mul(&self.basis.adjoint())
    }

    /// Orthogonal projection of `v` onto this subspace, `Q(Q*v)`.
    pub fn project_vector(&self, v: &[S]) -> Result<Vec<S>> {
        ensure_dim(self.ambient_dim(), v.len())?;
        Ok(self.basis.mul_vec(&self.basis.adjoint_mul_vec(v)))
    }

    /// Component of `v` orthogonal to this subspace.
    pub fn reject_vector(&self, v: &[S]) -> Result<Vec<S>> {
        let p = self.project_vector(v)?;
        Ok(sub_vec(v, &p))
    }

    /// `P(V)`: the image of `v` under orthogonal projection onto `self`.
    pub fn project_subspace(&self, v: &Subspace<S>, cfg: &ToleranceConfig) -> Result<Self> {
        self.check_same_ambient(v)?;
        if v.is_zero() || self.is_zero() {
            return Ok(Self::zero(self.ambient_dim()));
        }
        let pd = principal_decomposition(v, self, cfg)?;
        let limit = S::Real::FRAC_PI_2() - cfg.tol::<S::Real>();
        let keep: Vec<usize> = (0..pd.angles.len())
            .filter(|&i| pd.angles[i] < limit)
            .collect();
        Ok(Self {
            basis: pd.right_basis.select_columns(&keep),
        })
    }

    /// Orthogonal complement `V⊥`.
    pub fn complement(&self) -> Self {
        Self {
            basis: orthonormal_complement(&self.basis),
        }
    }

    /// `V ∩ W`, spanned by the left principal vectors whose angle is at most
    /// `compare_tol`.
    pub fn intersect(&self, w: &Subspace<S>, cfg: &ToleranceConfig) -> Result<Self> {
        self.check_same_ambient(w)?;
        if self.is_zero() || w.is_zero() {
            return Ok(Self::zero(self.ambient_dim()));
        }
        let pd = principal_decomposition(self, w, cfg)?;
        let tol = cfg.tol::<S::Real>();
        let r = pd.angles.iter().take_while(|&&a| a <= tol).count();
        Ok(Self {
            basis: pd.left_basis.first_columns(r),
        })
    }

    /// `V + W`.
    pub fn sum(&self, w: &Subspace<S>, cfg: &ToleranceConfig) -> Result<Self> {
        self.check_same_ambient(w)?;
        Ok(Self::from_matrix(&self.basis.hcat(&w.basis), cfg))
    }

    /// `V ⊖ A` for a subspace `A ⊂ V`: the orthogonal complement of `A` inside `V`.
    /// Directions of `V` within `compare_tol` of `A` are dropped.
    pub fn relative_complement(&self, a: &Subspace<S>, cfg: &ToleranceConfig) -> Result<Self> {
        self.check_same_ambient(a)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let cols: Vec<Vec<S>> = self
            .basis
            .columns()
            .map(|c| a.reject_vector(c))
            .collect::<Result<_>>()?;
        let r = Mat::from_columns(self.ambient_dim(), &cols)?;
        let d = crate::linalg::svd(&r);
        let tol = cfg.tol::<S::Real>();
        let k = d.sigma.iter().take_while(|&&s| s > tol).count();
        Ok(Self {
            basis: d.u.first_columns(k),
        })
    }

    /// Largest distance from a unit vector of `v` to `self`.
    pub fn containment_residual(&self, v: &Subspace<S>) -> Result<S::Real> {
        self.check_same_ambient(v)?;
        let mut worst = S::Real::zero();
        if v.is_zero() {
            return Ok(worst);
        }
        // ‖(I − QQ*)B‖₂ via the largest singular value.
        let cols: Vec<Vec<S>> = v
            .basis
            .columns()
            .map(|c| self.reject_vector(c))
            .collect::<Result<_>>()?;
        let r = Mat::from_columns(self.ambient_dim(), &cols)?;
        let s = crate::linalg::svd(&r);
        if let Some(&top) = s.sigma.first() {
            worst = top;
        }
        Ok(worst)
    }

    /// `v ⊂ self` to `compare_tol`.
    pub fn contains(&self, v: &Subspace<S>, cfg: &ToleranceConfig) -> Result<bool> {
        Ok(self.containment_residual(v)? <= cfg.tol())
    }

    pub fn contains_vector(&self, x: &[S], cfg: &ToleranceConfig) -> Result<bool> {
        let r = self.reject_vector(x)?;
        Ok(norm(&r) <= cfg.tol::<S::Real>() * norm(x).max(S::Real::one()))
    }

    /// Equality of spans to `compare_tol`.
    pub fn span_eq(&self, other: &Subspace<S>, cfg: &ToleranceConfig) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.contains(other, cfg)?)
    }

    /// `V ⊥ W`: every basis pair is orthogonal to `compare_tol`.
    pub fn is_orthogonal_to(&self, w: &Subspace<S>, cfg: &ToleranceConfig) -> Result<bool> {
        self.check_same_ambient(w)?;
        let g = self.basis.adjoint_mul(&w.basis);
        let tol = cfg.tol::<S::Real>();
        Ok((0..g.nrows()).all(|i| (0..g.ncols()).all(|j| g[(i, j)].modulus() <= tol)))
    }

    /// Image under a unitary (or orthogonal) map `t`.
    pub fn transform(&self, t: &Mat<S>) -> Result<Self> {
        ensure_dim(t.ncols(), self.ambient_dim())?;
        ensure_dim(t.nrows(), self.ambient_dim())?;
        Ok(Self {
            basis: t.mul(&self.basis),
        })
    }

    /// Subspace spanned by the given basis columns (0-based).
    pub fn coordinate_subspace_of_basis(basis: &Mat<S>, indices: &[usize]) -> Self {
        Self {
            basis: basis.select_columns(indices),
        }
    }
}

/// Realification `ℂⁿ → ℝ²ⁿ` in the interleaved layout `(re₁, im₁, …, reₙ, imₙ)`.
pub fn realify_vector<R: RealScalar>(z: &[Complex<R>]) -> Vec<R> {
    let mut out = Vec::with_capacity(2 * z.len());
    for c in z {
        out.push(c.re);
        out.push(c.im);
    }
    out
}

/// Inverse of [`realify_vector`].
pub fn complexify_vector<R: RealScalar>(x: &[R]) -> Vec<Complex<R>> {
    x.chunks_exact(2).map(|p| Complex::new(p[0], p[1])).collect()
}

/// Matrix of multiplication by `i` in the interleaved real layout.
pub fn complex_structure<R: RealScalar>(n: usize) -> Mat<R> {
    let mut j = Mat::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(2 * k + 1, 2 * k)] = R::one();
        j[(2 * k, 2 * k + 1)] = -R::one();
    }
    j
}

impl<R: RealScalar> Subspace<Complex<R>> {
    /// The underlying real subspace `V_ℝ ⊂ ℝ²ⁿ`, with basis
    /// `{realify(b_j), realify(i·b_j)}`.
    pub fn realify(&self) -> Subspace<R> {
        let n = self.ambient_dim();
        let i = Complex::new(R::zero(), R::one());
        let mut basis = Mat::zeros(2 * n, 0);
        for b in self.basis.columns() {
            basis.push_column(&realify_vector(b));
            let ib: Vec<Complex<R>> = b.iter().map(|&z| z * i).collect();
            basis.push_column(&realify_vector(&ib));
        }
        Subspace { basis }
    }
}

/// Whether `realify` applies: fails for real subspaces.
pub fn require_complex<S: Scalar>() -> Result<()> {
    if S::FIELD == Field::Complex {
        Ok(())
    } else {
        Err(Error::WrongField {
            expected: Field::Complex,
        })
    }
}

pub fn require_real<S: Scalar>() -> Result<()> {
    if S::FIELD == Field::Real {
        Ok(())
    } else {
        Err(Error::WrongField {
            expected: Field::Real,
        })
    }
}
