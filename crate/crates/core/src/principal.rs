//! Principal angles and principal bases.

use num_traits::{Float, FloatConst, One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{orthonormal_complement, svd};
use crate::mat::{norm, sub_vec, Mat};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

/// Principal angles `θ₁ ≤ … ≤ θ_m` (`m = min(p, q)`) of `(V, W)` with
/// principal bases `e_i` of `V` and `f_j` of `W` satisfying
/// `⟨e_i, f_j⟩ = δ_ij cos θ_i`.
///
/// Columns past `m` complete each basis with an arbitrary orthonormal
/// complement.
#[derive(Debug, Clone)]
pub struct PrincipalDecomposition<S: Scalar> {
    pub angles: Vec<S::Real>,
    pub cosines: Vec<S::Real>,
    /// Sines, measured as `‖e_i − P_W e_i‖` rather than `√(1 − cos²)`.
    pub sines: Vec<S::Real>,
    pub left_basis: Mat<S>,
    pub right_basis: Mat<S>,
}

impl<S: Scalar> PrincipalDecomposition<S> {
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn left_vector(&self, i: usize) -> &[S] {
        self.left_basis.col(i)
    }

    pub fn right_vector(&self, i: usize) -> &[S] {
        self.right_basis.col(i)
    }
}

pub fn principal_decomposition<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    _cfg: &ToleranceConfig,
) -> Result<PrincipalDecomposition<S>> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    let qv = v.basis();
    let qw = w.basis();
    let m = qw.adjoint_mul(qv);
    let d = svd(&m);
    let k = d.sigma.len();
    let one = S::Real::one();

    let e = qv.mul(&d.v);
    let mut cosines = Vec::with_capacity(k);
    let mut sines = Vec::with_capacity(k);
    for i in 0..k {
        cosines.push(d.sigma[i].min(one));
        let ei = e.col(i);
        let r = sub_vec(ei, &w.project_vector(ei)?);
        sines.push(norm(&r).min(one));
    }
    let angles: Vec<S::Real> = (0..k).map(|i| sines[i].atan2(cosines[i])).collect();

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        angles[a]
            .partial_cmp(&angles[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let angles = order.iter().map(|&i| angles[i]).collect();
    let cosines = order.iter().map(|&i| cosines[i]).collect();
    let sines = order.iter().map(|&i| sines[i]).collect();
    let y = d.v.select_columns(&order);
    let u = d.u.select_columns(&order);

    let left_basis = qv.mul(&y.hcat(&orthonormal_complement(&y)));
    let right_basis = qw.mul(&u.hcat(&orthonormal_complement(&u)));
    Ok(PrincipalDecomposition {
        angles,
        cosines,
        sines,
        left_basis,
        right_basis,
    })
}

pub(crate) type Factors<R> = (Vec<R>, Vec<R>);

/// Cosines and sines of the principal angles; empty when either side is `{0}`.
pub(crate) fn principal_factors<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<Factors<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Ok((Vec::new(), Vec::new()));
    }
    let pd = principal_decomposition(v, w, cfg)?;
    Ok((pd.cosines, pd.sines))
}

/// Principal angles of `(V, W)`; empty when either side is `{0}`.
pub fn principal_angles<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<Vec<S::Real>> {
    v.check_same_ambient(w)?;
    if v.is_zero() || w.is_zero() {
        return Ok(Vec::new());
    }
    Ok(principal_decomposition(v, w, cfg)?.angles)
}

/// `V ⊥̃ W`: some nonzero vector of `V` is orthogonal to all of `W`.
pub fn is_partially_orthogonal<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<bool> {
    v.check_same_ambient(w)?;
    if v.is_zero() {
        return Ok(false);
    }
    if v.dim() > w.dim() {
        return Ok(true);
    }
    let pd = principal_decomposition(v, w, cfg)?;
    let top = *pd.angles.last().expect("nonzero subspaces");
    Ok(top >= S::Real::FRAC_PI_2() - cfg.tol())
}

/// A family of pairwise disjoint subspaces, `V₁ ⊕ … ⊕ V_k`.
#[derive(Debug, Clone)]
pub struct Partition<S: Scalar> {
    parts: Vec<Subspace<S>>,
}

impl<S: Scalar> Partition<S> {
    /// Fails unless the parts share an ambient space and are independent.
    pub fn new(parts: Vec<Subspace<S>>, cfg: &ToleranceConfig) -> Result<Self> {
        let p = Self { parts };
        let total: usize = p.parts.iter().map(Subspace::dim).sum();
        if p.sum(cfg)?.dim() != total {
            return Err(Error::Precondition("partition parts are not disjoint".into()));
        }
        Ok(p)
    }

    pub fn parts(&self) -> &[Subspace<S>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self, cfg: &ToleranceConfig) -> Result<Subspace<S>> {
        let Some(first) = self.parts.first() else {
            return Err(Error::Precondition("empty partition".into()));
        };
        let mut acc = first.clone();
        for p in &self.parts[1..] {
            acc = acc.sum(p, cfg)?;
        }
        Ok(acc)
    }

    /// Pairwise orthogonality of the parts.
    pub fn is_orthogonal(&self, cfg: &ToleranceConfig) -> Result<bool> {
        for i in 0..self.parts.len() {
            for j in (i + 1)..self.parts.len() {
                if !self.parts[i].is_orthogonal_to(&self.parts[j], cfg)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Fails unless the parts sum to `v`.
    pub(crate) fn ensure_sums_to(&self, v: &Subspace<S>, cfg: &ToleranceConfig) -> Result<()> {
        let total: usize = self.parts.iter().map(Subspace::dim).sum();
        if total != v.dim() || !self.sum(cfg)?.span_eq(v, cfg)? {
            return Err(Error::Precondition("partition does not sum to V".into()));
        }
        Ok(())
    }
}

/// Whether `V = ⊕ V_i` is a principal partition with respect to `W`, decided
/// by pairwise orthogonality of the projections `P_W(V_i)`.
pub fn is_principal_partition<S: Scalar>(
    v: &Subspace<S>,
    parts: &Partition<S>,
    w: &Subspace<S>,
    cfg: &ToleranceConfig,
) -> Result<bool> {
    v.check_same_ambient(w)?;
    if w.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    parts.ensure_sums_to(v, cfg)?;
    let qw = w.basis();
    let projected: Vec<Mat<S>> = parts
        .parts()
        .iter()
        .map(|p| qw.adjoint_mul(p.basis()))
        .collect();
    let tol = cfg.tol::<S::Real>();
    for i in 0..projected.len() {
        for j in (i + 1)..projected.len() {
            let g = projected[i].adjoint_mul(&projected[j]);
            let worst = max_modulus(&g);
            if worst > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn max_modulus<S: Scalar>(m: &Mat<S>) -> S::Real {
    let mut worst = S::Real::zero();
    for c in m.columns() {
        for &x in c {
            worst = worst.max(x.modulus());
        }
    }
    worst
}

/// Splits `V` along its principal basis with respect to `W`; `groups` lists
/// the principal-vector indices (0-based) that go into each part.
pub fn principal_split<S: Scalar>(
    v: &Subspace<S>,
    w: &Subspace<S>,
    groups: &[Vec<usize>],
    cfg: &ToleranceConfig,
) -> Result<Partition<S>> {
    let pd = principal_decomposition(v, w, cfg)?;
    let parts = groups
        .iter()
        .map(|g| Subspace::coordinate_subspace_of_basis(&pd.left_basis, g))
        .collect();
    Partition::new(parts, cfg)
}

#[cfg(test)]
mod tests {
    use crate::scalar::RealScalar;
    use super::*;
    use crate::random::{random_subspace, random_subspace_within, random_unitary, seeded};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    pub(crate) fn real_22() -> (Subspace<f64>, Subspace<f64>) {
        let v = Subspace::from_spanning(
            4,
            &[vec![1.0, 0.0, 1.0, 0.0], vec![0.0, 1.0, 0.0, 1.0]],
            &cfg(),
        )
        .unwrap();
        let w = Subspace::coordinate(4, &[0, 1]);
        (v, w)
    }

    #[test]
    fn identical_subspaces_have_zero_angles() {
        let mut rng = seeded(1);
        let v: Subspace<Complex64> = random_subspace(&mut rng, 5, 2);
        let a = principal_angles(&v, &v, &cfg()).unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.iter().all(|&x| x.abs() < 1e-12));
    }

    #[test]
    fn real_example_angles() {
        let (v, w) = real_22();
        let a = principal_angles(&v, &w, &cfg()).unwrap();
        assert!((a[0] - FRAC_PI_4).abs() < 1e-12 && (a[1] - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn complex_example_angles() {
        let s2 = std::f64::consts::FRAC_1_SQRT_2;
        let s3 = 3f64.sqrt();
        let v = Subspace::from_spanning(
            4,
            &[
                vec![c(s2, 0.0), c(s2, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.5), c(s3 / 2.0, 0.0)],
            ],
            &cfg(),
        )
        .unwrap();
        let w = Subspace::from_spanning(
            4,
            &[
                vec![c(0.5, 0.5), c(0.5, -0.5), c(0.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            ],
            &cfg(),
        )
        .unwrap();
        let a = principal_angles(&v, &w, &cfg()).unwrap();
        assert!((a[0] - FRAC_PI_4).abs() < 1e-12);
        assert!((a[1] - FRAC_PI_3).abs() < 1e-12);
    }

    #[test]
    fn zero_subspace_is_rejected() {
        let z = Subspace::<f64>::zero(3);
        let w = Subspace::<f64>::full(3);
        assert!(matches!(
            principal_decomposition(&z, &w, &cfg()),
            Err(Error::ZeroSubspace)
        ));
        assert!(principal_angles(&z, &w, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn partial_orthogonality_examples() {
        let c = cfg();
        let mut rng = seeded(2);
        let plane: Subspace<f64> = random_subspace(&mut rng, 3, 2);
        let line: Subspace<f64> = random_subspace(&mut rng, 3, 1);
        assert!(is_partially_orthogonal(&plane, &line, &c).unwrap());
        assert!(!is_partially_orthogonal(&plane, &plane, &c).unwrap());
        assert!(!is_partially_orthogonal(&Subspace::zero(3), &line, &c).unwrap());

        let v = Subspace::<f64>::coordinate(5, &[0, 1, 3]);
        let s3 = 3f64.sqrt() / 2.0;
        let w = Subspace::from_spanning(
            5,
            &[vec![1.0, 0.0, 0.0, 0.0, 0.0], vec![0.0, s3, 0.5, 0.0, 0.0]],
            &c,
        )
        .unwrap();
        assert!(is_partially_orthogonal(&v, &w, &c).unwrap());
        assert!(!is_partially_orthogonal(&w, &v, &c).unwrap());
    }

    #[test]
    fn principal_partitions() {
        let c = cfg();
        let mut rng = seeded(3);
        let v: Subspace<Complex64> = random_subspace(&mut rng, 6, 3);
        let w: Subspace<Complex64> = random_subspace(&mut rng, 6, 3);
        let single = Partition::new(vec![v.clone()], &c).unwrap();
        assert!(is_principal_partition(&v, &single, &w, &c).unwrap());

        let split = principal_split(&v, &w, &[vec![0, 2], vec![1]], &c).unwrap();
        assert!(is_principal_partition(&v, &split, &w, &c).unwrap());

        let a = random_subspace_within(&mut rng, &v, 1);
        let b = v.relative_complement(&a, &c).unwrap();
        let generic = Partition::new(vec![a, b], &c).unwrap();
        assert!(!is_principal_partition(&v, &generic, &w, &c).unwrap());

        let wrong = Partition::new(vec![random_subspace(&mut rng, 6, 2)], &c).unwrap();
        assert!(is_principal_partition(&v, &wrong, &w, &c).is_err());
    }

    #[test]
    fn projection_maps_principal_vectors() {
        let mut rng = seeded(4);
        let v: Subspace<Complex64> = random_subspace(&mut rng, 7, 4);
        let w: Subspace<Complex64> = random_subspace(&mut rng, 7, 3);
        let pd = principal_decomposition(&v, &w, &cfg()).unwrap();
        for i in 0..pd.len() {
            let pe = w.project_vector(pd.left_vector(i)).unwrap();
            let fc: Vec<Complex64> = pd
                .right_vector(i)
                .iter()
                .map(|&z| z * pd.angles[i].cos())
                .collect();
            assert!(norm(&sub_vec(&pe, &fc)) < 1e-9);
        }
    }

    fn check_inner_products<S: Scalar>(seed: u64, n: usize, p: usize, q: usize) {
        let mut rng = seeded(seed);
        let v: Subspace<S> = random_subspace(&mut rng, n, p);
        let w: Subspace<S> = random_subspace(&mut rng, n, q);
        let pd = principal_decomposition(&v, &w, &cfg()).unwrap();
        let tol = S::Real::lit(1e-9);
        assert!(pd.left_basis.orthonormality_defect() < tol);
        assert!(pd.right_basis.orthonormality_defect() < tol);
        let g = pd.left_basis.adjoint_mul(&pd.right_basis);
        for i in 0..p {
            for j in 0..q {
                let target = if i == j && i < pd.len() {
                    pd.angles[i].cos()
                } else {
                    S::Real::zero()
                };
                assert!((g[(i, j)] - S::from_real(target)).modulus() < tol);
            }
        }
        assert!(pd.angles.windows(2).all(|a| a[0] <= a[1]));
        assert!(pd
            .angles
            .iter()
            .all(|&a| a >= S::Real::zero() && a <= S::Real::FRAC_PI_2()));
    }

    fn check_unitary_invariance<S: Scalar>(seed: u64, n: usize, p: usize, q: usize) {
        let mut rng = seeded(seed);
        let v: Subspace<S> = random_subspace(&mut rng, n, p);
        let w: Subspace<S> = random_subspace(&mut rng, n, q);
        let t = random_unitary::<S>(&mut rng, n);
        let a = principal_angles(&v, &w, &cfg()).unwrap();
        let b = principal_angles(
            &v.transform(&t).unwrap(),
            &w.transform(&t).unwrap(),
            &cfg(),
        )
        .unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((*x - *y).abs() < S::Real::lit(1e-8));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn principal_bases_satisfy_inner_product_relations(seed in any::<u64>(), n in 1usize..=10, p in 1usize..=10, q in 1usize..=10) {
            let (p, q) = (p.min(n), q.min(n));
            check_inner_products::<f64>(seed, n, p, q);
            check_inner_products::<Complex64>(seed, n, p, q);
        }

        #[test]
        fn angles_are_unitarily_invariant(seed in any::<u64>(), n in 1usize..=8, p in 1usize..=8, q in 1usize..=8) {
            let (p, q) = (p.min(n), q.min(n));
            check_unitary_invariance::<f64>(seed, n, p, q);
            check_unitary_invariance::<Complex64>(seed, n, p, q);
        }

        #[test]
        fn realification_doubles_each_angle(seed in any::<u64>(), n in 1usize..=5, p in 1usize..=5, q in 1usize..=5) {
            let (p, q) = (p.min(n), q.min(n));
            let mut rng = seeded(seed);
            let v: Subspace<Complex64> = random_subspace(&mut rng, n, p);
            let w: Subspace<Complex64> = random_subspace(&mut rng, n, q);
            let a = principal_angles(&v, &w, &cfg()).unwrap();
            let b = principal_angles(&v.realify(), &w.realify(), &cfg()).unwrap();
            prop_assert_eq!(b.len(), 2 * a.len());
            for (i, x) in a.iter().enumerate() {
                prop_assert!((b[2 * i] - x).abs() < 1e-8);
                prop_assert!((b[2 * i + 1] - x).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn f32_principal_angles() {
        let c = ToleranceConfig::single_precision();
        let v = Subspace::<f32>::from_spanning(2, &[vec![1.0, 0.0]], &c).unwrap();
        let w = Subspace::<f32>::from_spanning(2, &[vec![1.0, 1.0]], &c).unwrap();
        let a = principal_angles(&v, &w, &c).unwrap();
        assert!((a[0] - std::f32::consts::FRAC_PI_4).abs() < 1e-6);
    }
}
