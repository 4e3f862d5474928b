//! Seeded randomized verification suites over the identities, metric axioms,
//! bounds and oracle equivalences, reported as per-check maximum residuals.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{
    cap, oracle_complementary_angle, oracle_cos_contraction_with, oracle_grassmann_angle,
    MultiIndex,
};
use crate::gram::{angle_from_gram, complementary_from_gram};
use crate::grassmann::{
    complementary_cos_sin, cos_grassmann_angle, grassmann_angle, grassmann_cos_sin,
    oriented_angle, OrientedSubspace,
};
use crate::identities::{
    angular_range, characterize_principal_partition, check_blade_wedge_identity,
    check_coordinate_identity, check_line_partition, check_oriented_sum,
    check_partition_formula, check_principal_coordinate, check_product_of_sines,
    check_spherical_pythagorean, check_symmetries, complexifiability_obstruction,
    direct_sum_angle, theta_pair_feasibility, Complexifiability,
};
use crate::mat::{normalized, Mat};
use crate::metrics::{directed_hausdorff, fubini_study, geodesic_point, sampled_directed_hausdorff};
use crate::principal::{is_principal_partition, principal_split, Partition};
use crate::random::{
    random_subspace, random_subspace_within, random_unit_in, random_unitary, random_vector,
    seeded, uniform, uniform_usize, Rng,
};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

const IDENTITY_TOL: f64 = 1e-9;
const BOUND_TOL: f64 = 1e-12;
const HAUSDORFF_SAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Pythagorean,
    Oriented,
    MetricAxioms,
    OracleEquivalence,
    Bounds,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Pythagorean,
        Suite::Oriented,
        Suite::MetricAxioms,
        Suite::OracleEquivalence,
        Suite::Bounds,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pythagorean => "pythagorean",
            Suite::Oriented => "oriented",
            Suite::MetricAxioms => "metric-axioms",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Precondition(format!("unknown suite `{s}`, expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest ambient dimension drawn.
    pub dim_max: usize,
    /// Trials per check and per field.
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            dim_max: 6,
            trials: 500,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub suite: Suite,
    pub fields: Vec<Field>,
    pub trials: usize,
    /// `None` when a trial failed to evaluate.
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub dim_max: usize,
    pub trials: usize,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

struct Ctx<'a> {
    n_max: usize,
    trial: usize,
    cfg: &'a ToleranceConfig,
    sign: fn(&MultiIndex) -> i8,
}

type Trial = fn(&mut Rng, &Ctx) -> Result<f64>;

struct Check {
    name: &'static str,
    suite: Suite,
    tolerance: f64,
    real: Option<Trial>,
    complex: Option<Trial>,
}

fn both(
    name: &'static str,
    suite: Suite,
    tolerance: f64,
    real: Trial,
    complex: Trial,
) -> Check {
    Check {
        name,
        suite,
        tolerance,
        real: Some(real),
        complex: Some(complex),
    }
}

fn catalog() -> Vec<Check> {
    use Suite::*;
    vec![
        both("line_partition", Pythagorean, IDENTITY_TOL, line_partition::<f64>, line_partition::<Complex64>),
        both("coordinate_sum_p_le_q", Pythagorean, IDENTITY_TOL, coordinate_le::<f64>, coordinate_le::<Complex64>),
        both("coordinate_sum_p_gt_q", Pythagorean, IDENTITY_TOL, coordinate_gt::<f64>, coordinate_gt::<Complex64>),
        both("principal_coordinate", Pythagorean, IDENTITY_TOL, principal_coordinate::<f64>, principal_coordinate::<Complex64>),
        both("direct_sum", Pythagorean, IDENTITY_TOL, direct_sum::<f64>, direct_sum::<Complex64>),
        both("partition_formula", Pythagorean, IDENTITY_TOL, partition_formula::<f64>, partition_formula::<Complex64>),
        both("principal_partition", Pythagorean, 0.0, principal_partition::<f64>, principal_partition::<Complex64>),
        both("product_of_sines", Pythagorean, IDENTITY_TOL, product_of_sines::<f64>, product_of_sines::<Complex64>),
        both("symmetries", Pythagorean, IDENTITY_TOL, symmetries::<f64>, symmetries::<Complex64>),
        both("spherical_pythagorean", Pythagorean, IDENTITY_TOL, spherical_pythagorean::<f64>, spherical_pythagorean::<Complex64>),
        both("blade_wedge", Pythagorean, IDENTITY_TOL, blade_wedge::<f64>, blade_wedge::<Complex64>),
        both("oriented_sum", Oriented, IDENTITY_TOL, oriented_sum::<f64>, oriented_sum::<Complex64>),
        both("oriented_inequality", Oriented, BOUND_TOL, oriented_inequality::<f64>, oriented_inequality::<Complex64>),
        both("oriented_magnitude", Oriented, IDENTITY_TOL, oriented_magnitude::<f64>, oriented_magnitude::<Complex64>),
        both("triangle_inequality", MetricAxioms, IDENTITY_TOL, triangle_inequality::<f64>, triangle_inequality::<Complex64>),
        both("reverse_bounds", MetricAxioms, IDENTITY_TOL, reverse_bounds::<f64>, reverse_bounds::<Complex64>),
        both("indiscernibles", MetricAxioms, IDENTITY_TOL, indiscernibles::<f64>, indiscernibles::<Complex64>),
        both("fubini_cross_dimension", MetricAxioms, IDENTITY_TOL, fubini_cross_dimension::<f64>, fubini_cross_dimension::<Complex64>),
        both("geodesic", MetricAxioms, IDENTITY_TOL, geodesic::<f64>, geodesic::<Complex64>),
        both("hausdorff_sampling", MetricAxioms, IDENTITY_TOL, hausdorff_sampling::<f64>, hausdorff_sampling::<Complex64>),
        both("grassmann_oracle", OracleEquivalence, IDENTITY_TOL, grassmann_oracle::<f64>, grassmann_oracle::<Complex64>),
        both("complementary_oracle", OracleEquivalence, IDENTITY_TOL, complementary_oracle::<f64>, complementary_oracle::<Complex64>),
        both("contraction_oracle", OracleEquivalence, IDENTITY_TOL, contraction_oracle::<f64>, contraction_oracle::<Complex64>),
        both("gram_route", OracleEquivalence, IDENTITY_TOL, gram_route::<f64>, gram_route::<Complex64>),
        both("theta_pair_bounds", Bounds, BOUND_TOL, theta_pair_bounds::<f64>, theta_pair_bounds::<Complex64>),
        both("zero_subspace_exception", Bounds, BOUND_TOL, zero_subspace_exception::<f64>, zero_subspace_exception::<Complex64>),
        both("line_equality", Bounds, BOUND_TOL, line_equality::<f64>, line_equality::<Complex64>),
        both("plane_equality", Bounds, BOUND_TOL, plane_equality::<f64>, plane_equality::<Complex64>),
        Check {
            name: "realified_inconclusive",
            suite: Bounds,
            tolerance: 0.0,
            real: None,
            complex: Some(realified_inconclusive),
        },
    ]
}

/// Names of the checks a suite runs, in report order.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    catalog()
        .into_iter()
        .filter(|c| suite.includes(c.suite))
        .map(|c| c.name)
        .collect()
}

fn validate(opts: &VerifyOptions) -> Result<()> {
    if opts.dim_max == 0 {
        return Err(Error::Precondition("dim-max must be at least 1".into()));
    }
    Ok(())
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions, cfg: &ToleranceConfig) -> Result<VerifyReport> {
    run_suite_with_sign(suite, opts, cfg, MultiIndex::epsilon)
}

pub(crate) fn run_suite_with_sign(
    suite: Suite,
    opts: &VerifyOptions,
    cfg: &ToleranceConfig,
    sign: fn(&MultiIndex) -> i8,
) -> Result<VerifyReport> {
    validate(opts)?;
    let checks: Vec<CheckReport> = catalog()
        .iter()
        .filter(|c| suite.includes(c.suite))
        .map(|c| run(c, opts, cfg, sign))
        .collect();
    Ok(VerifyReport {
        suite,
        seed: opts.seed,
        dim_max: opts.dim_max,
        trials: opts.trials,
        passed: checks.iter().all(|c| c.passed),
        checks,
        note: (opts.trials == 0).then(|| "0 trials: every check passes vacuously".to_string()),
    })
}

/// Runs one named check.
pub fn run_check(name: &str, opts: &VerifyOptions, cfg: &ToleranceConfig) -> Result<CheckReport> {
    run_check_with_sign(name, opts, cfg, MultiIndex::epsilon)
}

pub(crate) fn run_check_with_sign(
    name: &str,
    opts: &VerifyOptions,
    cfg: &ToleranceConfig,
    sign: fn(&MultiIndex) -> i8,
) -> Result<CheckReport> {
    validate(opts)?;
    let cat = catalog();
    let check = cat
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::Precondition(format!("unknown check `{name}`")))?;
    Ok(run(check, opts, cfg, sign))
}

/// FNV-1a, so every check draws from its own stream regardless of order.
fn stream_seed(seed: u64, name: &str, field: Field) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes().chain([field as u8]) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

struct Tally {
    max: f64,
    note: Option<String>,
}

fn run_field<S: Scalar<Real = f64>>(
    trial: Trial,
    name: &'static str,
    opts: &VerifyOptions,
    cfg: &ToleranceConfig,
    sign: fn(&MultiIndex) -> i8,
    tally: &mut Tally,
) {
    let mut rng = seeded(stream_seed(opts.seed, name, S::FIELD));
    for t in 0..opts.trials {
        let ctx = Ctx {
            n_max: opts.dim_max,
            trial: t,
            cfg,
            sign,
        };
        match trial(&mut rng, &ctx) {
            Ok(r) if r.is_nan() => {
                tally.max = f64::INFINITY;
                tally.note.get_or_insert_with(|| format!("trial {t} ({}): residual is NaN", S::FIELD));
            }
            Ok(r) => tally.max = tally.max.max(r),
            Err(e) => {
                tally.max = f64::INFINITY;
                tally.note.get_or_insert_with(|| format!("trial {t} ({}): {e}", S::FIELD));
            }
        }
    }
}

fn run(check: &Check, opts: &VerifyOptions, cfg: &ToleranceConfig, sign: fn(&MultiIndex) -> i8) -> CheckReport {
    let mut tally = Tally { max: 0.0, note: None };
    let mut fields = Vec::new();
    if let Some(f) = check.real {
        fields.push(Field::Real);
        run_field::<f64>(f, check.name, opts, cfg, sign, &mut tally);
    }
    if let Some(f) = check.complex {
        fields.push(Field::Complex);
        run_field::<Complex64>(f, check.name, opts, cfg, sign, &mut tally);
    }
    if opts.trials == 0 {
        tally.note = Some("0 trials: vacuous pass".into());
    }
    let finite = tally.max.is_finite();
    CheckReport {
        name: check.name,
        suite: check.suite,
        fields,
        trials: opts.trials,
        max_residual: finite.then_some(tally.max),
        tolerance: check.tolerance,
        passed: finite && tally.max <= check.tolerance,
        note: tally.note,
    }
}

fn ambient(rng: &mut Rng, ctx: &Ctx, lo: usize) -> usize {
    uniform_usize(rng, lo, ctx.n_max.max(lo))
}

fn exterior_ambient<S: Scalar>(rng: &mut Rng, ctx: &Ctx, lo: usize) -> usize {
    uniform_usize(rng, lo, ctx.n_max.min(cap::<S>()).max(lo))
}

/// Cycles through every `(n, p, q)` with `n ≤ n_max` and `0 ≤ p, q ≤ n`.
fn combination(trial: usize, n_max: usize) -> (usize, usize, usize) {
    let mut all = Vec::new();
    for n in 1..=n_max {
        for p in 0..=n {
            for q in 0..=n {
                all.push((n, p, q));
            }
        }
    }
    all[trial % all.len()]
}

/// Orthogonal basis with columns of random lengths in `[1/2, 2]`.
fn orthogonal_basis<S: Scalar<Real = f64>>(rng: &mut Rng, n: usize) -> Mat<S> {
    let mut q = random_unitary::<S>(rng, n);
    for j in 0..n {
        let s = S::from_real(uniform(rng, 0.5, 2.0));
        for x in q.col_mut(j) {
            *x = *x * s;
        }
    }
    q
}

/// A spanning list of `v` that is neither orthonormal nor ill conditioned.
fn skewed_basis<S: Scalar<Real = f64>>(rng: &mut Rng, v: &Subspace<S>) -> Vec<Vec<S>> {
    let k = v.dim();
    v.basis().mul(&orthogonal_basis::<S>(rng, k)).to_columns()
}

fn line_partition<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let l = random_subspace::<S>(rng, n, 1);
    let basis = random_unitary::<S>(rng, n);
    let mut cuts: Vec<usize> = (1..n).collect();
    let keep = uniform_usize(rng, 0, n - 1);
    while cuts.len() > keep {
        let i = uniform_usize(rng, 0, cuts.len() - 1);
        cuts.remove(i);
    }
    let mut bounds = vec![0];
    bounds.extend(cuts);
    bounds.push(n);
    let parts = bounds
        .windows(2)
        .map(|b| Subspace::coordinate_subspace_of_basis(&basis, &(b[0]..b[1]).collect::<Vec<_>>()))
        .collect();
    let parts = Partition::new(parts, ctx.cfg)?;
    Ok(check_line_partition(&l, &parts, ctx.cfg)?.residual)
}

fn coordinate_le<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let q = uniform_usize(rng, 0, n);
    let p = uniform_usize(rng, 0, q);
    let v = random_subspace::<S>(rng, n, p);
    let basis = orthogonal_basis::<S>(rng, n);
    Ok(check_coordinate_identity(&v, &basis, q, ctx.cfg)?.residual)
}

fn coordinate_gt<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 1, n);
    let q = uniform_usize(rng, 0, p - 1);
    let v = random_subspace::<S>(rng, n, p);
    let basis = orthogonal_basis::<S>(rng, n);
    Ok(check_coordinate_identity(&v, &basis, q, ctx.cfg)?.residual)
}

fn principal_coordinate<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 1, n);
    let q = uniform_usize(rng, 1, n);
    let r = uniform_usize(rng, 0, p);
    let v = random_subspace::<S>(rng, n, p);
    let w = random_subspace::<S>(rng, n, q);
    let u = random_subspace_within(rng, &v, r);
    Ok(check_principal_coordinate(&u, &v, &w, ctx.cfg)?.residual)
}

fn direct_sum<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 2);
    let p1 = uniform_usize(rng, 0, n - 1);
    let p2 = uniform_usize(rng, 0, n - p1);
    let q = uniform_usize(rng, 0, n);
    let v1 = random_subspace::<S>(rng, n, p1);
    let v2 = random_subspace::<S>(rng, n, p2);
    let w = random_subspace::<S>(rng, n, q);
    Ok(direct_sum_angle(&v1, &v2, &w, ctx.cfg)?.residual)
}

fn partition_formula<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 2);
    let k = uniform_usize(rng, 2, n.min(4));
    let total = uniform_usize(rng, k, n);
    let mut dims = vec![1; k];
    for _ in k..total {
        let i = uniform_usize(rng, 0, k - 1);
        dims[i] += 1;
    }
    let parts = dims.iter().map(|&d| random_subspace::<S>(rng, n, d)).collect();
    let parts = Partition::new(parts, ctx.cfg)?;
    let q = uniform_usize(rng, 0, n);
    let w = random_subspace::<S>(rng, n, q);
    Ok(check_partition_formula(&parts, &w, ctx.cfg)?.residual)
}

/// Counts disagreements between the product characterization, the
/// projection-orthogonality test and the known answer.
fn principal_partition<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let cfg = ctx.cfg;
    let n = ambient(rng, ctx, 2);
    let q = uniform_usize(rng, 1, n);
    let p = uniform_usize(rng, 1, q);
    let v = random_subspace::<S>(rng, n, p);
    let w = random_subspace::<S>(rng, n, q);
    let k = uniform_usize(rng, 1, p);
    let mut groups = vec![Vec::new(); k];
    for i in 0..p {
        let g = if i < k { i } else { uniform_usize(rng, 0, k - 1) };
        groups[g].push(i);
    }
    let mut misses = 0;
    let split = principal_split(&v, &w, &groups, cfg)?;
    misses += usize::from(!characterize_principal_partition(&v, &split, &w, cfg)?);
    misses += usize::from(!is_principal_partition(&v, &split, &w, cfg)?);
    // With W the whole space every split is principal.
    if p >= 2 && q < n {
        let r = uniform_usize(rng, 1, p - 1);
        let a = random_subspace_within(rng, &v, r);
        let b = v.relative_complement(&a, cfg)?;
        let generic = Partition::new(vec![a, b], cfg)?;
        misses += usize::from(characterize_principal_partition(&v, &generic, &w, cfg)?);
        misses += usize::from(is_principal_partition(&v, &generic, &w, cfg)?);
    }
    Ok(misses as f64)
}

fn random_pair<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> (Subspace<S>, Subspace<S>) {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 0, n);
    let q = uniform_usize(rng, 0, n);
    (random_subspace(rng, n, p), random_subspace(rng, n, q))
}

fn product_of_sines<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = random_pair::<S>(rng, ctx);
    Ok(check_product_of_sines(&v, &w, ctx.cfg)?.residual)
}

fn symmetries<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = random_pair::<S>(rng, ctx);
    let [a, b] = check_symmetries(&v, &w, ctx.cfg)?;
    Ok(a.residual.max(b.residual))
}

fn spherical_pythagorean<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = random_pair::<S>(rng, ctx);
    let r = uniform_usize(rng, 0, w.dim());
    let u = random_subspace_within(rng, &w, r);
    Ok(check_spherical_pythagorean(&v, &u, &w, ctx.cfg)?.residual)
}

fn unit_frame<S: Scalar<Real = f64>>(rng: &mut Rng, n: usize, k: usize) -> Vec<Vec<S>> {
    (0..k)
        .map(|_| normalized(&random_vector::<S>(rng, n)).expect("nonzero Gaussian vector"))
        .collect()
}

fn blade_wedge<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = exterior_ambient::<S>(rng, ctx, 2);
    let p = uniform_usize(rng, 1, n / 2);
    let a = OrientedSubspace::new(n, &unit_frame::<S>(rng, n, p), ctx.cfg)?;
    let b = OrientedSubspace::new(n, &unit_frame::<S>(rng, n, p), ctx.cfg)?;
    Ok(check_blade_wedge_identity(&a, &b, ctx.cfg)?.residual)
}

fn oriented_pair<S: Scalar<Real = f64>>(
    rng: &mut Rng,
    ctx: &Ctx,
) -> Result<(OrientedSubspace<S>, OrientedSubspace<S>)> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 1, n);
    let v = random_subspace::<S>(rng, n, p);
    let v = OrientedSubspace::new(n, &skewed_basis(rng, &v), ctx.cfg)?;
    let phase = uniform(rng, 0.0, std::f64::consts::TAU);
    let w = OrientedSubspace::from_subspace(&random_subspace::<S>(rng, n, p)).rephased(phase);
    Ok((v, w))
}

fn oriented_sum<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oriented_pair::<S>(rng, ctx)?;
    let basis = orthogonal_basis::<S>(rng, v.ambient_dim());
    Ok(check_oriented_sum(&v, &w, &basis, ctx.cfg)?.residual)
}

fn oriented_inequality<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oriented_pair::<S>(rng, ctx)?;
    let basis = orthogonal_basis::<S>(rng, v.ambient_dim());
    Ok((-check_oriented_sum(&v, &w, &basis, ctx.cfg)?.inequality_slack).max(0.0))
}

fn oriented_magnitude<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oriented_pair::<S>(rng, ctx)?;
    let o = oriented_angle(&v, &w, ctx.cfg)?;
    let c = cos_grassmann_angle(&v.subspace(ctx.cfg), &w.subspace(ctx.cfg), ctx.cfg)?;
    Ok((o.cos_value.modulus() - c).abs())
}

fn random_triple<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> [Subspace<S>; 3] {
    let n = ambient(rng, ctx, 1);
    let same = uniform_usize(rng, 0, 3) == 0;
    let d0 = uniform_usize(rng, 0, n);
    [0, 1, 2].map(|_| {
        let d = if same { d0 } else { uniform_usize(rng, 0, n) };
        random_subspace(rng, n, d)
    })
}

fn triangle_inequality<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let [u, v, w] = random_triple::<S>(rng, ctx);
    let d = |x: &Subspace<S>, y: &Subspace<S>| grassmann_angle(x, y, ctx.cfg);
    Ok((d(&u, &w)? - d(&u, &v)? - d(&v, &w)?).max(0.0))
}

fn reverse_bounds<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let [u, v, w] = random_triple::<S>(rng, ctx);
    let d = |x: &Subspace<S>, y: &Subspace<S>| grassmann_angle(x, y, ctx.cfg);
    let uw = d(&u, &w)?;
    let mut floor = (d(&u, &v)? - d(&w, &v)?).max(d(&v, &w)? - d(&v, &u)?);
    if u.dim() == v.dim() && v.dim() == w.dim() {
        floor = floor.max((d(&u, &v)? - d(&v, &w)?).abs());
    }
    Ok((floor - uw).max(0.0))
}

/// Zero both ways for two bases of one subspace; a distinct pair scoring
/// zero both ways counts as a failure.
fn indiscernibles<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let cfg = ctx.cfg;
    let (v, w) = random_pair::<S>(rng, ctx);
    let n = v.ambient_dim();
    let rebased = Subspace::from_spanning(n, &skewed_basis(rng, &v), cfg)?;
    let same = grassmann_angle(&v, &rebased, cfg)?.max(grassmann_angle(&rebased, &v, cfg)?);
    let distinct = !(v.dim() == w.dim() && (v.dim() == 0 || v.dim() == n));
    let mut residual = same;
    if distinct {
        let both = grassmann_angle(&v, &w, cfg)?.max(grassmann_angle(&w, &v, cfg)?);
        if both <= cfg.compare_tol {
            residual = f64::INFINITY;
        }
    }
    if v.dim() < n {
        let bigger = v.sum(&random_subspace(rng, n, 1), cfg)?;
        if grassmann_angle(&bigger, &v, cfg)? <= cfg.compare_tol {
            residual = f64::INFINITY;
        }
    }
    Ok(residual)
}

fn fubini_cross_dimension<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 0, n);
    let mut q = uniform_usize(rng, 0, n - 1);
    if q >= p {
        q += 1;
    }
    let v = random_subspace::<S>(rng, n, p);
    let w = random_subspace::<S>(rng, n, q);
    Ok((fubini_study(&v, &w, ctx.cfg)? - std::f64::consts::FRAC_PI_2).abs())
}

/// `U, W` of dimension `p` meeting in dimension `p − 1`.
pub(crate) fn codim_one_pair<S: Scalar<Real = f64>>(
    rng: &mut Rng,
    n: usize,
    p: usize,
    cfg: &ToleranceConfig,
) -> Result<(Subspace<S>, Subspace<S>)> {
    let common = random_subspace::<S>(rng, n, p - 1);
    let rest = common.complement();
    let a = random_unit_in(rng, &rest);
    let b = random_unit_in(rng, &rest);
    let u = common.sum(&Subspace::from_spanning(n, &[a], cfg)?, cfg)?;
    let w = common.sum(&Subspace::from_spanning(n, &[b], cfg)?, cfg)?;
    Ok((u, w))
}

fn geodesic<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let cfg = ctx.cfg;
    let n = ambient(rng, ctx, 2);
    let p = uniform_usize(rng, 1, n - 1);
    let (u, w) = codim_one_pair::<S>(rng, n, p, cfg)?;
    let t = grassmann_angle(&u, &w, cfg)?;
    let start = geodesic_point(&u, &w, 0.0, None, cfg)?;
    let end = geodesic_point(&u, &w, t, None, cfg)?;
    let mid = geodesic_point(&u, &w, t / 2.0, None, cfg)?;
    Ok([
        fubini_study(&start, &u, cfg)?,
        fubini_study(&end, &w, cfg)?,
        (grassmann_angle(&u, &mid, cfg)? - t / 2.0).abs(),
        (grassmann_angle(&mid, &w, cfg)? - t / 2.0).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

fn hausdorff_sampling<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 1, n);
    let q = uniform_usize(rng, 1, n);
    let v = random_subspace::<S>(rng, n, p);
    let w = random_subspace::<S>(rng, n, q);
    let seed = uniform_usize(rng, 0, usize::MAX) as u64;
    let s = sampled_directed_hausdorff(&v, &w, HAUSDORFF_SAMPLES, seed, ctx.cfg)?;
    Ok((s - directed_hausdorff(&v, &w, ctx.cfg)?).max(0.0))
}

fn oracle_pair<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx, n_max: usize) -> (Subspace<S>, Subspace<S>) {
    let (n, p, q) = combination(ctx.trial, n_max);
    (random_subspace(rng, n, p), random_subspace(rng, n, q))
}

fn grassmann_oracle<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oracle_pair::<S>(rng, ctx, ctx.n_max.min(cap::<S>()));
    Ok((grassmann_angle(&v, &w, ctx.cfg)? - oracle_grassmann_angle(&v, &w)?).abs())
}

fn complementary_oracle<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oracle_pair::<S>(rng, ctx, ctx.n_max.min(cap::<S>()));
    let fast = complementary_cos_sin(&v, &w, ctx.cfg)?.angle();
    Ok((fast - oracle_complementary_angle(&v, &w)?).abs())
}

/// Compared in cosine space: the contraction yields a cosine only.
fn contraction_oracle<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let (v, w) = oracle_pair::<S>(rng, ctx, ctx.n_max.min(cap::<S>()));
    let fast = cos_grassmann_angle(&v, &w, ctx.cfg)?;
    Ok((fast - oracle_cos_contraction_with(&v, &w, ctx.sign)?).abs())
}

fn gram_route<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let cfg = ctx.cfg;
    let (v, w) = oracle_pair::<S>(rng, ctx, ctx.n_max);
    let n = v.ambient_dim();
    let (vs, ws) = (skewed_basis(rng, &v), skewed_basis(rng, &w));
    let theta = grassmann_cos_sin(&v, &w, cfg)?.angle();
    let perp = complementary_cos_sin(&v, &w, cfg)?.angle();
    let a = (theta - angle_from_gram(n, &vs, &ws, cfg)?).abs();
    let b = (perp - complementary_from_gram(n, &vs, &ws, cfg)?).abs();
    Ok(a.max(b))
}

fn theta_pair_bounds<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let p = uniform_usize(rng, 1, n);
    let q = uniform_usize(rng, 0, n);
    let v = random_subspace::<S>(rng, n, p);
    let w = random_subspace::<S>(rng, n, q);
    Ok(theta_pair_feasibility(&v, &w, ctx.cfg)?.worst_violation())
}

fn zero_subspace_exception<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let q = uniform_usize(rng, 0, n);
    let w = random_subspace::<S>(rng, n, q);
    let z = Subspace::zero(n);
    let a = grassmann_cos_sin(&z, &w, ctx.cfg)?.cos;
    let b = complementary_cos_sin(&z, &w, ctx.cfg)?.cos;
    Ok((a * a + b * b - 2.0).abs())
}

fn line_equality<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 1);
    let q = uniform_usize(rng, 1, n);
    let v = random_subspace::<S>(rng, n, 1);
    let w = random_subspace::<S>(rng, n, q);
    let t = grassmann_cos_sin(&v, &w, ctx.cfg)?;
    let tp = complementary_cos_sin(&v, &w, ctx.cfg)?;
    let sum = (t.angle() + tp.angle() - std::f64::consts::FRAC_PI_2).abs();
    Ok(sum.max(1.0 - t.cos - tp.cos))
}

fn plane_equality<S: Scalar<Real = f64>>(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = ambient(rng, ctx, 2);
    let q = uniform_usize(rng, 1, n);
    let v = random_subspace::<S>(rng, n, 2);
    let w = random_subspace::<S>(rng, n, q);
    let t = grassmann_cos_sin(&v, &w, ctx.cfg)?;
    let tp = complementary_cos_sin(&v, &w, ctx.cfg)?;
    let delta = angular_range(&v, &w, ctx.cfg)?.delta;
    let equality = (t.cos + tp.cos - delta.cos()).abs();
    let floor = std::f64::consts::FRAC_PI_2 + delta - t.angle() - tp.angle();
    Ok(equality.max(floor))
}

/// Realifications of complex pairs must never be reported as obstructed.
fn realified_inconclusive(rng: &mut Rng, ctx: &Ctx) -> Result<f64> {
    let n = uniform_usize(rng, 2, (ctx.n_max / 2).max(2));
    let p = uniform_usize(rng, 1, n);
    let q = uniform_usize(rng, 1, n);
    let v = random_subspace::<Complex64>(rng, n, p).realify();
    let w = random_subspace::<Complex64>(rng, n, q).realify();
    let verdict = complexifiability_obstruction(&v, &w, ctx.cfg)?;
    Ok(if verdict == Complexifiability::Obstructed { 1.0 } else { 0.0 })
}
