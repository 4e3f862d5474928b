//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::process::ExitCode;
use std::time::Instant;

use grassmann_core::exterior::{
    contract_by_frame, coordinate_blade, permutation_sign, wedge_vectors, MultiIndex, Multivector,
};
use grassmann_core::gram::{angle_from_gram, complementary_from_gram};
use grassmann_core::grassmann::{
    complementary_angle, cos_grassmann_angle, grassmann_angle, oriented_angle, theta_vperp_w,
    vector_angles, OrientedSubspace,
};
use grassmann_core::identities::check_oriented_sum;
use grassmann_core::principal::principal_angles;
use grassmann_core::random::{random_vector, seeded};
use grassmann_core::verify::{run_check, VerifyOptions};
use grassmann_core::{Complex64, Mat, Scalar, Subspace, ToleranceConfig};

const COS_TOL: f64 = 1e-9;
const ANGLE_TOL: f64 = 1e-7;
const SEED: u64 = 20_240_601;

type Outcome = Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

/// Collects failed sub-checks of one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn near(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        self.checks += 1;
        let ok = (got - want).abs() <= tol;
        if !ok {
            self.failures.push(format!("{label}: got {got:.15}, want {want:.15}"));
        }
    }

    fn angle(&mut self, label: &str, got: f64, want_deg: f64) {
        self.near(label, got, want_deg.to_radians(), ANGLE_TOL);
    }

    fn angles(&mut self, label: &str, got: &[f64], want_deg: &[f64]) {
        self.checks += 1;
        if got.len() != want_deg.len() {
            self.failures.push(format!("{label}: got {} angles, want {}", got.len(), want_deg.len()));
            return;
        }
        for (k, (&g, &w)) in got.iter().zip(want_deg).enumerate() {
            self.angle(&format!("{label}[{k}]"), g, w);
        }
    }

    fn holds(&mut self, label: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn value<T>(&mut self, label: &str, r: grassmann_core::Result<T>) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{label}: error {e}"));
                None
            }
        }
    }

    fn finish(self, summary: String) -> Outcome {
        if self.failures.is_empty() {
            Ok(format!("{summary}, {} checks", self.checks))
        } else {
            Err(self.failures)
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn span<S: Scalar>(n: usize, vs: &[Vec<S>]) -> Subspace<S> {
    Subspace::from_spanning(n, vs, &ToleranceConfig::default()).expect("valid example")
}

fn golden_examples() -> Outcome {
    let cfg = ToleranceConfig::default();
    let mut t = Tally::default();
    let s2 = FRAC_1_SQRT_2;
    let s3 = 3f64.sqrt() / 2.0;

    // Real planes in ℝ⁴.
    let v = span(4, &[vec![1.0, 0.0, 1.0, 0.0], vec![0.0, 1.0, 0.0, 1.0]]);
    let w = Subspace::<f64>::coordinate(4, &[0, 1]);
    if let Some(pa) = t.value("R4 principal", principal_angles(&v, &w, &cfg)) {
        t.angles("R4 principal", &pa, &[45.0, 45.0]);
    }
    if let Some(x) = t.value("R4 theta", grassmann_angle(&v, &w, &cfg)) {
        t.angle("R4 theta", x, 60.0);
    }
    if let Some(x) = t.value("R4 theta perp", complementary_angle(&v, &w, &cfg)) {
        t.angle("R4 theta perp", x, 60.0);
    }

    // Complex planes in ℂ⁴.
    let z = c(0.0, 0.0);
    let v = span(4, &[vec![c(s2, 0.0), c(s2, 0.0), z, z], vec![z, z, c(0.0, 0.5), c(s3, 0.0)]]);
    let w = span(4, &[vec![c(0.5, 0.5), c(0.5, -0.5), z, z], vec![z, z, c(0.0, 1.0), z]]);
    if let Some(pa) = t.value("C4 principal", principal_angles(&v, &w, &cfg)) {
        t.angles("C4 principal", &pa, &[45.0, 60.0]);
    }
    let cc = t.value("C4 cos", cos_grassmann_angle(&v, &w, &cfg));
    let cr = t.value("C4 realified cos", cos_grassmann_angle(&v.realify(), &w.realify(), &cfg));
    if let (Some(cc), Some(cr)) = (cc, cr) {
        t.near("C4 cos theta", cc, 2f64.sqrt() / 4.0, COS_TOL);
        t.near("C4 realified cos", cr, 0.125, COS_TOL);
        t.near("C4 cos_R = cos_C^2", cr, cc * cc, COS_TOL);
    }
    if let Some(x) = t.value("C4 realified theta", grassmann_angle(&v.realify(), &w.realify(), &cfg)) {
        t.near("C4 realified theta", x, 0.125f64.acos(), ANGLE_TOL);
        t.near("C4 realified theta degrees", x.to_degrees(), 82.8, 0.05);
    }

    // ℝ⁵ triple.
    let v = Subspace::<f64>::coordinate(5, &[0, 1, 3]);
    let w = span(5, &[vec![1.0, 0.0, 0.0, 0.0, 0.0], vec![0.0, s3, 0.5, 0.0, 0.0]]);
    let u = span(
        5,
        &[
            vec![1.0, 0.0, 0.0, 0.0, 0.0],
            vec![0.0, s3, 0.5, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, s2, s2],
        ],
    );
    if let Some(x) = t.value("R5 theta VW", grassmann_angle(&v, &w, &cfg)) {
        t.angle("R5 theta VW", x, 90.0);
    }
    if let Some(x) = t.value("R5 theta WV", grassmann_angle(&w, &v, &cfg)) {
        t.angle("R5 theta WV", x, 30.0);
    }
    if let Some(x) = t.value("R5 theta perp VW", complementary_angle(&v, &w, &cfg)) {
        t.angle("R5 theta perp VW", x, 90.0);
    }
    if let Some(pa) = t.value("R5 complementary principal", principal_angles(&v, &w.complement(), &cfg)) {
        t.angles("R5 complementary principal", &pa, &[0.0, 60.0, 90.0]);
    }
    if let Some(x) = t.value("R5 cos VU", cos_grassmann_angle(&v, &u, &cfg)) {
        t.near("R5 cos VU", x, 6f64.sqrt() / 4.0, COS_TOL);
    }
    if let Some(x) = t.value("R5 theta perp VU", complementary_angle(&v, &u, &cfg)) {
        t.angle("R5 theta perp VU", x, 90.0);
    }
    if let Some(x) = t.value("R5 theta Vperp U", theta_vperp_w(&v, &u, &cfg)) {
        t.near("R5 cos Vperp U", x.cos(), 2f64.sqrt() / 4.0, COS_TOL);
    }

    // Basis formulas: each value by the fast path and by the Gram route.
    let xi = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let one = c(1.0, 0.0);
    let vs = vec![vec![one, -xi, z], vec![z, xi, -xi * xi]];
    let ws = vec![vec![one, z, z], vec![z, xi, z]];
    if let Some(x) = t.value("C3 pair cos", cos_grassmann_angle(&span(3, &vs), &span(3, &ws), &cfg)) {
        t.near("C3 pair cos", x, 3f64.sqrt() / 3.0, COS_TOL);
    }
    if let Some(x) = t.value("C3 pair gram", angle_from_gram(3, &vs, &ws, &cfg)) {
        t.near("C3 pair gram", x, (3f64.sqrt() / 3.0).acos(), ANGLE_TOL);
    }
    if let Some(x) = t.value("C3 pair gram perp", complementary_from_gram(3, &vs, &ws, &cfg)) {
        t.angle("C3 pair gram perp", x, 90.0);
    }

    let vs = vec![vec![1.0, 0.0, 1.0, 0.0]];
    let ws = vec![vec![0.0, 1.0, 1.0, 0.0], vec![1.0, 2.0, 2.0, -1.0]];
    let (l, p) = (span(4, &vs), span(4, &ws));
    for (label, a, b, av, bv, want, want_perp) in [
        ("R4 line/plane", &l, &p, &vs, &ws, 45.0, 45.0),
        ("R4 plane/line", &p, &l, &ws, &vs, 90.0, 45.0),
    ] {
        if let Some(x) = t.value(label, grassmann_angle(a, b, &cfg)) {
            t.angle(label, x, want);
        }
        if let Some(x) = t.value(label, angle_from_gram(4, av, bv, &cfg)) {
            t.angle(&format!("{label} gram"), x, want);
        }
        if let Some(x) = t.value(label, complementary_angle(a, b, &cfg)) {
            t.angle(&format!("{label} perp"), x, want_perp);
        }
        if let Some(x) = t.value(label, complementary_from_gram(4, av, bv, &cfg)) {
            t.angle(&format!("{label} gram perp"), x, want_perp);
        }
    }

    let i = c(0.0, 1.0);
    let vs = vec![vec![one, z, i]];
    let ws = vec![vec![one, z, z], vec![i, one, z]];
    let (l, p) = (span(3, &vs), span(3, &ws));
    if let Some(x) = t.value("C3 line/plane", grassmann_angle(&l, &p, &cfg)) {
        t.angle("C3 line/plane", x, 45.0);
    }
    if let Some(x) = t.value("C3 line/plane gram", angle_from_gram(3, &vs, &ws, &cfg)) {
        t.angle("C3 line/plane gram", x, 45.0);
    }
    if let Some(x) = t.value("C3 line/plane realified", grassmann_angle(&l.realify(), &p.realify(), &cfg)) {
        t.angle("C3 line/plane realified", x, 60.0);
    }

    // Oriented angles against coordinate planes of ℂ³.
    let vframe = vec![vec![one, i, z], vec![i, -one, -one]];
    if let Some(ov) = t.value("oriented V", OrientedSubspace::new(3, &vframe, &cfg)) {
        let x = |a: usize, b: usize| OrientedSubspace::from_subspace(&Subspace::<Complex64>::coordinate(3, &[a, b]));
        if let Some(o) = t.value("oriented X12", oriented_angle(&ov, &x(0, 1), &cfg)) {
            t.angle("oriented X12 magnitude", o.magnitude, 90.0);
            t.near("oriented X12 |cos|", o.cos_value.norm(), 0.0, COS_TOL);
            t.holds("oriented X12 phase absent", o.phase.is_none());
        }
        if let Some(o) = t.value("oriented X13", oriented_angle(&ov, &x(0, 2), &cfg)) {
            t.near("oriented X13 cos re", o.cos_value.re, (3.0 * FRAC_PI_4).cos(), COS_TOL);
            t.near("oriented X13 cos im", o.cos_value.im, 0.0, COS_TOL);
            t.angle("oriented X13 magnitude", o.magnitude, 45.0);
            t.near("oriented X13 phase", o.phase.unwrap_or(f64::NAN), PI, ANGLE_TOL);
            t.near("oriented X13 real angle", o.real_angle().unwrap_or(f64::NAN), 3.0 * FRAC_PI_4, ANGLE_TOL);
        }
        if let Some(o) = t.value("oriented X23", oriented_angle(&ov, &x(1, 2), &cfg)) {
            t.near("oriented X23 cos re", o.cos_value.re, 0.0, COS_TOL);
            t.near("oriented X23 cos im", o.cos_value.im, s2, COS_TOL);
            t.angle("oriented X23 magnitude", o.magnitude, 45.0);
            t.near("oriented X23 phase", o.phase.unwrap_or(f64::NAN), FRAC_PI_2, ANGLE_TOL);
        }

        // Oriented identity: cos𝚯_{V,W} from the coordinate sum.
        let a = Complex64::from_polar(1.0, -5.0 * PI / 6.0);
        let wframe = vec![vec![a, z, c(-s2, 0.0)], vec![z, c(s2, 0.0), c(0.5, 0.0)]];
        if let Some(ow) = t.value("oriented W", OrientedSubspace::new(3, &wframe, &cfg)) {
            let want = Complex64::from_polar(6f64.sqrt() / 4.0, FRAC_PI_3);
            if let Some(r) = t.value("oriented sum", check_oriented_sum(&ov, &ow, &Mat::identity(3), &cfg)) {
                t.near("oriented sum re", r.rhs.re, want.re, COS_TOL);
                t.near("oriented sum im", r.rhs.im, want.im, COS_TOL);
                t.near("oriented direct re", r.lhs.re, want.re, COS_TOL);
                t.near("oriented direct im", r.lhs.im, want.im, COS_TOL);
            }
        }
    }

    // Vector angles in ℂ².
    if let Some(a) = t.value("C2 vectors", vector_angles(&[one, one], &[c(-1.0, 1.0), z], &cfg)) {
        t.angle("C2 theta", a.theta, 120.0);
        t.angle("C2 gamma", a.gamma, 45.0);
        t.angle("C2 phase", a.phase.unwrap_or(f64::NAN), 135.0);
    }

    t.finish("all examples reproduced".into())
}

/// Runs verification checks, each over both fields where defined.
fn run_checks(checks: &[(&str, usize)], dim_max: usize) -> Outcome {
    let cfg = ToleranceConfig::default();
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for &(name, trials) in checks {
        let opts = VerifyOptions {
            dim_max,
            trials,
            seed: SEED,
        };
        match run_check(name, &opts, &cfg) {
            Ok(r) if r.passed => parts.push(format!(
                "{name} {}x{} max {:.1e}",
                r.fields.len(),
                r.trials,
                r.max_residual.unwrap_or(f64::NAN)
            )),
            Ok(r) => failures.push(format!(
                "{name}: max residual {:?} exceeds {:e}{}",
                r.max_residual,
                r.tolerance,
                r.note.map(|n| format!(" ({n})")).unwrap_or_default()
            )),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(parts.join("; "))
    } else {
        Err(failures)
    }
}

fn oracle_equivalence() -> Outcome {
    run_checks(
        &[
            ("grassmann_oracle", 1000),
            ("complementary_oracle", 1000),
            ("contraction_oracle", 1000),
            ("gram_route", 1000),
        ],
        8,
    )
}

fn identity_suites() -> Outcome {
    run_checks(
        &[
            ("line_partition", 500),
            ("coordinate_sum_p_le_q", 500),
            ("coordinate_sum_p_gt_q", 500),
            ("oriented_sum", 500),
            ("oriented_inequality", 500),
            ("principal_coordinate", 500),
            ("partition_formula", 500),
            ("direct_sum", 500),
            ("product_of_sines", 500),
            ("symmetries", 500),
            ("spherical_pythagorean", 500),
        ],
        8,
    )
}

fn metric_axioms() -> Outcome {
    run_checks(
        &[
            ("triangle_inequality", 10_000),
            ("reverse_bounds", 1000),
            ("indiscernibles", 500),
            ("fubini_cross_dimension", 500),
            ("geodesic", 100),
        ],
        8,
    )
}

fn bound_suites() -> Outcome {
    run_checks(
        &[
            ("theta_pair_bounds", 5000),
            ("zero_subspace_exception", 500),
            ("line_equality", 500),
            ("plane_equality", 500),
            ("realified_inconclusive", 100),
        ],
        8,
    )
}

fn close<S: Scalar<Real = f64>>(a: &Multivector<S>, b: &Multivector<S>) -> bool {
    a.sub(b).map(|d| d.norm() <= 1e-12 * (1.0 + a.norm().max(b.norm()))).unwrap_or(false)
}

/// Distinct, non-real scalars over ℂ so conjugation errors surface.
fn weights<S: Scalar<Real = f64>>(rng: &mut grassmann_core::random::Rng) -> [S; 3] {
    let v = random_vector::<S>(rng, 3);
    [v[0], v[1], v[2]]
}

fn exhaustive_field<S: Scalar<Real = f64>>(t: &mut Tally, label: &str) {
    let mut rng = seeded(SEED);
    for n in 1..=5usize {
        let size = 1usize << n;
        let blades: Vec<Multivector<S>> = (0..size).map(|m| Multivector::basis_blade(n, m).unwrap()).collect();
        let [a, b, c] = weights::<S>(&mut rng);

        // Adjointness ⟨μ, ν⌋ω⟩ = ⟨ν∧μ, ω⟩ for every triple of coordinate blades.
        let mut adjoint_ok = true;
        let mut paths_ok = true;
        for nu in &blades {
            let nu = nu.scale(a);
            for om in &blades {
                let om = om.scale(b);
                let Ok(k) = nu.contract(&om) else {
                    adjoint_ok = false;
                    continue;
                };
                paths_ok &= nu.contract_adjoint(&om).map(|d| close(&k, &d)).unwrap_or(false);
                for mu in &blades {
                    let mu = mu.scale(c);
                    let lhs = mu.inner(&k).unwrap();
                    let rhs = nu.wedge(&mu).unwrap().inner(&om).unwrap();
                    adjoint_ok &= (lhs - rhs).modulus() <= 1e-12;
                }
            }
        }
        t.holds(&format!("{label} n={n}: adjointness over all coordinate blades"), adjoint_ok);
        t.holds(&format!("{label} n={n}: expansion equals adjoint construction"), paths_ok);

        for q in 0..=n {
            let frame: Vec<Vec<S>> = (0..q).map(|_| random_vector::<S>(&mut rng, n)).collect();
            let refs: Vec<&[S]> = frame.iter().map(Vec::as_slice).collect();
            let omega = wedge_vectors(n, &refs).unwrap();
            let mut reconstruct_ok = true;
            let mut sign_ok = true;
            let mut expansion_ok = true;
            for p in 0..=q {
                for idx in MultiIndex::all(p, q) {
                    // ω = ε_I ω_I ∧ ω_I′
                    let wi = coordinate_blade(n, &frame, &idx).unwrap();
                    let wc = coordinate_blade(n, &frame, &idx.complement()).unwrap();
                    let eps = S::from_real(f64::from(idx.epsilon()));
                    reconstruct_ok &= close(&wi.wedge(&wc).unwrap().scale(eps), &omega);
                    // ε_I is the sign sorting (I, I′).
                    let seq: Vec<usize> = idx.indices().iter().chain(idx.complement().indices()).copied().collect();
                    sign_ok &= permutation_sign(&seq) == idx.epsilon();
                }
                // ν⌋ω = Σ ε_I ⟨ν, ω_I⟩ ω_I′ for every coordinate p-blade ν.
                for nu in blades.iter().filter(|b| b.grades() == [p]) {
                    let nu = nu.scale(a);
                    let by_frame = contract_by_frame(&nu, p, &frame).unwrap();
                    expansion_ok &= close(&by_frame, &nu.contract(&omega).unwrap());
                    expansion_ok &= close(&by_frame, &nu.contract_adjoint(&omega).unwrap());
                }
            }
            // Grades above q contract to zero.
            for nu in blades.iter().filter(|b| b.grades().first().is_some_and(|&g| g > q)) {
                expansion_ok &= nu.contract(&omega).unwrap().norm() == 0.0;
            }
            t.holds(&format!("{label} n={n} q={q}: coordinate reconstruction"), reconstruct_ok);
            t.holds(&format!("{label} n={n} q={q}: sign rule"), sign_ok);
            t.holds(&format!("{label} n={n} q={q}: contraction expansion"), expansion_ok);
        }
    }
}

fn exhaustive_small_cases() -> Outcome {
    let mut t = Tally::default();
    exhaustive_field::<f64>(&mut t, "real");
    exhaustive_field::<Complex64>(&mut t, "complex");
    t.finish("n = 1..5, both fields".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [Criterion; 6] = [
        ("1 golden examples", golden_examples),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 identity suites", identity_suites),
        ("4 metric axioms", metric_axioms),
        ("5 bound suites", bound_suites),
        ("6 exhaustive small cases", exhaustive_small_cases),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let t0 = Instant::now();
        match run() {
            Ok(detail) => println!("[PASS] {name} ({:.2?}): {detail}", t0.elapsed()),
            Err(failures) => {
                all = false;
                println!("[FAIL] {name} ({:.2?})", t0.elapsed());
                for f in failures {
                    println!("       {f}");
                }
            }
        }
    }
    println!("acceptance finished in {:.2?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
