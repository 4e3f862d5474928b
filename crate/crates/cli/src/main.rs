//! `grassmann`: angles between subspaces from JSON documents.
//!
//! Every exit path prints one JSON value. Exit codes: 0 success, 1 failed
//! verification, 2 invalid input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grassmann_core::grassmann::{angle_report, oriented_angle, OrientedSubspace};
use grassmann_core::io::{number, AnyDocument, Document, DocumentPair, JsonScalar};
use grassmann_core::metrics::{fubini_study, geodesic_point};
use grassmann_core::principal::{principal_angles, principal_decomposition};
use grassmann_core::random::{random_subspace, seeded};
use grassmann_core::verify::{run_suite, Suite, VerifyOptions};
use grassmann_core::{Complex64, Error, ToleranceConfig};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "grassmann", version, about = "Grassmann angles between real or complex subspaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Angle report for an ordered pair of subspaces.
    Angle {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        degrees: bool,
        /// Treat each vector list as an ordered frame and add the oriented angle.
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Principal angles with principal bases.
    Principal {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Haar-random subspace of dimension `dim` in `n` dimensions.
    Random {
        n: usize,
        dim: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded randomized verification of the identities and bounds.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        dim_max: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Point at arc length `t` (radians) on the geodesic from `left` toward `right`.
    Geodesic {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        t: f64,
        /// Phase in radians; over the reals only 0 and π are meaningful.
        #[arg(long)]
        phase: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

/// An error together with the input it concerns.
struct Failure {
    error: Error,
    field: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let field = match &error {
            Error::InvalidDocument { field, .. } => Some(field.clone()),
            _ => None,
        };
        Failure { error, field }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::NotSquare { .. } => "not_square",
        Error::Singular => "singular",
        Error::NotPositiveDefinite => "not_positive_definite",
        Error::IllConditioned { .. } => "ill_conditioned",
        Error::ZeroSubspace => "zero_subspace",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::WrongField { .. } => "wrong_field",
        Error::InvalidTolerance(_) => "invalid_tolerance",
        Error::Precondition(_) => "precondition",
        Error::InvalidDocument { .. } => "invalid_document",
    }
}

fn input_failure(field: &str, message: String) -> Failure {
    Failure {
        error: Error::Precondition(message),
        field: Some(field.to_string()),
    }
}

fn error_value(kind: &str, field: Option<&str>, message: &str) -> Value {
    let mut e = json!({ "kind": kind, "message": message });
    if let Some(f) = field {
        e["field"] = json!(f);
    }
    json!({ "error": e })
}

fn read_document(path: &Path, arg: &str) -> Result<AnyDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_failure(arg, format!("cannot read {}: {e}", path.display())))?;
    AnyDocument::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.field = f.field.map(|inner| format!("{arg}.{inner}"));
        f
    })
}

fn read_pair(left: &Path, right: &Path) -> Result<DocumentPair, Failure> {
    let pair = AnyDocument::pair(read_document(left, "left")?, read_document(right, "right")?)?;
    Ok(pair)
}

fn angle_value(x: f64, degrees: bool) -> Value {
    number(if degrees { x.to_degrees() } else { x })
}

fn angles_value(xs: &[f64], degrees: bool) -> Value {
    Value::Array(xs.iter().map(|&x| angle_value(x, degrees)).collect())
}

fn vectors_value<S: JsonScalar>(ambient_dim: usize, vectors: Vec<Vec<S>>) -> Value {
    Document { ambient_dim, vectors }.to_value()["vectors"].take()
}

fn angle<S: JsonScalar>(
    left: &Document<S>,
    right: &Document<S>,
    degrees: bool,
    oriented: bool,
    cfg: &ToleranceConfig,
) -> Result<Value, Failure> {
    let v = left.subspace(cfg)?;
    let w = right.subspace(cfg)?;
    let report = angle_report(&v, &w, cfg)?;
    let mut out = json!({
        "field": S::FIELD,
        "ambient_dim": v.ambient_dim(),
        "dim_left": v.dim(),
        "dim_right": w.dim(),
        "units": if degrees { "degrees" } else { "radians" },
        "principal_angles": angles_value(&principal_angles(&v, &w, cfg)?, degrees),
        "theta": angle_value(report.theta, degrees),
        "theta_reverse": angle_value(report.theta_reverse, degrees),
        "theta_perp": angle_value(report.theta_perp, degrees),
        "theta_min_sym": angle_value(report.theta_min_sym, degrees),
        "theta_max_sym": angle_value(report.theta_max_sym, degrees),
        "projection_factor": number(report.projection_factor),
        "fubini_study": angle_value(fubini_study(&v, &w, cfg)?, degrees),
    });
    if oriented {
        let a = OrientedSubspace::new(left.ambient_dim, &left.vectors, cfg)?;
        let b = OrientedSubspace::new(right.ambient_dim, &right.vectors, cfg)?;
        let o = oriented_angle(&a, &b, cfg)?;
        out["oriented"] = json!({
            "cos": o.cos_value.to_json(),
            "magnitude": angle_value(o.magnitude, degrees),
            "phase": o.phase.map_or(Value::Null, |p| angle_value(p, degrees)),
        });
    }
    Ok(out)
}

fn principal<S: JsonScalar>(
    left: &Document<S>,
    right: &Document<S>,
    degrees: bool,
    cfg: &ToleranceConfig,
) -> Result<Value, Failure> {
    let v = left.subspace(cfg)?;
    let w = right.subspace(cfg)?;
    let n = v.ambient_dim();
    let mut out = json!({
        "field": S::FIELD,
        "ambient_dim": n,
        "dim_left": v.dim(),
        "dim_right": w.dim(),
        "units": if degrees { "degrees" } else { "radians" },
    });
    if v.is_zero() || w.is_zero() {
        for k in ["angles", "cosines", "sines", "left_basis", "right_basis"] {
            out[k] = json!([]);
        }
        return Ok(out);
    }
    let pd = principal_decomposition(&v, &w, cfg)?;
    out["angles"] = angles_value(&pd.angles, degrees);
    out["cosines"] = Value::Array(pd.cosines.iter().map(|&x| number(x)).collect());
    out["sines"] = Value::Array(pd.sines.iter().map(|&x| number(x)).collect());
    out["left_basis"] = vectors_value(n, pd.left_basis.to_columns());
    out["right_basis"] = vectors_value(n, pd.right_basis.to_columns());
    Ok(out)
}

fn geodesic<S: JsonScalar>(
    left: &Document<S>,
    right: &Document<S>,
    t: f64,
    phase: Option<f64>,
    cfg: &ToleranceConfig,
) -> Result<Value, Failure> {
    let u = left.subspace(cfg)?;
    let w = right.subspace(cfg)?;
    let v = geodesic_point(&u, &w, t, phase, cfg)?;
    Ok(Document::from_subspace(&v).to_value())
}

fn random(n: usize, dim: usize, field: FieldArg, seed: u64) -> Result<Value, Failure> {
    if n == 0 {
        return Err(input_failure("n", "ambient dimension must be at least 1".into()));
    }
    if dim > n {
        return Err(input_failure("dim", format!("dim {dim} exceeds ambient dimension {n}")));
    }
    let mut rng = seeded(seed);
    Ok(match field {
        FieldArg::Real => Document::from_subspace(&random_subspace::<f64>(&mut rng, n, dim)).to_value(),
        FieldArg::Complex => {
            Document::from_subspace(&random_subspace::<Complex64>(&mut rng, n, dim)).to_value()
        }
    })
}

/// The JSON result and whether it counts as success.
fn dispatch(command: Command) -> Result<(Value, bool, Option<PathBuf>), Failure> {
    let cfg = ToleranceConfig::default();
    Ok(match command {
        Command::Angle {
            left,
            right,
            degrees,
            oriented,
            out,
        } => {
            let v = match read_pair(&left, &right)? {
                DocumentPair::Real(a, b) => angle(&a, &b, degrees, oriented, &cfg)?,
                DocumentPair::Complex(a, b) => angle(&a, &b, degrees, oriented, &cfg)?,
            };
            (v, true, out)
        }
        Command::Principal {
            left,
            right,
            degrees,
            out,
        } => {
            let v = match read_pair(&left, &right)? {
                DocumentPair::Real(a, b) => principal(&a, &b, degrees, &cfg)?,
                DocumentPair::Complex(a, b) => principal(&a, &b, degrees, &cfg)?,
            };
            (v, true, out)
        }
        Command::Random {
            n,
            dim,
            field,
            seed,
            out,
        } => (random(n, dim, field, seed)?, true, out),
        Command::Verify {
            suite,
            dim_max,
            trials,
            seed,
            out,
        } => {
            let opts = VerifyOptions { dim_max, trials, seed };
            let report = run_suite(suite, &opts, &cfg).map_err(|e| {
                let mut f = Failure::from(e);
                f.field = Some("dim-max".into());
                f
            })?;
            let passed = report.passed;
            let v = serde_json::to_value(report).expect("report serializes");
            (v, passed, out)
        }
        Command::Geodesic {
            left,
            right,
            t,
            phase,
            out,
        } => {
            let v = match read_pair(&left, &right)? {
                DocumentPair::Real(a, b) => geodesic(&a, &b, t, phase, &cfg)?,
                DocumentPair::Complex(a, b) => geodesic(&a, &b, t, phase, &cfg)?,
            };
            (v, true, out)
        }
    })
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(std::io::stdout().lock(), "{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            let message = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            emit(&render(&error_value("usage", None, message)));
            return ExitCode::from(2);
        }
    };
    match dispatch(cli.command) {
        Ok((value, passed, out)) => {
            let text = render(&value);
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, format!("{text}\n")) {
                        let message = format!("cannot write {}: {e}", path.display());
                        emit(&render(&error_value("io", Some("out"), &message)));
                        return ExitCode::from(2);
                    }
                    emit(&render(&json!({ "out": path.display().to_string(), "passed": passed })));
                }
                None => emit(&text),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            let message = f.error.to_string();
            emit(&render(&error_value(kind(&f.error), f.field.as_deref(), &message)));
            ExitCode::from(2)
        }
    }
}
