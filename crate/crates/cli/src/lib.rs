//! Command-line front end: JSON reports on stdout, optional CSV tables.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod report;
mod table;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ortho_zeros::convexity::label_string;
use ortho_zeros::sweep::{default_sweep, parse_range, run_sweep, FamilyGrid, SweepGrid};
use ortho_zeros::{
    classify_empirical, classify_theoretical, compute_zeros, critical_points, f_eval, j_eval,
    validate, verify_suite, Error, FamilyKind, FamilySpec, Purpose,
};

use report::{ClassificationPayload, NormalFormPayload, NormalFormPoint, Payload, ReportEnvelope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

const SYNOPSIS: &str = "usage: ortho-zeros <zeros|normal-form|classify|bounds|verify> \
--family <laguerre|jacobi|ultraspherical> --alpha A [--beta B] --n N [--csv PATH] [--tol R]";

#[derive(Parser, Debug)]
#[command(name = "ortho-zeros", version)]
#[command(
    about = "Zeros, normal forms, convexity and spacing bounds of classical orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Also write the report as CSV to this file
    #[arg(long, global = true)]
    csv: Option<PathBuf>,

    /// Relative tolerance below which a second difference counts as zero
    #[arg(long, global = true, default_value_t = ortho_zeros::convexity::DEFAULT_TOL_REL)]
    tol: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zeros, spacings and second differences
    Zeros(SpecArgs),
    /// F and j on a grid, with the critical points of F
    NormalForm {
        #[command(flatten)]
        spec: SpecArgs,
        /// Evaluation grid as lo:hi:count (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        t_grid: Option<String>,
    },
    /// Theoretical partition and per-triple verdicts
    Classify(SpecArgs),
    /// Local and global spacing bounds checked on every gap
    Bounds(SpecArgs),
    /// Runs the full check suite over a grid of specs
    Verify(SweepArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Laguerre,
    Jacobi,
    Ultraspherical,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Laguerre => FamilyKind::Laguerre,
            FamilyArg::Jacobi => FamilyKind::Jacobi,
            FamilyArg::Ultraspherical => FamilyKind::Ultraspherical,
        }
    }
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// Second parameter, Jacobi only
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Degree
    #[arg(long)]
    n: usize,
}

impl SpecArgs {
    fn spec(&self) -> FamilySpec {
        FamilySpec {
            kind: self.family.into(),
            alpha: self.alpha,
            beta: self.beta,
            degree: self.n,
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Named built-in sweep
    #[arg(long, value_parser = ["default"], conflicts_with_all = ["family", "alpha", "beta", "n"])]
    sweep: Option<String>,
    #[arg(long, value_enum, requires_all = ["alpha", "n"])]
    family: Option<FamilyArg>,
    /// Parameter range lo:hi:step or a single value; repeatable
    #[arg(long, allow_hyphen_values = true)]
    alpha: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Vec<String>,
    #[arg(long)]
    n: Vec<String>,
}

/// A failure that ends the run with a given exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("{}\n{SYNOPSIS}", message.into()),
        }
    }

    fn from_error(spec: &FamilySpec, operation: &str, e: Error) -> Self {
        if e.is_numerical() {
            Failure {
                code: EXIT_NUMERICAL,
                message: format!("{operation} failed for {spec}: {e}"),
            }
        } else {
            Failure::usage(format!("{operation} rejected {spec}: {e}"))
        }
    }
}

/// Parses `argv` (including the program name), executes the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok((envelope, code)) => {
            if let Some(path) = &cli.csv {
                if let Err(e) = table::write_csv(path, &envelope.payload) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            println!("{}", envelope.to_json());
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> Result<(ReportEnvelope, i32), Failure> {
    match &cli.command {
        Command::Zeros(args) => {
            let spec = args.spec();
            let zs = compute_zeros(&spec).map_err(|e| Failure::from_error(&spec, "zeros", e))?;
            Ok((ReportEnvelope::new(Some(spec), Payload::Zeros(zs)), EXIT_OK))
        }
        Command::NormalForm { spec, t_grid } => {
            let spec = spec.spec();
            let payload = normal_form(&spec, t_grid.as_deref())?;
            Ok((
                ReportEnvelope::new(Some(spec), Payload::NormalForm(payload)),
                EXIT_OK,
            ))
        }
        Command::Classify(args) => {
            let spec = args.spec();
            let payload = classify(&spec, cli.tol)?;
            let code = if payload.counts.is_some_and(|c| c.disagrees > 0) {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            Ok((
                ReportEnvelope::new(Some(spec), Payload::Classification(payload)),
                code,
            ))
        }
        Command::Bounds(args) => {
            let spec = args.spec();
            let report =
                verify_suite(&spec).map_err(|e| Failure::from_error(&spec, "bounds", e))?;
            let code = if report.counted_violations().next().is_some() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            Ok((
                ReportEnvelope::new(Some(spec), Payload::Bounds(report)),
                code,
            ))
        }
        Command::Verify(args) => {
            let grid = sweep_grid(args)?;
            let summary = run_sweep(&grid, cli.tol);
            let t = &summary.totals;
            let code = if t.specs_failed > 0 {
                EXIT_NUMERICAL
            } else if t.is_clean() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            };
            Ok((ReportEnvelope::new(None, Payload::Sweep(summary)), code))
        }
    }
}

fn normal_form(spec: &FamilySpec, t_grid: Option<&str>) -> Result<NormalFormPayload, Failure> {
    let profile = critical_points(spec).map_err(|e| Failure::from_error(spec, "normal form", e))?;
    let ts = match t_grid {
        Some(text) => parse_grid(text)?,
        None => Vec::new(),
    };
    let mut grid = Vec::with_capacity(ts.len());
    for t in ts {
        let f = f_eval(spec, t).map_err(|e| Failure::from_error(spec, "normal form", e))?;
        let j = match spec.kind {
            FamilyKind::Laguerre => None,
            _ => Some(j_eval(spec, t).map_err(|e| Failure::from_error(spec, "normal form", e))?),
        };
        grid.push(NormalFormPoint { t, f, j });
    }
    Ok(NormalFormPayload { profile, grid })
}

/// `lo:hi:count`, `count` evenly spaced points including both ends.
fn parse_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::usage(format!("bad --t-grid {text:?}: expected lo:hi:count"));
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count == 0 || !(lo <= hi) || !lo.is_finite() || !hi.is_finite() || count > 1_000_000 {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            if i + 1 == count {
                hi
            } else {
                lo + i as f64 * step
            }
        })
        .collect())
}

fn classify(spec: &FamilySpec, tol: f64) -> Result<ClassificationPayload, Failure> {
    if !(tol >= 0.0) || !tol.is_finite() {
        return Err(Failure::usage(format!(
            "--tol must be a non-negative number, got {tol}"
        )));
    }
    let fail = |e| Failure::from_error(spec, "classify", e);
    validate(*spec, Purpose::ZeroComputation).map_err(fail)?;
    let profile = critical_points(spec).map_err(fail)?;
    let report = classify_theoretical(spec, &profile).map_err(fail)?;
    let zs = compute_zeros(spec).map_err(fail)?;
    let empirical = if zs.len() >= 3 {
        Some(classify_empirical(&zs, &report, tol).map_err(fail)?)
    } else {
        None
    };
    let counts = empirical.as_ref().map(|e| e.counts());
    let empirical_labels = empirical
        .as_ref()
        .map(|e| label_string(&e.label_sequence()));
    Ok(ClassificationPayload {
        report,
        empirical,
        counts,
        empirical_labels,
    })
}

fn sweep_grid(args: &SweepArgs) -> Result<SweepGrid, Failure> {
    if args.sweep.is_some() {
        return Ok(default_sweep());
    }
    let Some(family) = args.family else {
        return Err(Failure::usage(
            "verify needs --sweep default or --family with --alpha and --n ranges",
        ));
    };
    let kind: FamilyKind = family.into();
    let ranges = |list: &[String]| -> Result<Vec<f64>, Failure> {
        let mut out = Vec::new();
        for text in list {
            out.extend(parse_range(text).map_err(Failure::usage)?);
        }
        Ok(out)
    };
    let alphas = ranges(&args.alpha)?;
    let betas = ranges(&args.beta)?;
    match (kind, betas.is_empty()) {
        (FamilyKind::Jacobi, true) => return Err(Failure::usage("jacobi sweeps need --beta")),
        (FamilyKind::Laguerre | FamilyKind::Ultraspherical, false) => {
            return Err(Failure::usage(format!(
                "--beta is only valid for jacobi, not {kind}"
            )))
        }
        _ => {}
    }
    let mut degrees = Vec::new();
    for v in ranges(&args.n)? {
        if v.fract() != 0.0 || v < 1.0 {
            return Err(Failure::usage(format!(
                "degree {v} is not a positive integer"
            )));
        }
        degrees.push(v as usize);
    }
    let grid = SweepGrid {
        name: "custom".to_string(),
        families: vec![FamilyGrid {
            kind,
            alphas,
            betas,
            degrees,
        }],
    };
    for spec in grid.specs() {
        for purpose in [Purpose::ZeroComputation, Purpose::Classification] {
            validate(spec, purpose).map_err(|e| Failure::from_error(&spec, "verify", e))?;
        }
    }
    Ok(grid)
}
