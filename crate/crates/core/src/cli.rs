//! Command-line front end. All state comes from flags.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::emit::csv::write_locus_csv;
use crate::emit::json::{OrigamiRecord, TrisectionRecord};
use crate::emit::svg::{render_svg, RenderSpec, Scene};
use crate::error::Error;
use crate::geom::Angle;
use crate::locus::{sample_locus, trisect, LocusParams, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::oracles::cross_validate;
use crate::origami::abe_construct;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const ARGUMENT: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const CONVERGENCE: i32 = 4;
    pub const IO: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "trisectrix",
    version,
    about = "Angle trisection by the two-circle locus"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the locus crossing of a target angle (JSON).
    Trisect(CommonArgs),
    /// Sample the locus of Q as a CSV table.
    Locus(CommonArgs),
    /// Build and check the origami fold figure (JSON or text).
    Origami(CommonArgs),
    /// Cross-check every method over an angle sweep.
    Verify(VerifyArgs),
    /// Draw the construction as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Target angle in degrees, in (0, 90].
    #[arg(long, allow_negative_numbers = true)]
    pub angle_deg: Option<f64>,
    /// Fold width a (spacing of the fold lines).
    #[arg(long = "fold", default_value_t = 1.0, allow_negative_numbers = true)]
    pub fold_a: f64,
    /// Solver tolerance in radians.
    #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    pub tol: f64,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub b_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b_max: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 1.0)]
    pub from_deg: f64,
    #[arg(long, default_value_t = 90.0)]
    pub to_deg: f64,
    #[arg(long, default_value_t = 1.0)]
    pub step_deg: f64,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 640)]
    pub width_px: u32,
    #[arg(long, default_value_t = 640)]
    pub height_px: u32,
    #[arg(long, default_value_t = 32)]
    pub margin_px: u32,
    #[arg(long, default_value_t = 1.5)]
    pub stroke_width: f64,
    #[arg(long)]
    pub no_circles: bool,
    #[arg(long)]
    pub no_locus: bool,
    #[arg(long)]
    pub no_rays: bool,
    #[arg(long)]
    pub no_labels: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

/// A failure carrying the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn argument(message: impl Into<String>) -> Self {
        Failure {
            code: exit::ARGUMENT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidParameter { .. }
            | Error::InvalidSampleCount(_)
            | Error::InvalidRange { .. }
            | Error::Malformed(_) => exit::ARGUMENT,
            Error::AngleOutOfRange { .. }
            | Error::ParameterOutOfRange { .. }
            | Error::DegeneratePoint
            | Error::ConcentricCircles
            | Error::NoIntersection => exit::DOMAIN,
            Error::MaxIterationsExceeded { .. } | Error::BracketOverflow { .. } => {
                exit::CONVERGENCE
            }
            Error::Io(_) => exit::IO,
            Error::MismatchDetected { .. } => exit::VERIFICATION_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code. Diagnostics go to `err`; results go to `out` unless
/// `--output` names a file.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::ARGUMENT
            } else {
                exit::SUCCESS
            };
            let _ = if code == exit::SUCCESS {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => exit::SUCCESS,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Trisect(args) => cmd_trisect(args, out),
        Command::Locus(args) => cmd_locus(args, out),
        Command::Origami(args) => cmd_origami(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Render(args) => cmd_render(args, out),
    }
}

fn check_common(args: &CommonArgs) -> std::result::Result<LocusParams, Failure> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(Failure::argument(format!(
            "--tol must be positive, got {}",
            args.tol
        )));
    }
    if let Some(n) = args.samples {
        if n < 2 {
            return Err(Failure::argument(format!(
                "--samples must be at least 2, got {n}"
            )));
        }
    }
    for (flag, v) in [("--b-min", args.b_min), ("--b-max", args.b_max)] {
        if let Some(v) = v {
            if !v.is_finite() {
                return Err(Failure::argument(format!("{flag} must be finite")));
            }
        }
    }
    LocusParams::new(args.fold_a)
        .map_err(|_| Failure::argument(format!("--fold must be positive, got {}", args.fold_a)))
}

/// The target angle, range-checked in degrees before conversion so that
/// e.g. 420° is rejected rather than wrapped to 60°.
fn target(args: &CommonArgs, open_upper: bool) -> std::result::Result<Angle, Failure> {
    let deg = args
        .angle_deg
        .ok_or_else(|| Failure::argument("--angle-deg is required"))?;
    if !deg.is_finite() {
        return Err(Failure::argument("--angle-deg must be finite"));
    }
    let in_range = deg > 0.0 && if open_upper { deg < 90.0 } else { deg <= 90.0 };
    if !in_range {
        let range = if open_upper { "(0, 90)" } else { "(0, 90]" };
        return Err(Failure {
            code: exit::DOMAIN,
            message: format!("angle {deg}° is outside {range}"),
        });
    }
    Ok(Angle::from_degrees(deg))
}

fn format_or(
    args: &CommonArgs,
    default: Format,
    allowed: &[Format],
) -> std::result::Result<Format, Failure> {
    let f = args.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::argument(format!(
            "format {f:?} is not supported here"
        )))
    }
}

fn emit(args: &CommonArgs, bytes: &[u8], out: &mut dyn Write) -> CmdResult {
    let io_failure = |what: &str, e: std::io::Error| Failure {
        code: exit::IO,
        message: format!("{what}: {e}"),
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, bytes).map_err(|e| io_failure(&path.display().to_string(), e))
        }
        None => out
            .write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| io_failure("standard output", e)),
    }
}

pub fn cmd_trisect(args: &CommonArgs, out: &mut dyn Write) -> CmdResult {
    let params = check_common(args)?;
    format_or(args, Format::Json, &[Format::Json])?;
    let three_theta = target(args, false)?;
    let result = trisect(three_theta, &params, args.tol, DEFAULT_MAX_ITER)?;
    let record = TrisectionRecord::new(&result, &params, args.tol);
    emit(args, record.to_json().as_bytes(), out)
}

pub fn cmd_locus(args: &CommonArgs, out: &mut dyn Write) -> CmdResult {
    let params = check_common(args)?;
    format_or(args, Format::Csv, &[Format::Csv])?;
    let b_min = args.b_min.unwrap_or(params.b_start());
    let b_max = args.b_max.unwrap_or(10.0 * params.a());
    let points = sample_locus(&params, b_min, b_max, args.samples.unwrap_or(101))?;
    let mut buf = Vec::new();
    write_locus_csv(&mut buf, &params, &points)?;
    emit(args, &buf, out)
}

pub fn cmd_origami(args: &CommonArgs, out: &mut dyn Write) -> CmdResult {
    check_common(args)?;
    let format = format_or(args, Format::Json, &[Format::Json, Format::Text])?;
    let construction = abe_construct(target(args, true)?)?;
    let record = OrigamiRecord::new(&construction);
    let text = match format {
        Format::Json => record.to_json(),
        _ => {
            let p = &record.points;
            let mut s = format!(
                "3θ = {}°  θ = {}°\nα = {}°  β = {}°  γ = {}°\n",
                record.three_theta_deg,
                record.theta_deg,
                record.alpha_deg,
                record.beta_deg,
                record.gamma_deg
            );
            for (name, pt) in [
                ("O", p.o),
                ("D", p.d),
                ("S", p.s),
                ("H", p.h),
                ("C", p.c),
                ("G", p.g),
                ("P", p.p),
            ] {
                s.push_str(&format!("{name} = {pt}\n"));
            }
            s.push_str(&record.verification.to_string());
            s
        }
    };
    let passed = record.verification.passed();
    emit(args, text.as_bytes(), out)?;
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: exit::VERIFICATION_FAILED,
            message: "origami verification failed".into(),
        })
    }
}

#[derive(Debug, Serialize)]
struct SweepSummary {
    from_deg: f64,
    to_deg: f64,
    step_deg: f64,
    fold_a: f64,
    tol: f64,
    angles: usize,
    failures: Vec<SweepFailure>,
    max_theta_error_rad: f64,
    worst_check: Option<String>,
    worst_residual: f64,
    passed: bool,
}

#[derive(Debug, Serialize)]
struct SweepFailure {
    angle_deg: f64,
    reason: String,
}

/// Sweep angles `from, from + step, …` up to and including `to` (within a
/// hair of rounding). Each angle is `from + i·step`, not an accumulated sum.
fn sweep_angles(from: f64, to: f64, step: f64) -> std::result::Result<Vec<f64>, Failure> {
    if !(from.is_finite() && to.is_finite() && step.is_finite() && step > 0.0 && from <= to) {
        return Err(Failure::argument(
            "sweep needs finite --from-deg <= --to-deg and --step-deg > 0",
        ));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| from + step * i as f64).collect())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let common = &args.common;
    let params = check_common(common)?;
    let format = format_or(common, Format::Text, &[Format::Text, Format::Json])?;
    let angles = sweep_angles(args.from_deg, args.to_deg, args.step_deg)?;
    if angles.iter().any(|&d| !(d > 0.0 && d <= 90.0)) {
        return Err(Failure {
            code: exit::DOMAIN,
            message: "sweep must stay within (0, 90]".into(),
        });
    }

    let mut summary = SweepSummary {
        from_deg: args.from_deg,
        to_deg: args.to_deg,
        step_deg: args.step_deg,
        fold_a: params.a(),
        tol: common.tol,
        angles: angles.len(),
        failures: Vec::new(),
        max_theta_error_rad: 0.0,
        worst_check: None,
        worst_residual: 0.0,
        passed: true,
    };
    for &deg in &angles {
        let outcome = cross_validate(Angle::from_degrees(deg), params.a(), common.tol);
        let report = match &outcome {
            Ok(r) => Some(r),
            Err(Error::MismatchDetected { report, .. }) => Some(report.as_ref()),
            Err(_) => None,
        };
        if let Some(r) = report {
            let err = r.theta_locus.separation(r.theta_oracle);
            summary.max_theta_error_rad = summary.max_theta_error_rad.max(err);
            if let Some(w) = r.report.worst() {
                if w.residual > summary.worst_residual || summary.worst_check.is_none() {
                    summary.worst_residual = w.residual;
                    summary.worst_check = Some(format!("{} at {deg}°", w.name));
                }
            }
        }
        if let Err(e) = outcome {
            summary.failures.push(SweepFailure {
                angle_deg: deg,
                reason: e.to_string(),
            });
        }
    }
    summary.passed = summary.failures.is_empty();

    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&summary).expect("summary serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!(
                "swept {} angles from {}° to {}° (step {}°), a = {}, tol = {:e}\n",
                summary.angles,
                summary.from_deg,
                summary.to_deg,
                summary.step_deg,
                summary.fold_a,
                summary.tol
            );
            s.push_str(&format!(
                "max |θ − 3θ/3|: {:e} rad\n",
                summary.max_theta_error_rad
            ));
            if let Some(w) = &summary.worst_check {
                s.push_str(&format!(
                    "worst residual: {:e} ({w})\n",
                    summary.worst_residual
                ));
            }
            for f in &summary.failures {
                s.push_str(&format!("FAIL {}°: {}\n", f.angle_deg, f.reason));
            }
            s.push_str(if summary.passed {
                "result: pass\n"
            } else {
                "result: FAIL\n"
            });
            s
        }
    };
    emit(common, text.as_bytes(), out)?;
    if summary.passed {
        Ok(())
    } else {
        Err(Failure {
            code: exit::VERIFICATION_FAILED,
            message: format!(
                "{} of {} angles failed",
                summary.failures.len(),
                summary.angles
            ),
        })
    }
}

pub fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> CmdResult {
    let common = &args.common;
    let params = check_common(common)?;
    format_or(common, Format::Svg, &[Format::Svg])?;
    let spec = RenderSpec {
        width_px: args.width_px,
        height_px: args.height_px,
        margin_px: args.margin_px,
        stroke_width: args.stroke_width,
        circles: !args.no_circles,
        locus: !args.no_locus,
        rays: !args.no_rays,
        labels: !args.no_labels,
    };
    spec.validate()
        .map_err(|e| Failure::argument(e.to_string()))?;
    let three_theta = match common.angle_deg {
        Some(_) => Some(target(common, false)?),
        None => None,
    };
    let scene = Scene::build(
        params,
        three_theta,
        common.b_min,
        common.b_max,
        common.samples.unwrap_or(200),
        common.tol,
        DEFAULT_MAX_ITER,
    )?;
    let svg = render_svg(&scene, &spec)?;
    emit(common, svg.as_bytes(), out)
}
