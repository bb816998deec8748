//! Command-line front end.
//!
//! Exit codes: 0 when every case passes, 1 when a case fails or a
//! computation errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::kernels::airy::airy_with;
use crate::kernels::kernel::{airy_heat, canonical_a, KernelParams};
use crate::kernels::quad::QuadSpec;
use crate::pde::{duality_partial_sums, DualityScan};
use crate::report::{format_float, VerificationReport};
use crate::suites::{duality_cases, run_all, run_suite, Grid, SuiteConfig, SUITES};

pub const QUAD_TOL_ENV: &str = "AIRYHERM_QUAD_TOL";

#[derive(Parser, Debug)]
#[command(
    name = "airyherm",
    version,
    about = "Verify lacunary Hermite, Airy-heat and Gould-Hopper identities"
)]
struct Cli {
    /// Relative tolerance for quadrature (overrides AIRYHERM_QUAD_TOL).
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Replace every case tolerance.
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol_override: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one verification suite.
    Verify(VerifyArgs),
    /// Gaussian-moment partial sums of the heat-smoothed kernel.
    Duality {
        #[command(subcommand)]
        action: DualityAction,
    },
    /// Evaluate a function at a point or on a grid.
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Run every suite and write the combined report.
    Report {
        #[arg(long)]
        json: PathBuf,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = SUITES)]
    suite: String,
    /// Series order (lacunary only).
    #[arg(long)]
    order: Option<usize>,
    /// Number of evaluation points (lacunary only).
    #[arg(long)]
    points: Option<usize>,
    /// `t=LIST;x=LIST` (cube only).
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum DualityAction {
    Scan {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 50.0)]
        tau: f64,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 8)]
        jmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Points {
    #[arg(
        long,
        allow_negative_numbers = true,
        conflicts_with = "grid",
        required_unless_present = "grid"
    )]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Write `t,x,value` rows here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum EvalTarget {
    /// Ai(x); the `t` column of CSV output is 1.
    Airy(Points),
    /// The kernel of `u_t = a u^(m) + (s/2) u''` at time `t`.
    Kernel {
        /// Defaults to the canonical coefficient for `m`.
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 0.0)]
        s: f64,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[command(flatten)]
        points: Points,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn quad_spec(flag: Option<f64>) -> std::result::Result<QuadSpec<f64>, Failure> {
    let tol =
        match flag {
            Some(t) => Some(t),
            None => match std::env::var(QUAD_TOL_ENV) {
                Ok(v) => Some(v.trim().parse::<f64>().map_err(|_| {
                    Failure::Usage(format!("{QUAD_TOL_ENV}='{v}' is not a number"))
                })?),
                Err(_) => None,
            },
        };
    match tol {
        Some(t) => QuadSpec::with_rel_tol(t).map_err(|e| Failure::Usage(e.to_string())),
        None => Ok(QuadSpec::default()),
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut cfg = SuiteConfig {
        quad: quad_spec(cli.quad_tol)?,
        tol_override: cli.tol_override,
        ..SuiteConfig::default()
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(tol) = cli.tol_override {
        if tol.is_nan() {
            return Err(Failure::Usage("--tol-override must be a number".into()));
        }
    }
    match cli.command {
        Command::Verify(args) => verify(args, cfg, out, err),
        Command::Duality {
            action:
                DualityAction::Scan {
                    m,
                    tau,
                    t,
                    x,
                    jmax,
                    json,
                },
        } => duality(m, tau, t, x, jmax, json.as_deref(), &cfg, out, err),
        Command::Eval { target } => eval(target, &cfg.quad, out),
        Command::Report { json } => {
            let bundle = run_all(&cfg)?;
            write_file(&json, &bundle.to_json())?;
            for r in &bundle.suites {
                summarize(r, out);
            }
            if let Some(r) = bundle.suites.iter().find(|r| !r.all_passed()) {
                report_failure(r, err);
            }
            Ok(bundle.all_passed())
        }
    }
}

fn verify(
    args: VerifyArgs,
    mut cfg: SuiteConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if args.suite != "lacunary" && (args.order.is_some() || args.points.is_some()) {
        return Err(Failure::Usage(
            "--order and --points apply to the lacunary suite".into(),
        ));
    }
    if args.suite != "cube" && args.grid.is_some() {
        return Err(Failure::Usage("--grid applies to the cube suite".into()));
    }
    if let Some(order) = args.order {
        cfg.lacunary_order = order;
    }
    if let Some(points) = args.points {
        cfg.lacunary_points = points;
    }
    if let Some(spec) = &args.grid {
        cfg.cube_grid = Grid::parse(spec, &cfg.cube_grid).map_err(usage)?;
    }
    let report = run_suite(&args.suite, &cfg).map_err(usage)?;
    finish(&report, args.json.as_deref(), out, err)
}

fn finish(
    report: &VerificationReport,
    json: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if let Some(path) = json {
        write_file(path, &report.to_json())?;
    }
    summarize(report, out);
    report_failure(report, err);
    Ok(report.all_passed())
}

fn summarize(report: &VerificationReport, out: &mut dyn Write) {
    let s = report.summary;
    let _ = writeln!(out, "{}: {}/{} passed", report.suite, s.passed, s.total);
}

fn report_failure(report: &VerificationReport, err: &mut dyn Write) {
    if let Some(c) = report.first_failure() {
        let detail = c
            .params
            .get("error")
            .map(|e| format!(" ({e})"))
            .unwrap_or_default();
        let _ = writeln!(
            err,
            "FAIL {} {}: metric {} exceeds tol {}{detail}",
            report.suite,
            c.name,
            format_float(c.metric),
            format_float(c.tol)
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn duality(
    m: usize,
    tau: f64,
    t: f64,
    x: f64,
    jmax: usize,
    json: Option<&Path>,
    cfg: &SuiteConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scan = DualityScan::new(m, tau, t, x, jmax).map_err(usage)?;
    let scan = duality_partial_sums(scan, &cfg.quad)?;
    let _ = writeln!(out, "oracle {}", format_float(scan.oracle));
    for (j, (s, e)) in scan.partial_sums.iter().zip(&scan.errors).enumerate() {
        let _ = writeln!(
            out,
            "J={j} partial_sum {} error {}",
            format_float(*s),
            format_float(*e)
        );
    }
    let mut report = VerificationReport::new("duality", duality_cases(&scan, 1e-3));
    if let Some(tol) = cfg.tol_override {
        report = report.with_tol_override(tol);
    }
    finish(&report, json, out, err)
}

fn write_file(path: &Path, contents: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

/// `v` with `digits` significant digits, in positional notation when the
/// exponent is moderate.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - exp;
    if exp >= -5 && exp < digits as i32 {
        let s = format!("{v:.*}", decimals as usize);
        // rounding may carry into a new leading digit, e.g. 9.99.. -> 10.0
        if s.trim_start_matches('-')
            .replace('.', "")
            .trim_start_matches('0')
            .len()
            > digits
            && decimals > 0
        {
            return format!("{v:.*}", decimals as usize - 1);
        }
        s
    } else {
        format!("{v:.*e}", digits - 1)
    }
}

fn eval(target: EvalTarget, q: &QuadSpec<f64>, out: &mut dyn Write) -> Outcome {
    match target {
        EvalTarget::Airy(points) => eval_points(&points, 1.0, false, &|_t, x| airy_with(x, q), out),
        EvalTarget::Kernel { a, m, s, t, points } => {
            let a = a.unwrap_or_else(|| canonical_a(m));
            KernelParams::new(a, m, s, t).map_err(usage)?;
            let f = |t: f64, x: f64| airy_heat(&KernelParams::new(a, m, s, t)?, x, q);
            eval_points(&points, t, true, &f, out)
        }
    }
}

fn eval_points(
    points: &Points,
    t: f64,
    t_axis: bool,
    f: &dyn Fn(f64, f64) -> crate::error::Result<f64>,
    out: &mut dyn Write,
) -> Outcome {
    let default = Grid {
        t: vec![t],
        x: vec![0.0],
    };
    let grid = match (&points.x, &points.grid) {
        (Some(x), _) => Grid {
            t: vec![t],
            x: vec![*x],
        },
        (None, Some(spec)) => Grid::parse(spec, &default).map_err(usage)?,
        (None, None) => return Err(Failure::Usage("give --x or --grid".into())),
    };
    if !t_axis && grid.t != [1.0] {
        return Err(Failure::Usage("the Airy grid has no t axis".into()));
    }
    let mut rows = Vec::new();
    for (t, x) in grid.points() {
        rows.push((t, x, f(t, x)?));
    }
    if let Some(path) = &points.csv {
        let mut csv = String::from("t,x,value\n");
        for (t, x, v) in &rows {
            csv.push_str(&format!(
                "{},{},{}\n",
                format_float(*t),
                format_float(*x),
                format_float(*v)
            ));
        }
        write_file(path, &csv)?;
    } else if points.x.is_some() {
        let _ = writeln!(out, "{}", format_significant(rows[0].2, 10));
    } else {
        let _ = writeln!(out, "t,x,value");
        for (t, x, v) in &rows {
            let _ = writeln!(
                out,
                "{},{},{}",
                format_float(*t),
                format_float(*x),
                format_float(*v)
            );
        }
    }
    Ok(true)
}
