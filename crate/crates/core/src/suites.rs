//! Named verification suites, each a list of pass/fail cases.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hermite::{
    derived_heat_poly, derived_heat_poly_physicists_form, gh_initial_condition,
    gh_pde_residual_exact,
};
use crate::kernels::airy::{airy_contour, airy_series};
use crate::kernels::kernel::{
    airy_heat, convolve, derived_heat_quadrature, heat_kernel, heat_window, KernelParams,
};
use crate::kernels::quad::QuadSpec;
use crate::lacunary::{certification_points, default_points, verify_lacunary, LacunaryCase};
use crate::pde::{
    characteristic_roots, duality_partial_sums, moment_identity, residual_fd, separated_solution,
    verify_cube_completion, verify_eq10, verify_quartic_origin, verify_scaling, DualityScan,
    FieldProbe, ParticularSolution, PdeCoefficients,
};
use crate::report::{format_float, Case, ReportBundle, VerificationReport};

pub const SUITES: [&str; 11] = [
    "airy",
    "convolution",
    "cube",
    "duality",
    "eq10",
    "gould-hopper",
    "lacunary",
    "moments",
    "omega",
    "residual",
    "scaling",
];

/// A `t` by `x` evaluation grid, iterated row-major (`t` outer).
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub t: Vec<f64>,
    pub x: Vec<f64>,
}

impl Grid {
    /// Parses `t=LIST;x=LIST`, either part optional (missing parts take
    /// `default`). A `LIST` is comma-separated values or `start:stop:step`.
    pub fn parse(spec: &str, default: &Grid) -> Result<Self> {
        let mut grid = default.clone();
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, list) = part
                .split_once('=')
                .ok_or_else(|| Error::Domain(format!("grid part '{part}' is not key=list")))?;
            let values = parse_list(list)?;
            match key.trim() {
                "t" => grid.t = values,
                "x" => grid.x = values,
                other => return Err(Error::Domain(format!("unknown grid axis '{other}'"))),
            }
        }
        Ok(grid)
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.t
            .iter()
            .flat_map(move |t| self.x.iter().map(move |x| (*t, *x)))
    }

    pub fn cube_default() -> Self {
        Self {
            t: vec![0.25, 0.5, 1.0, 2.0],
            x: (0..=8).map(|k| -2.0 + 0.5 * k as f64).collect(),
        }
    }
}

fn parse_number(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("'{s}' is not a number")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("'{s}' is not finite")))
    }
}

fn parse_list(list: &str) -> Result<Vec<f64>> {
    let fields: Vec<&str> = list.split(':').collect();
    let values = match fields.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (
                parse_number(start)?,
                parse_number(stop)?,
                parse_number(step)?,
            );
            if !(step > 0.0) || stop < start {
                return Err(Error::Domain(format!("bad range '{list}'")));
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            if n > 100_000 {
                return Err(Error::Domain(format!("range '{list}' has too many points")));
            }
            (0..=n).map(|k| start + step * k as f64).collect()
        }
        [_] => list
            .split(',')
            .map(parse_number)
            .collect::<Result<Vec<_>>>()?,
        _ => return Err(Error::Domain(format!("bad list '{list}'"))),
    };
    if values.is_empty() {
        return Err(Error::Domain("empty grid list".into()));
    }
    Ok(values)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub quad: QuadSpec<f64>,
    /// Seed for the randomized residual points.
    pub seed: u64,
    /// Replaces every case tolerance when set.
    pub tol_override: Option<f64>,
    pub lacunary_order: usize,
    pub lacunary_points: usize,
    pub cube_grid: Grid,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            quad: QuadSpec::default(),
            seed: 2024,
            tol_override: None,
            lacunary_order: 12,
            lacunary_points: 40,
            cube_grid: Grid::cube_default(),
        }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let q = &cfg.quad;
    let report = match name {
        "airy" => airy_suite(q),
        "convolution" => convolution_suite(q),
        "cube" => cube_suite(&cfg.cube_grid, q),
        "duality" => duality_suite(q),
        "eq10" => eq10_suite(q),
        "gould-hopper" => gould_hopper_suite(),
        "lacunary" => lacunary_suite(cfg.lacunary_order, cfg.lacunary_points)?,
        "moments" => moments_suite(q),
        "omega" => omega_suite(q),
        "residual" => residual_suite(cfg.seed, q),
        "scaling" => scaling_suite(q),
        other => return Err(Error::Domain(format!("unknown suite '{other}'"))),
    };
    Ok(match cfg.tol_override {
        Some(tol) => report.with_tol_override(tol),
        None => report,
    })
}

pub fn run_all(cfg: &SuiteConfig) -> Result<ReportBundle> {
    let reports = SUITES
        .iter()
        .map(|s| run_suite(s, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportBundle::new(reports))
}

fn relative_case(name: String, lhs: f64, rhs: f64, tol: f64) -> Case {
    let err = (lhs - rhs).abs() / rhs.abs();
    Case::new(name, err, tol)
        .param("lhs", format_float(lhs))
        .param("rhs", format_float(rhs))
}

pub fn lacunary_suite(order: usize, points: usize) -> Result<VerificationReport> {
    if order == 0 || points == 0 {
        return Err(Error::Domain(
            "lacunary suite needs order and points >= 1".into(),
        ));
    }
    let mut cases = Vec::new();
    for u in default_points(points) {
        let name = format!("u={u}");
        let case = match LacunaryCase::new(u.clone(), order).and_then(|c| verify_lacunary(&c)) {
            Ok(v) => {
                let mismatches = v
                    .lhs
                    .coeffs()
                    .iter()
                    .zip(v.rhs.coeffs())
                    .filter(|(a, b)| a != b)
                    .count();
                let mut c = Case::new(name, mismatches as f64, 0.0).param("order", order);
                if let Some(i) = v.first_mismatch {
                    c = c.param("first_mismatch", i);
                }
                c
            }
            Err(e) => Case::failed(name, 0.0, &e),
        };
        cases.push(case.param("u", &u));
    }
    let needed = certification_points(order);
    cases.push(
        Case::new("certificate", needed.saturating_sub(points) as f64, 0.0)
            .param("points", points)
            .param("points_needed", needed),
    );
    Ok(VerificationReport::new("lacunary", cases))
}

pub fn gould_hopper_suite() -> VerificationReport {
    let mut cases = Vec::new();
    for n in 2..=6 {
        for j in 0..=24 {
            let name = format!("residual n={n} j={j:02}");
            cases.push(match gh_pde_residual_exact::<BigRational>(n, j) {
                Ok(r) => Case::new(name, r.support_size() as f64, 0.0),
                Err(e) => Case::failed(name, 0.0, &e),
            });
            let name = format!("initial n={n} j={j:02}");
            cases.push(match gh_initial_condition::<BigRational>(n, j) {
                Ok(p) => {
                    let ok = p.degree() == Some(j)
                        && p.coeff(j) == BigRational::one()
                        && p.coeffs()[..j].iter().all(Zero::is_zero);
                    Case::new(name, if ok { 0.0 } else { 1.0 }, 0.0)
                }
                Err(e) => Case::failed(name, 0.0, &e),
            });
        }
    }
    VerificationReport::new("gould-hopper", cases)
}

/// Quadrature against the closed form of `omega_n`. Where the closed form
/// vanishes exactly (odd `n` at `x = 0`) the metric is the absolute error.
pub fn omega_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let mut cases = Vec::new();
    for (t, x) in [(1.0, 0.7), (0.5, -1.2), (2.0, 0.0)] {
        for n in 0..=8 {
            let name = format!("n={n} t={t} x={x}");
            let closed = derived_heat_poly(n, t, x);
            let quad = derived_heat_quadrature(n, t, x, q);
            let physicists = derived_heat_poly_physicists_form(n, t, x);
            cases.push(match (closed, quad, physicists) {
                (Ok(c), Ok(qv), Ok(p)) => {
                    let (metric, kind) = if c == 0.0 {
                        ((qv - c).abs(), "abs")
                    } else {
                        ((qv - c).abs() / c.abs(), "rel")
                    };
                    let ratio = if c == 0.0 {
                        "undefined".to_string()
                    } else {
                        format_float(p / c)
                    };
                    Case::new(name, metric, 1e-8)
                        .param("closed_form", format_float(c))
                        .param("quadrature", format_float(qv))
                        .param("metric_kind", kind)
                        .param("physicists_ratio", ratio)
                        .param(
                            "physicists_ratio_expected",
                            format_float(2f64.powf(n as f64 / 2.0)),
                        )
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => Case::failed(name, 1e-8, &e),
            });
        }
    }
    VerificationReport::new("omega", cases)
}

pub fn cube_suite(grid: &Grid, q: &QuadSpec<f64>) -> VerificationReport {
    let cases = grid
        .points()
        .map(|(t, x)| {
            let name = format!("t={t} x={x}");
            match verify_cube_completion(t, x, q) {
                Ok(c) => relative_case(name, c.lhs, c.rhs, 1e-7),
                Err(e) => Case::failed(name, 1e-7, &e),
            }
        })
        .collect();
    VerificationReport::new("cube", cases)
}

pub const EQ10_TRIPLES: [(f64, f64, f64); 12] = [
    (1.0, 0.5, 0.0),
    (1.0, 1.0, -1.0),
    (1.0, 2.0, 0.5),
    (2.0, 0.0, 0.3),
    (8.0, 0.0, 1.0),
    (0.5, 0.0, -1.0),
    (2.0, 0.5, 0.3),
    (0.5, 1.0, 1.0),
    (3.0, 0.25, -2.0),
    (0.25, 1.5, 0.7),
    (4.0, 0.75, 0.2),
    (1.5, 1.2, -0.5),
];

pub fn eq10_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let cases = EQ10_TRIPLES
        .iter()
        .map(|&(t, s, x)| {
            let name = format!("t={t} s={s} x={x}");
            match verify_eq10(t, s, x, q) {
                Ok(c) => relative_case(name, c.lhs, c.rhs, 1e-6),
                Err(e) => Case::failed(name, 1e-6, &e),
            }
        })
        .collect();
    VerificationReport::new("eq10", cases)
}

pub fn scaling_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let mut cases = Vec::new();
    for (m, times) in [(3, [1.0, 8.0]), (4, [1.0, 16.0])] {
        for t in times {
            for x in [-1.5, 0.0, 0.5, 2.0] {
                let name = format!("m={m} t={t} x={x}");
                cases.push(match verify_scaling(m, t, x, q) {
                    Ok(c) => relative_case(name, c.lhs, c.rhs, 1e-6),
                    Err(e) => Case::failed(name, 1e-6, &e),
                });
            }
        }
    }
    for t in [1.0, 16.0] {
        let name = format!("gamma m=4 t={t} x=0");
        cases.push(match verify_quartic_origin(t, q) {
            Ok(c) => relative_case(name, c.lhs, c.rhs, 1e-6),
            Err(e) => Case::failed(name, 1e-6, &e),
        });
    }
    VerificationReport::new("scaling", cases)
}

pub const CONVOLUTION_POINTS: [(f64, f64, f64); 8] = [
    (0.5, 1.0, 0.0),
    (1.0, 1.0, 0.5),
    (2.0, 1.0, -1.0),
    (1.0, 0.5, 1.5),
    (0.25, 2.0, -0.5),
    (1.5, 0.8, 0.3),
    (3.0, 1.5, -2.0),
    (0.8, 3.0, 1.0),
];

/// `(g_tau * w_m(t))(x)` against the kernel with `s = tau / t`.
pub fn convolution_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let mut cases = Vec::new();
    for m in [3, 4] {
        let a = crate::kernels::kernel::canonical_a::<f64>(m);
        for (tau, t, x) in CONVOLUTION_POINTS {
            let name = format!("m={m} tau={tau} t={t} x={x}");
            let run = || -> Result<(f64, f64)> {
                let bare = KernelParams::new(a, m, 0.0, t)?;
                let conv = convolve(
                    |y| heat_kernel(tau, y),
                    |z| airy_heat(&bare, z, q),
                    x,
                    heat_window(tau, 0.0),
                    q,
                )?;
                let direct = airy_heat(&KernelParams::new(a, m, tau / t, t)?, x, q)?;
                Ok((conv, direct))
            };
            cases.push(match run() {
                Ok((conv, direct)) => Case::new(name, (conv - direct).abs(), 1e-6)
                    .param("convolution", format_float(conv))
                    .param("direct", format_float(direct)),
                Err(e) => Case::failed(name, 1e-6, &e),
            });
        }
    }
    VerificationReport::new("convolution", cases)
}

pub fn moments_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let mut cases = Vec::new();
    for (t, x) in [(0.5, 0.0), (1.0, 0.6)] {
        for j in 0..=6 {
            let name = format!("t={t} x={x} j={j}");
            cases.push(match moment_identity(4, -1.0, j, t, x, q) {
                Ok(c) => Case::new(name, c.abs_err(), 1e-5)
                    .param("quadrature", format_float(c.lhs))
                    .param("gould_hopper", format_float(c.rhs)),
                Err(e) => Case::failed(name, 1e-5, &e),
            });
        }
    }
    VerificationReport::new("moments", cases)
}

/// Closed-form and quadrature fields at seeded random points.
pub fn residual_suite(seed: u64, q: &QuadSpec<f64>) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..10)
        .map(|_| (rng.random_range(0.5..2.0), rng.random_range(-2.0..2.0)))
        .collect();
    let mut cases = Vec::new();
    let mut push = |name: String, t: f64, x: f64, tol: f64, r: Result<f64>| {
        let case = match r {
            Ok(v) => Case::new(name, v, tol),
            Err(e) => Case::failed(name, tol, &e),
        };
        cases.push(case.param("t", t).param("x", x));
    };

    let closed_coeffs = [(1.0, 3, 1.0), (-1.0, 4, 0.5)];
    for (i, &(t, x)) in points.iter().enumerate() {
        for &(a, m, s) in &closed_coeffs {
            let p = PdeCoefficients { a, m, s };
            for sol in ParticularSolution::all(0.5) {
                if !sol.solves(&p) {
                    continue;
                }
                let probe = FieldProbe::for_order(m, move |t, x| Ok(sol.eval(&p, t, x)));
                push(
                    format!("p{i} m={m} {}", sol.name()),
                    t,
                    x,
                    1e-6,
                    residual_fd(&probe, &p, t, x),
                );
            }
            match characteristic_roots(m, a, s, 0.7) {
                Ok(roots) => {
                    for (k, r) in roots.into_iter().enumerate() {
                        let probe = FieldProbe::for_order(m, move |t, x| {
                            Ok(separated_solution(0.7, r, t, x))
                        });
                        push(
                            format!("p{i} m={m} separated-{k}"),
                            t,
                            x,
                            1e-6,
                            residual_fd(&probe, &p, t, x),
                        );
                    }
                }
                Err(e) => push(format!("p{i} m={m} separated"), t, x, 1e-6, Err(e)),
            }
        }
        let heat = PdeCoefficients {
            a: 0.0,
            m: 3,
            s: 1.0,
        };
        let probe = FieldProbe::for_order(3, heat_kernel);
        push(
            format!("p{i} heat-kernel"),
            t,
            x,
            1e-6,
            residual_fd(&probe, &heat, t, x),
        );

        for (a, m, s) in [(-1.0 / 3.0, 3, 1.0), (-1.0, 4, 0.5), (-1.0, 4, 0.0)] {
            let p = PdeCoefficients { a, m, s };
            let probe = FieldProbe::for_order(m, move |t, x| {
                airy_heat(&KernelParams::new(a, m, s, t)?, x, q)
            });
            push(
                format!("p{i} airy-heat m={m} s={s}"),
                t,
                x,
                1e-4,
                residual_fd(&probe, &p, t, x),
            );
        }
    }
    VerificationReport::new("residual", cases)
}

pub fn airy_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let cases = (0..=24)
        .map(|k| {
            let x = -2.0 + 0.25 * k as f64;
            let name = format!("x={x:+.2}");
            match (airy_series(x), airy_contour(x, q)) {
                (Ok(s), Ok(c)) => Case::new(name, (s - c).abs() / c.abs(), 1e-9)
                    .param("series", format_float(s))
                    .param("contour", format_float(c)),
                (Err(e), _) | (_, Err(e)) => Case::failed(name, 1e-9, &e),
            }
        })
        .collect();
    VerificationReport::new("airy", cases)
}

/// Cases for a filled scan: the best relative error against `tol`, with the
/// whole error curve in the parameters.
pub fn duality_cases(scan: &DualityScan<f64>, tol: f64) -> Vec<Case> {
    let mut curve = String::new();
    for (j, e) in scan.errors.iter().enumerate() {
        if j > 0 {
            curve.push(',');
        }
        write!(curve, "{}", format_float(*e)).unwrap();
    }
    let best = scan.best_index();
    let rel = scan.best_relative_error().unwrap_or(f64::NAN);
    let name = format!(
        "m={} tau={} t={} x={} jmax={}",
        scan.m, scan.tau, scan.t, scan.x, scan.j_max
    );
    vec![Case::new(name, rel, tol)
        .param("oracle", format_float(scan.oracle))
        .param(
            "best_index",
            best.map_or("none".to_string(), |b| b.to_string()),
        )
        .param("errors", curve)]
}

pub fn duality_suite(q: &QuadSpec<f64>) -> VerificationReport {
    let tol = 1e-3;
    let cases =
        match DualityScan::new(4, 50.0, 1.0, 0.5, 8).and_then(|s| duality_partial_sums(s, q)) {
            Ok(scan) => duality_cases(&scan, tol),
            Err(e) => vec![Case::failed("m=4 tau=50 t=1 x=0.5 jmax=8", tol, &e)],
        };
    VerificationReport::new("duality", cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let d = Grid::cube_default();
        assert_eq!(d.x.len(), 9);
        let g = Grid::parse("t=1,2;x=-1:1:0.5", &d).unwrap();
        assert_eq!(g.t, vec![1.0, 2.0]);
        assert_eq!(g.x, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(g.points().count(), 10);
        assert_eq!(g.points().nth(5), Some((2.0, -1.0)));
        assert_eq!(Grid::parse("x=0", &d).unwrap().t, d.t);
        assert!(Grid::parse("y=1", &d).is_err());
        assert!(Grid::parse("t=1:0:1", &d).is_err());
        assert!(Grid::parse("t=a", &d).is_err());
    }

    #[test]
    fn small_lacunary_suite() {
        let r = lacunary_suite(4, 13).unwrap();
        assert!(r.all_passed(), "{:?}", r.first_failure());
        let short = lacunary_suite(4, 5).unwrap();
        assert_eq!(short.first_failure().unwrap().name, "certificate");
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn override_fails_everything() {
        let cfg = SuiteConfig {
            tol_override: Some(-1.0),
            ..SuiteConfig::default()
        };
        let r = run_suite("airy", &cfg).unwrap();
        assert_eq!(r.summary.passed, 0);
    }
}
