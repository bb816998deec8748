//! Numerical checks on `u_t = a u^{(m)} + (s/2) u''`: finite-difference
//! residuals, closed forms of the Airy-heat kernel, self-similar scaling,
//! moments and the Gaussian duality series.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hermite::gould_hopper;
use crate::kernels::airy::airy;
use crate::kernels::gamma::gamma;
use crate::kernels::kernel::{
    airy_heat, canonical_a, convolve, even_kernel_window, heat_kernel, higher_airy, KernelParams,
};
use crate::kernels::quad::{integrate, QuadSpec};
use crate::roots::{durand_kerner, eval_complex_poly};
use crate::scalar::Real;

/// Coefficients of the evolution equation. Unlike [`KernelParams`] these
/// carry no time and admit growing or degenerate choices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PdeCoefficients<F> {
    pub a: F,
    pub m: usize,
    pub s: F,
}

impl<F: Real> PdeCoefficients<F> {
    pub fn new(a: F, m: usize, s: F) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!(
                "derivative order must be >= 2, got {m}"
            )));
        }
        Ok(Self { a, m, s })
    }
}

impl<F: Real> From<&KernelParams<F>> for PdeCoefficients<F> {
    fn from(p: &KernelParams<F>) -> Self {
        Self {
            a: p.a,
            m: p.m,
            s: p.s,
        }
    }
}

/// Default `x` step for an `m`-th derivative stencil. The roundoff in
/// `delta^m / h^m` grows like `2^m eps / h^m`, so higher orders need wider
/// steps.
pub fn default_x_step<F: Real>(m: usize) -> F {
    match m {
        0..=3 => F::lit(1e-2),
        4 | 5 => F::lit(5e-2),
        _ => F::lit(0.1),
    }
}

/// Step for the diffusion term, independent of the probe's `x_step`.
const SECOND_DERIVATIVE_STEP: f64 = 1e-2;

pub const DEFAULT_T_STEP: f64 = 1e-4;

type Evaluator<'a, F> = Box<dyn Fn(F, F) -> Result<F> + 'a>;

/// A field `u(t, x)` together with the steps used to differentiate it.
pub struct FieldProbe<'a, F> {
    evaluator: Evaluator<'a, F>,
    pub t_step: F,
    pub x_step: F,
}

impl<'a, F: Real> FieldProbe<'a, F> {
    pub fn new(evaluator: impl Fn(F, F) -> Result<F> + 'a, t_step: F, x_step: F) -> Result<Self> {
        if !(t_step > F::zero() && x_step > F::zero()) {
            return Err(Error::Domain(format!(
                "probe steps must be positive, got {t_step}, {x_step}"
            )));
        }
        Ok(Self {
            evaluator: Box::new(evaluator),
            t_step,
            x_step,
        })
    }

    /// Probe with the default steps for derivative order `m`.
    pub fn for_order(m: usize, evaluator: impl Fn(F, F) -> Result<F> + 'a) -> Self {
        Self {
            evaluator: Box::new(evaluator),
            t_step: F::lit(DEFAULT_T_STEP),
            x_step: default_x_step(m),
        }
    }

    pub fn eval(&self, t: F, x: F) -> Result<F> {
        let v = (self.evaluator)(t, x)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite {
                t: t.as_f64(),
                x: x.as_f64(),
            })
        }
    }
}

fn binomial<F: Real>(n: usize, k: usize) -> F {
    (0..k).fold(F::one(), |acc, i| {
        acc * F::from_usize(n - i).unwrap() / F::from_usize(i + 1).unwrap()
    })
}

/// `delta^m u / h^m` at `x`: the `m + 1` point central difference, on
/// half-integer offsets when `m` is odd.
fn central_difference<F: Real>(probe: &FieldProbe<F>, m: usize, t: F, x: F, h: F) -> Result<F> {
    let half_m = F::from_usize(m).unwrap() / F::lit(2.0);
    let mut acc = F::zero();
    for k in 0..=m {
        let offset = half_m - F::from_usize(k).unwrap();
        let sign = if k % 2 == 0 { F::one() } else { -F::one() };
        acc = acc + sign * binomial::<F>(m, k) * probe.eval(t, x + offset * h)?;
    }
    Ok(acc / h.powi(m as i32))
}

/// One Richardson step on a second-order difference.
fn richardson<F: Real>(probe: &FieldProbe<F>, m: usize, t: F, x: F, h: F) -> Result<F> {
    let coarse = central_difference(probe, m, t, x, h)?;
    let fine = central_difference(probe, m, t, x, h / F::lit(2.0))?;
    Ok((F::lit(4.0) * fine - coarse) / F::lit(3.0))
}

/// `|u_t - a u^{(m)} - (s/2) u''|` at `(t, x)` by central differences.
pub fn residual_fd<F: Real>(
    probe: &FieldProbe<F>,
    p: &PdeCoefficients<F>,
    t: F,
    x: F,
) -> Result<F> {
    let k = probe.t_step;
    let u_t = (probe.eval(t + k, x)? - probe.eval(t - k, x)?) / (F::lit(2.0) * k);
    let u_m = richardson(probe, p.m, t, x, probe.x_step)?;
    let u_xx = if p.s == F::zero() {
        F::zero()
    } else {
        richardson(
            probe,
            2,
            t,
            x,
            probe.x_step.min(F::lit(SECOND_DERIVATIVE_STEP)),
        )?
    };
    Ok((u_t - p.a * u_m - p.s / F::lit(2.0) * u_xx).abs())
}

/// Closed-form solutions of the evolution equation with frequency `lambda`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ParticularSolution<F> {
    /// `exp((a l^m + s l^2/2) t + l x)`.
    RealExponential(F),
    /// Real part of `exp((a (i l)^m - s l^2/2) t + i l x)`.
    ComplexExponentialRe(F),
    /// Imaginary part of the same.
    ComplexExponentialIm(F),
    /// `exp((a (i l)^m - s l^2/2) t) sin(l x)`, a solution for even `m` only.
    Sine(F),
    /// `exp((a (i l)^m - s l^2/2) t) cos(l x)`, a solution for even `m` only.
    Cosine(F),
}

impl<F: Real> ParticularSolution<F> {
    pub fn all(lambda: F) -> [Self; 5] {
        [
            Self::RealExponential(lambda),
            Self::ComplexExponentialRe(lambda),
            Self::ComplexExponentialIm(lambda),
            Self::Sine(lambda),
            Self::Cosine(lambda),
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::RealExponential(_) => "real-exp",
            Self::ComplexExponentialRe(_) => "complex-exp-re",
            Self::ComplexExponentialIm(_) => "complex-exp-im",
            Self::Sine(_) => "sin",
            Self::Cosine(_) => "cos",
        }
    }

    /// Whether this form solves the equation with coefficients `p`. For odd
    /// `m` the factor `a (i l)^m` is imaginary and the sine and cosine forms
    /// are not real solutions.
    pub fn solves(&self, p: &PdeCoefficients<F>) -> bool {
        match self {
            Self::Sine(_) | Self::Cosine(_) => p.m.is_multiple_of(2),
            _ => true,
        }
    }

    fn rate(p: &PdeCoefficients<F>, lambda: F) -> Complex<F> {
        let m = p.m as i32;
        crate::kernels::contour::i_pow::<F>(p.m) * (p.a * lambda.powi(m))
            - Complex::new(p.s * lambda * lambda / F::lit(2.0), F::zero())
    }

    pub fn eval(&self, p: &PdeCoefficients<F>, t: F, x: F) -> F {
        let two = F::lit(2.0);
        match *self {
            Self::RealExponential(l) => {
                ((p.a * l.powi(p.m as i32) + p.s * l * l / two) * t + l * x).exp()
            }
            Self::ComplexExponentialRe(l) => {
                let c = Self::rate(p, l);
                (c.re * t).exp() * (c.im * t + l * x).cos()
            }
            Self::ComplexExponentialIm(l) => {
                let c = Self::rate(p, l);
                (c.re * t).exp() * (c.im * t + l * x).sin()
            }
            Self::Sine(l) => (Self::rate(p, l).re * t).exp() * (l * x).sin(),
            Self::Cosine(l) => (Self::rate(p, l).re * t).exp() * (l * x).cos(),
        }
    }
}

/// The `m` roots of `a r^m + (s/2) r^2 - lambda = 0`, so that
/// `Re exp(lambda t + r x)` separates the equation.
pub fn characteristic_roots<F: Real>(m: usize, a: F, s: F, lambda: F) -> Result<Vec<Complex<F>>> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "derivative order must be >= 2, got {m}"
        )));
    }
    if a == F::zero() {
        return Err(Error::Domain(
            "characteristic polynomial needs a != 0".into(),
        ));
    }
    let zero = Complex::new(F::zero(), F::zero());
    let mut coeffs = vec![zero; m + 1];
    coeffs[0] = Complex::new(-lambda, F::zero());
    coeffs[2] = coeffs[2] + Complex::new(s / F::lit(2.0), F::zero());
    coeffs[m] = coeffs[m] + Complex::new(a, F::zero());
    let out = durand_kerner(&coeffs, 200)?;
    let bound = F::lit(1e-10) * (F::one() + lambda.abs());
    let residual = out
        .roots
        .iter()
        .map(|r| eval_complex_poly(&coeffs, *r).norm())
        .fold(F::zero(), F::max);
    if !out.converged || out.roots.len() != m || !(residual < bound) {
        return Err(Error::RootsNotConverged {
            sweeps: out.sweeps,
            residual: residual.as_f64(),
        });
    }
    Ok(out.roots)
}

/// `Re exp(lambda t + r x)`.
pub fn separated_solution<F: Real>(lambda: F, root: Complex<F>, t: F, x: F) -> F {
    (Complex::new(lambda * t, F::zero()) + root * x).exp().re
}

/// Two evaluations of the same quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison<F> {
    pub lhs: F,
    pub rhs: F,
    pub rel_err: F,
}

impl<F: Real> Comparison<F> {
    pub fn new(lhs: F, rhs: F) -> Self {
        let diff = (lhs - rhs).abs();
        let rel_err = if rhs == F::zero() {
            diff
        } else {
            diff / rhs.abs()
        };
        Self { lhs, rhs, rel_err }
    }

    pub fn abs_err(&self) -> F {
        (self.lhs - self.rhs).abs()
    }
}

/// `(1/2 pi) int exp(i l^3/3 - t l^2/2 + i l x) dl` against
/// `exp(t^3/12 + t x/2) Ai(x + t^2/4)`.
pub fn verify_cube_completion<F: Real>(t: F, x: F, q: &QuadSpec<F>) -> Result<Comparison<F>> {
    let p = KernelParams::new(-F::one() / F::lit(3.0), 3, t, F::one())?;
    let lhs = airy_heat(&p, x, q)?;
    let rhs =
        (t.powi(3) / F::lit(12.0) + t * x / F::lit(2.0)).exp() * airy(x + t * t / F::lit(4.0))?;
    Ok(Comparison::new(lhs, rhs))
}

/// `(1/2 pi) int exp((i l^3/3 - s l^2/2) t + i l x) dl` against
/// `exp(s^3 t/12 + s x/2) t^{-1/3} Ai(t^{-1/3} x + s^2 t^{2/3}/4)`.
pub fn verify_eq10<F: Real>(t: F, s: F, x: F, q: &QuadSpec<F>) -> Result<Comparison<F>> {
    let p = KernelParams::new(-F::one() / F::lit(3.0), 3, s, t)?;
    let lhs = airy_heat(&p, x, q)?;
    let cbrt = t.cbrt();
    let arg = x / cbrt + s * s * cbrt * cbrt / F::lit(4.0);
    let rhs = (s.powi(3) * t / F::lit(12.0) + s * x / F::lit(2.0)).exp() / cbrt * airy(arg)?;
    Ok(Comparison::new(lhs, rhs))
}

/// The order-`m` kernel at time `t` against `t^{-1/m} A_m(x t^{-1/m})`,
/// with the canonical coefficient for `m`.
pub fn verify_scaling<F: Real>(m: usize, t: F, x: F, q: &QuadSpec<F>) -> Result<Comparison<F>> {
    let a = canonical_a::<F>(m);
    let lhs = airy_heat(&KernelParams::new(a, m, F::zero(), t)?, x, q)?;
    let scale = t.powf(-F::one() / F::from_usize(m).unwrap());
    let rhs = scale * higher_airy(m, a, x * scale, q)?;
    Ok(Comparison::new(lhs, rhs))
}

/// The `m = 4` kernel at `x = 0` against `t^{-1/4} Gamma(5/4) / pi`.
pub fn verify_quartic_origin<F: Real>(t: F, q: &QuadSpec<F>) -> Result<Comparison<F>> {
    let lhs = airy_heat(
        &KernelParams::new(-F::one(), 4, F::zero(), t)?,
        F::zero(),
        q,
    )?;
    let rhs = t.powf(-F::lit(0.25)) * gamma(F::lit(1.25)) / F::PI();
    Ok(Comparison::new(lhs, rhs))
}

/// Tail size below which moment and duality integrands are cut.
const MOMENT_EPS: f64 = 1e-16;

/// `int y^j w(t, x - y) dy` for the damped even-order kernel `w` against
/// the Gould-Hopper value `H^{(m)}_j(a t, x)`.
pub fn moment_identity<F: Real>(
    m: usize,
    a: F,
    j: usize,
    t: F,
    x: F,
    q: &QuadSpec<F>,
) -> Result<Comparison<F>> {
    if m % 2 == 1 || m < 4 {
        return Err(Error::Domain(format!(
            "moment identity needs an even order >= 4, got {m}"
        )));
    }
    if j > 8 {
        return Err(Error::Domain(format!("moment index must be <= 8, got {j}")));
    }
    let p = KernelParams::new(a, m, F::zero(), t)?;
    // substituting z = x - y keeps the window on the kernel
    let window = even_kernel_window(m, a, t, j, F::lit(MOMENT_EPS))? + x.abs();
    let failure = std::cell::RefCell::new(None);
    let lhs = integrate(
        |z| match airy_heat(&p, z, q) {
            Ok(w) => (x - z).powi(j as i32) * w,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                F::nan()
            }
        },
        -window,
        window,
        q,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let rhs = gould_hopper_value(m, j, a * t, x)?;
    Ok(Comparison::new(lhs?, rhs))
}

/// `H^{(m)}_j(t, x)` in floating point.
pub fn gould_hopper_value<F: Real>(m: usize, j: usize, t: F, x: F) -> Result<F> {
    Ok(gould_hopper::<F>(m, j)?.eval(&t, &x))
}

/// Partial sums of the Gaussian-moment expansion of `(g_tau * w_m(t))(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityScan<F> {
    pub m: usize,
    pub a: F,
    pub t: F,
    pub tau: F,
    pub x: F,
    pub j_max: usize,
    pub oracle: F,
    pub partial_sums: Vec<F>,
    /// `|S_J - oracle|` for `J = 0..=j_max`.
    pub errors: Vec<F>,
}

impl<F: Real> DualityScan<F> {
    /// Unfilled scan with the canonical coefficient for `m`.
    pub fn new(m: usize, tau: F, t: F, x: F, j_max: usize) -> Result<Self> {
        if !(tau > F::zero() && t > F::zero()) {
            return Err(Error::Domain(format!(
                "duality scan needs tau, t > 0, got {tau}, {t}"
            )));
        }
        Ok(Self {
            m,
            a: canonical_a(m),
            t,
            tau,
            x,
            j_max,
            oracle: F::nan(),
            partial_sums: Vec::new(),
            errors: Vec::new(),
        })
    }

    /// Index of the smallest error (optimal truncation).
    pub fn best_index(&self) -> Option<usize> {
        self.errors
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_finite())
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
    }

    pub fn best_relative_error(&self) -> Option<F> {
        self.best_index()
            .map(|i| self.errors[i] / self.oracle.abs())
    }
}

/// Fills `partial_sums`, `errors` and `oracle`:
/// `S_J = (2 pi tau)^{-1/2} sum_{j <= J} (-1/(2 tau))^j / j! H^{(m)}_{2j}(a t, x)`
/// against the convolution of the Gaussian of variance `tau` with the kernel.
pub fn duality_partial_sums<F: Real>(
    scan: DualityScan<F>,
    q: &QuadSpec<F>,
) -> Result<DualityScan<F>> {
    let DualityScan {
        m,
        a,
        t,
        tau,
        x,
        j_max,
        ..
    } = scan;
    let p = KernelParams::new(a, m, F::zero(), t)?;
    let window = if m % 2 == 0 {
        even_kernel_window(m, a, t, 0, F::lit(MOMENT_EPS))?
    } else {
        // oscillatory tails: rely on the Gaussian instead
        F::lit(12.0) * tau.sqrt() + x.abs()
    };
    let oracle = convolve(
        |z| airy_heat(&p, z, q),
        |y| heat_kernel(tau, y),
        x,
        window,
        q,
    )?;

    let norm = (F::TAU() * tau).sqrt().recip();
    let ratio = -F::one() / (F::lit(2.0) * tau);
    let mut coeff = F::one();
    let mut sum = F::zero();
    let mut partial_sums = Vec::with_capacity(j_max + 1);
    let mut errors = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        if j > 0 {
            coeff = coeff * ratio / F::from_usize(j).unwrap();
        }
        sum = sum + coeff * gould_hopper_value(m, 2 * j, a * t, x)?;
        partial_sums.push(norm * sum);
        errors.push((norm * sum - oracle).abs());
    }
    Ok(DualityScan {
        oracle,
        partial_sums,
        errors,
        ..scan
    })
}
