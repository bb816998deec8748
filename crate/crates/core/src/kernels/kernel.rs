//! Airy-heat kernels
//!
//! ```text
//! u(t, x) = (1/2 pi) int exp(a (i l)^m t - s l^2 t / 2 + i l x) dl,
//! ```
//!
//! the fundamental solution of `u_t = a u^{(m)} + (s/2) u''`, its `s = 0`
//! specialization (higher-order Airy functions), the Gaussian heat kernel and
//! real-line convolution.

use std::cell::RefCell;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernels::contour::{i_pow, FourierIntegral};
use crate::kernels::quad::{integrate, QuadSpec};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelParams<F> {
    /// Coefficient of the `m`-th derivative.
    pub a: F,
    pub m: usize,
    /// Diffusion coefficient, `>= 0`.
    pub s: F,
    /// Time, `> 0`.
    pub t: F,
}

impl<F: Real> KernelParams<F> {
    /// Rejects parameter sets whose Fourier integrand is not integrable:
    /// `m < 3`, negative `s` or `t`, a growing `a (i l)^m` term, and the
    /// degenerate `a = s = 0`.
    pub fn new(a: F, m: usize, s: F, t: F) -> Result<Self> {
        if m < 3 {
            return Err(Error::Domain(format!(
                "kernel order m must be >= 3, got {m}"
            )));
        }
        if !(t > F::zero()) {
            return Err(Error::Domain(format!(
                "kernel time must be positive, got {t}"
            )));
        }
        if !(s >= F::zero()) {
            return Err(Error::Domain(format!(
                "diffusion coefficient must be >= 0, got {s}"
            )));
        }
        if a == F::zero() && s == F::zero() {
            return Err(Error::Domain("a = s = 0 leaves a delta function".into()));
        }
        let p = Self { a, m, s, t };
        FourierIntegral::new(p.exponent(F::zero()))?;
        Ok(p)
    }

    /// Canonical parameters of the order-`m` kernel with no diffusion.
    pub fn canonical(m: usize, t: F) -> Result<Self> {
        Self::new(canonical_a(m), m, F::zero(), t)
    }

    /// `a (i l)^m t - s t l^2 / 2 + i l x` as coefficients in `l`.
    pub fn exponent(&self, x: F) -> Vec<Complex<F>> {
        let zero = Complex::new(F::zero(), F::zero());
        let mut e = vec![zero; self.m.max(2) + 1];
        e[1] = Complex::new(F::zero(), x);
        e[2] = e[2] + Complex::new(-self.s * self.t / F::lit(2.0), F::zero());
        e[self.m] = e[self.m] + i_pow::<F>(self.m) * (self.a * self.t);
        e
    }

    pub fn integral(&self, x: F) -> Result<FourierIntegral<F>> {
        FourierIntegral::new(self.exponent(x))
    }

    /// `true` when the Gaussian factor damps the integrand on the real axis.
    pub fn gaussian_damped(&self) -> bool {
        self.s * self.t > F::zero()
    }
}

/// `a` making `a (i l)^m` equal to `i l^m / m` for odd `m` (so `m = 3`
/// gives `-1/3` and the classical Airy phase) and `-l^m` for even `m`.
pub fn canonical_a<F: Real>(m: usize) -> F {
    if m % 2 == 1 {
        let sign = if ((m - 1) / 2).is_multiple_of(2) {
            F::one()
        } else {
            -F::one()
        };
        sign / F::from_usize(m).unwrap()
    } else if (m / 2).is_multiple_of(2) {
        -F::one()
    } else {
        F::one()
    }
}

/// The kernel on its steepest-descent contour.
pub fn airy_heat<F: Real>(p: &KernelParams<F>, x: F, q: &QuadSpec<F>) -> Result<F> {
    p.integral(x)?.evaluate(q)
}

/// The kernel by real-axis quadrature, `(1/pi) int_0^lmax Re[...]`, cut where
/// the damping reaches `q.cutoff`. Requires `s t > 0` or a damped even order.
pub fn airy_heat_real_axis<F: Real>(p: &KernelParams<F>, x: F, q: &QuadSpec<F>) -> Result<F> {
    p.integral(x)?.evaluate_real_axis(q)
}

/// Higher-order Airy function `(1/2 pi) int exp(a (i l)^m + i l x) dl`.
pub fn higher_airy<F: Real>(m: usize, a: F, x: F, q: &QuadSpec<F>) -> Result<F> {
    if a == F::zero() {
        return Err(Error::Domain(
            "higher-order Airy function needs a != 0".into(),
        ));
    }
    airy_heat(&KernelParams::new(a, m, F::zero(), F::one())?, x, q)
}

/// `(2 pi v)^{-1/2} exp(-x^2 / 2v)`.
pub fn heat_kernel<F: Real>(variance: F, x: F) -> Result<F> {
    if !(variance > F::zero()) {
        return Err(Error::Domain(format!(
            "heat kernel variance must be positive, got {variance}"
        )));
    }
    Ok((-(x * x) / (F::lit(2.0) * variance)).exp() / (F::TAU() * variance).sqrt())
}

/// Half-width `12 sqrt(v) + |x|` of the convolution window when the
/// Gaussian of variance `v` is the first factor.
pub fn heat_window<F: Real>(variance: F, x: F) -> F {
    F::lit(12.0) * variance.sqrt() + x.abs()
}

/// Half-width beyond which `|y|^power |w(y)|` of a damped even-order kernel
/// is below `eps`, from the saddle-point estimate of its decay.
pub fn even_kernel_window<F: Real>(m: usize, a: F, t: F, power: usize, eps: F) -> Result<F> {
    if m % 2 == 1 {
        return Err(Error::Domain(format!(
            "window estimate needs an even order, got m = {m}"
        )));
    }
    let damp = a * i_pow::<F>(m).re;
    if damp >= F::zero() {
        return Err(Error::GrowingIntegrand(format!(
            "a (i l)^{m} does not decay"
        )));
    }
    let big_a = -damp * t;
    let mf = F::from_usize(m).unwrap();
    let direction = Complex::from_polar(F::one(), F::PI() / (F::lit(2.0) * (mf - F::one())));
    let log_eps = eps.ln();
    let mut y = F::one();
    for _ in 0..100_000 {
        let rho = (y / (mf * big_a)).powf(F::one() / (mf - F::one()));
        let saddle = direction * rho;
        let re_p = (-(saddle.powi(m as i32)) * big_a + Complex::new(F::zero(), y) * saddle).re;
        if re_p + F::from_usize(power).unwrap() * y.ln() < log_eps {
            return Ok(y);
        }
        y = y + F::lit(0.5);
    }
    Err(Error::Domain("kernel window not found".into()))
}

/// `int_{-W}^{W} f(y) g(x - y) dy`.
pub fn convolve<F, Ff, Fg>(f: Ff, g: Fg, x: F, window: F, q: &QuadSpec<F>) -> Result<F>
where
    F: Real,
    Ff: Fn(F) -> Result<F>,
    Fg: Fn(F) -> Result<F>,
{
    if !(window > F::zero()) {
        return Err(Error::Domain(format!(
            "convolution window must be positive, got {window}"
        )));
    }
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let value = integrate(
        |y| match f(y).and_then(|fy| Ok(fy * g(x - y)?)) {
            Ok(v) => v,
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
    value
}

/// `omega_n(t, x)` by quadrature of `(1/2 pi) int exp(i l x - l^2 t/2) (-i l)^n dl`.
pub fn derived_heat_quadrature<F: Real>(n: usize, t: F, x: F, q: &QuadSpec<F>) -> Result<F> {
    if !(t > F::zero()) {
        return Err(Error::Domain(format!(
            "derived heat polynomial needs t > 0, got {t}"
        )));
    }
    let zero = Complex::new(F::zero(), F::zero());
    let mut prefactor = vec![zero; n + 1];
    prefactor[n] = i_pow::<F>(3 * n % 4);
    FourierIntegral::new(vec![
        zero,
        Complex::new(F::zero(), x),
        Complex::new(-t / F::lit(2.0), F::zero()),
    ])?
    .with_prefactor(prefactor)?
    .evaluate(q)
}
