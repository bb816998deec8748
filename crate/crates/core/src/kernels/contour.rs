//! Fourier-type integrals `(1/2 pi) int_R Q(lambda) exp(P(lambda)) d lambda`
//! with polynomial `P` and `Q`, evaluated on a deformed contour.
//!
//! Every integrand here satisfies `f(-conj z) = conj f(z)` (real kernel, real
//! `x`), so the integral is twice the real part of the right half of any
//! path symmetric under `z -> -conj z`. The right half used is
//!
//! ```text
//!   i*h  --segment-->  turn + i*h  --ray at angle theta-->  infinity
//! ```
//!
//! where `theta` is the steepest-descent direction of the leading term of
//! `P` (zero when it is already damped on the real axis, `pi/(2m)` for a
//! purely oscillatory `lambda^m` phase). `(turn, h)` is picked among the
//! origin and the saddle points of `P` so that the peak of `|Q e^P|` along
//! the path is smallest, which keeps cancellation in the quadrature bounded.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernels::quad::{integrate_complex, QuadSpec};
use crate::roots::{durand_kerner, eval_complex_poly};
use crate::scalar::Real;

const RAY_SAMPLES: usize = 400;
const SEGMENT_SAMPLES: usize = 64;

/// `i^k`, exact.
pub fn i_pow<F: Real>(k: usize) -> Complex<F> {
    match k % 4 {
        0 => Complex::new(F::one(), F::zero()),
        1 => Complex::new(F::zero(), F::one()),
        2 => Complex::new(-F::one(), F::zero()),
        _ => Complex::new(F::zero(), -F::one()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourPath<F> {
    /// Imaginary offset `h` of the horizontal segment.
    pub height: F,
    /// Real coordinate where the segment ends and the ray starts.
    pub turn: F,
    /// Ray direction, radians from the positive real axis.
    pub angle: F,
    /// Ray length beyond which the integrand is below `cutoff * peak`.
    pub radius: F,
    /// Largest `ln |Q e^P|` along the path.
    pub peak: F,
}

impl<F: Real> ContourPath<F> {
    fn ray_start(&self) -> Complex<F> {
        Complex::new(self.turn, self.height)
    }

    fn direction(&self) -> Complex<F> {
        Complex::from_polar(F::one(), self.angle)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierIntegral<F> {
    exponent: Vec<Complex<F>>,
    prefactor: Vec<Complex<F>>,
}

fn trim<F: Real>(mut v: Vec<Complex<F>>) -> Vec<Complex<F>> {
    while v.last().is_some_and(|c| c.norm() == F::zero()) {
        v.pop();
    }
    v
}

/// `p_k (-i)^k` must be real for the integrand to be Hermitian.
fn is_hermitian<F: Real>(coeffs: &[Complex<F>]) -> bool {
    let tol = F::lit(1024.0) * F::epsilon();
    coeffs.iter().enumerate().all(|(k, c)| {
        let r = *c * i_pow::<F>(4 - k % 4);
        r.im.abs() <= tol * c.norm()
    })
}

/// Coefficients in `r` of `p(z0 + r e)`.
fn shifted<F: Real>(p: &[Complex<F>], z0: Complex<F>, e: Complex<F>) -> Vec<Complex<F>> {
    // repeated synthetic division gives the Taylor coefficients at z0
    let mut work = p.to_vec();
    let n = work.len();
    let mut taylor = Vec::with_capacity(n);
    for k in 0..n {
        for i in (k + 1..n).rev() {
            let carry = work[i] * z0;
            work[i - 1] = work[i - 1] + carry;
        }
        taylor.push(work[k]);
    }
    let mut power = Complex::new(F::one(), F::zero());
    taylor
        .into_iter()
        .map(|c| {
            let out = c * power;
            power = power * e;
            out
        })
        .collect()
}

impl<F: Real> FourierIntegral<F> {
    /// `exponent` holds the coefficients of `P`, lowest degree first.
    pub fn new(exponent: Vec<Complex<F>>) -> Result<Self> {
        let exponent = trim(exponent);
        if !is_hermitian(&exponent) {
            return Err(Error::Domain(
                "exponent must satisfy P(-conj z) = conj P(z)".into(),
            ));
        }
        let d = exponent.len().saturating_sub(1);
        if d < 2 {
            return Err(Error::GrowingIntegrand(
                "exponent of degree < 2 gives no decay".into(),
            ));
        }
        if exponent[d].re > F::zero() {
            return Err(Error::GrowingIntegrand(format!(
                "leading term {:?} lambda^{d} grows on the real axis",
                exponent[d]
            )));
        }
        Ok(Self {
            exponent,
            prefactor: vec![Complex::new(F::one(), F::zero())],
        })
    }

    pub fn with_prefactor(mut self, prefactor: Vec<Complex<F>>) -> Result<Self> {
        let prefactor = trim(prefactor);
        if !is_hermitian(&prefactor) {
            return Err(Error::Domain(
                "prefactor must satisfy Q(-conj z) = conj Q(z)".into(),
            ));
        }
        self.prefactor = prefactor;
        Ok(self)
    }

    pub fn exponent(&self) -> &[Complex<F>] {
        &self.exponent
    }

    fn degree(&self) -> usize {
        self.exponent.len() - 1
    }

    pub fn integrand(&self, z: Complex<F>) -> Complex<F> {
        eval_complex_poly(&self.prefactor, z) * eval_complex_poly(&self.exponent, z).exp()
    }

    fn log_magnitude(&self, z: Complex<F>) -> F {
        let q = eval_complex_poly(&self.prefactor, z)
            .norm()
            .max(F::min_positive_value());
        eval_complex_poly(&self.exponent, z).re + q.ln()
    }

    /// Steepest-descent direction of the leading term, closest to the
    /// positive real axis.
    pub fn steepest_angle(&self) -> F {
        let d = self.degree();
        let lead = self.exponent[d];
        let df = F::from_usize(d).unwrap();
        let sector = F::TAU() / df;
        let mut theta = (F::PI() - lead.arg()) / df;
        while theta > sector * F::lit(0.5) {
            theta = theta - sector;
        }
        while theta < -sector * F::lit(0.5) {
            theta = theta + sector;
        }
        theta
    }

    fn saddles(&self) -> Vec<Complex<F>> {
        let derivative: Vec<Complex<F>> = self
            .exponent
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| *c * F::from_usize(k).unwrap())
            .collect();
        durand_kerner(&derivative, 200)
            .map(|o| o.roots)
            .unwrap_or_default()
            .into_iter()
            .filter(|z| z.re.is_finite() && z.im.is_finite())
            .collect()
    }

    fn segment_peak(&self, turn: F, height: F) -> F {
        let n = F::from_usize(SEGMENT_SAMPLES).unwrap();
        (0..=SEGMENT_SAMPLES)
            .map(|k| {
                let s = turn * F::from_usize(k).unwrap() / n;
                self.log_magnitude(Complex::new(s, height))
            })
            .fold(F::neg_infinity(), F::max)
    }

    /// Peak of `ln|f|` on the ray and a radius past which `ln|f|` stays
    /// below `threshold(peak)`.
    fn ray_extent(&self, start: Complex<F>, angle: F, floor_peak: F, budget: F) -> Result<(F, F)> {
        let e = Complex::from_polar(F::one(), angle);
        let real_coeffs: Vec<F> = shifted(&self.exponent, start, e)
            .iter()
            .map(|c| c.re)
            .collect();
        let scale = real_coeffs.iter().fold(F::zero(), |m, c| m.max(c.abs()));
        let lead_idx = real_coeffs
            .iter()
            .rposition(|c| c.abs() > F::lit(1e3) * F::epsilon() * scale)
            .unwrap_or(0);
        if lead_idx < 2 || real_coeffs[lead_idx] >= F::zero() {
            return Err(Error::GrowingIntegrand(format!(
                "no decay along the ray at angle {angle} from {start}"
            )));
        }
        // Cauchy bound on the critical points of Re P along the ray, plus
        // room for the slowly growing prefactor.
        let lead = real_coeffs[lead_idx] * F::from_usize(lead_idx).unwrap();
        let mut bound = F::one();
        for (k, c) in real_coeffs.iter().enumerate().take(lead_idx).skip(1) {
            bound = bound.max(F::one() + (*c * F::from_usize(k).unwrap() / lead).abs());
        }
        let bound = bound + F::from_usize(self.prefactor.len()).unwrap();

        let at = |r: F| self.log_magnitude(start + e * r);
        let n = F::from_usize(RAY_SAMPLES).unwrap();
        let samples: Vec<(F, F)> = (0..=RAY_SAMPLES)
            .map(|k| {
                let r = bound * F::from_usize(k).unwrap() / n;
                (r, at(r))
            })
            .collect();
        let ray_peak = samples.iter().fold(F::neg_infinity(), |m, s| m.max(s.1));
        let peak = ray_peak.max(floor_peak);
        let threshold = peak - budget;

        let radius = if samples[RAY_SAMPLES].1 >= threshold {
            let mut lo = bound;
            let mut hi = bound * F::lit(2.0);
            let mut guard = 0;
            while at(hi) >= threshold {
                lo = hi;
                hi = hi * F::lit(2.0);
                guard += 1;
                if guard > 200 {
                    return Err(Error::GrowingIntegrand("ray cutoff not found".into()));
                }
            }
            for _ in 0..60 {
                let mid = (lo + hi) * F::lit(0.5);
                if at(mid) >= threshold {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            hi
        } else {
            let last_above = samples.iter().rposition(|s| s.1 >= threshold);
            match last_above {
                Some(i) => samples[i + 1].0,
                None => samples[1].0,
            }
        };
        Ok((ray_peak, radius))
    }

    fn build_path(&self, turn: F, height: F, angle: F, q: &QuadSpec<F>) -> Result<ContourPath<F>> {
        let budget = q.decay_budget();
        let seg_peak = if turn > F::zero() {
            self.segment_peak(turn, height)
        } else {
            self.log_magnitude(Complex::new(F::zero(), height))
        };
        let start = Complex::new(turn, height);
        let (ray_peak, radius) = self.ray_extent(start, angle, seg_peak, budget)?;
        Ok(ContourPath {
            height,
            turn,
            angle,
            radius,
            peak: ray_peak.max(seg_peak),
        })
    }

    /// The lowest-peak path among the origin and the saddle points.
    pub fn path(&self, q: &QuadSpec<F>) -> Result<ContourPath<F>> {
        let angle = self.steepest_angle();
        let mut candidates = vec![(F::zero(), F::zero())];
        let slack = F::lit(1e-9);
        for s in self.saddles() {
            if s.re >= -slack * (F::one() + s.norm()) {
                candidates.push((s.re.max(F::zero()), s.im));
            }
            candidates.push((F::zero(), s.im));
        }
        let mut best: Option<ContourPath<F>> = None;
        let mut first_err = None;
        for (turn, height) in candidates {
            match self.build_path(turn, height, angle, q) {
                Ok(p) => {
                    if best.is_none_or(|b| p.peak < b.peak - F::lit(1e-12)) {
                        best = Some(p);
                    }
                }
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
        best.ok_or_else(|| first_err.expect("at least one candidate path"))
    }

    /// The real axis cut at the point where the integrand has decayed by
    /// `q.cutoff`. Requires damping on the real axis.
    pub fn real_axis_path(&self, q: &QuadSpec<F>) -> Result<ContourPath<F>> {
        self.build_path(F::zero(), F::zero(), F::zero(), q)
    }

    /// `int` over the right half of `path`.
    fn right_half(&self, path: &ContourPath<F>, q: &QuadSpec<F>) -> Result<Complex<F>> {
        let mut total = Complex::new(F::zero(), F::zero());
        if path.turn > F::zero() {
            let h = path.height;
            total = total
                + integrate_complex(
                    |s| self.integrand(Complex::new(s, h)),
                    F::zero(),
                    path.turn,
                    q,
                )?
                .value;
        }
        let start = path.ray_start();
        let e = path.direction();
        total = total
            + integrate_complex(|r| self.integrand(start + e * r), F::zero(), path.radius, q)?
                .value
                * e;
        Ok(total)
    }

    /// Value of the integral along `path`, using the Hermitian symmetry.
    pub fn evaluate_on(&self, path: &ContourPath<F>, q: &QuadSpec<F>) -> Result<F> {
        Ok(self.right_half(path, q)?.re / F::PI())
    }

    pub fn evaluate(&self, q: &QuadSpec<F>) -> Result<F> {
        let path = self.path(q)?;
        self.evaluate_on(&path, q)
    }

    pub fn evaluate_real_axis(&self, q: &QuadSpec<F>) -> Result<F> {
        let path = self.real_axis_path(q)?;
        self.evaluate_on(&path, q)
    }

    /// Both halves of `path` integrated separately, without the symmetry.
    /// The imaginary part of the result measures how far the computed
    /// integral is from real.
    pub fn evaluate_full(&self, path: &ContourPath<F>, q: &QuadSpec<F>) -> Result<Complex<F>> {
        let right = self.right_half(path, q)?;
        let mut left = Complex::new(F::zero(), F::zero());
        let h = path.height;
        if path.turn > F::zero() {
            left = left
                + integrate_complex(
                    |s| self.integrand(Complex::new(s, h)),
                    -path.turn,
                    F::zero(),
                    q,
                )?
                .value;
        }
        let start = Complex::new(-path.turn, h);
        let e = Complex::from_polar(F::one(), F::PI() - path.angle);
        left = left
            - integrate_complex(|r| self.integrand(start + e * r), F::zero(), path.radius, q)?
                .value
                * e;
        Ok((left + right) / F::TAU())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn taylor_shift_matches_direct_evaluation() {
        let p = vec![c(0.3, 0.0), c(0.0, 1.5), c(-0.5, 0.0), c(0.0, 1.0 / 3.0)];
        let z0 = c(0.7, 0.4);
        let e = Complex::from_polar(1.0, 0.3);
        let sh = shifted(&p, z0, e);
        for r in [0.0, 0.5, 2.0] {
            let direct = eval_complex_poly(&p, z0 + e * r);
            let via = eval_complex_poly(&sh, c(r, 0.0));
            assert!((direct - via).norm() < 1e-12);
        }
    }

    #[test]
    fn gaussian_with_shifted_segment() {
        // (1/2pi) int exp(-l^2 v/2 + i l x) = heat kernel
        let (v, x) = (0.7, 1.9);
        let fi = FourierIntegral::new(vec![c(0.0, 0.0), c(0.0, x), c(-v / 2.0, 0.0)]).unwrap();
        let q = QuadSpec::default();
        let exact = (-x * x / (2.0 * v)).exp() / (std::f64::consts::TAU * v).sqrt();
        let path = fi.path(&q).unwrap();
        assert!((path.height - x / v).abs() < 1e-9);
        assert!((fi.evaluate(&q).unwrap() - exact).abs() < 1e-15);
        assert!((fi.evaluate_real_axis(&q).unwrap() - exact).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_leading_term_rotates() {
        let fi = FourierIntegral::new(vec![
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 1.0 / 3.0),
        ])
        .unwrap();
        assert!((fi.steepest_angle() - std::f64::consts::PI / 6.0).abs() < 1e-15);
        let fi5 = FourierIntegral::new(
            vec![c(0.0, 0.0); 5]
                .into_iter()
                .chain([c(0.0, 0.2)])
                .collect(),
        )
        .unwrap();
        assert!((fi5.steepest_angle() - std::f64::consts::PI / 10.0).abs() < 1e-15);
        // pure phase has no damping on the real axis
        assert!(fi.evaluate_real_axis(&QuadSpec::default()).is_err());
    }

    #[test]
    fn rejects_growth_and_asymmetry() {
        assert!(matches!(
            FourierIntegral::new(vec![
                c(0.0, 0.0),
                c(0.0, 1.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(1.0, 0.0)
            ]),
            Err(Error::GrowingIntegrand(_))
        ));
        assert!(FourierIntegral::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]).is_err());
        assert!(FourierIntegral::new(vec![c(0.0, 0.0), c(0.0, 1.0)]).is_err());
    }

    #[test]
    fn full_path_is_real() {
        let fi = FourierIntegral::new(vec![
            c(0.0, 0.0),
            c(0.0, -0.8),
            c(-0.5, 0.0),
            c(0.0, 1.0 / 3.0),
        ])
        .unwrap();
        let q = QuadSpec::default();
        let path = fi.path(&q).unwrap();
        let full = fi.evaluate_full(&path, &q).unwrap();
        let half = fi.evaluate_on(&path, &q).unwrap();
        assert!(full.im.abs() < 1e-12);
        assert!((full.re - half).abs() < 1e-13);
    }
}
