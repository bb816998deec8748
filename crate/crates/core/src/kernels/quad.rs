//! Composite Gauss-Legendre quadrature with panel doubling.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Points per panel.
pub const PANEL_POINTS: usize = 32;

/// Panels used by the first comparison (`2^MIN_LEVEL` against half as many).
const MIN_LEVEL: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadSpec<F> {
    /// Successive panel-doubled estimates must agree to this relative error.
    pub rel_tol: F,
    /// Maximum number of doublings; the finest level has `2^max_doublings` panels.
    pub max_doublings: usize,
    /// Integration paths are cut where the integrand has decayed by this
    /// factor from its peak.
    pub cutoff: F,
}

impl<F: Real> Default for QuadSpec<F> {
    fn default() -> Self {
        Self {
            rel_tol: F::lit(1e-10),
            max_doublings: 20,
            cutoff: F::lit(1e-18),
        }
    }
}

impl<F: Real> QuadSpec<F> {
    pub fn with_rel_tol(rel_tol: F) -> Result<Self> {
        Self {
            rel_tol,
            ..Self::default()
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.rel_tol > F::zero()) {
            return Err(Error::Domain(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_doublings < MIN_LEVEL {
            return Err(Error::Domain(format!(
                "max_doublings must be at least {MIN_LEVEL}, got {}",
                self.max_doublings
            )));
        }
        if !(self.cutoff > F::zero() && self.cutoff < F::one()) {
            return Err(Error::Domain(format!(
                "cutoff must lie in (0, 1), got {}",
                self.cutoff
            )));
        }
        Ok(self)
    }

    /// `-ln(cutoff)`: how many e-folds below the peak a path may stop.
    pub fn decay_budget(&self) -> F {
        -self.cutoff.ln()
    }
}

/// Gauss-Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre<F> {
    nodes: Vec<F>,
    weights: Vec<F>,
}

impl<F: Real> GaussLegendre<F> {
    /// Nodes by Newton iteration on `P_n`, started from the Tricomi guess.
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![F::zero(); n];
        let mut weights = vec![F::zero(); n];
        let nf = F::from_usize(n).unwrap();
        let half = F::lit(0.5);
        for i in 0..n.div_ceil(2) {
            let guess = F::PI() * (F::from_usize(i).unwrap() + F::lit(0.75)) / (nf + half);
            let mut x = guess.cos();
            let mut dp = F::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x = x - dx;
                if dx.abs() <= F::epsilon() {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != F::zero() {
                dp = d;
            }
            let w = F::lit(2.0) / ((F::one() - x * x) * dp * dp);
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[F] {
        &self.nodes
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }
}

fn legendre_with_derivative<F: Real>(n: usize, x: F) -> (F, F) {
    let mut p0 = F::one();
    let mut p1 = x;
    if n == 0 {
        return (F::one(), F::zero());
    }
    for k in 2..=n {
        let kf = F::from_usize(k).unwrap();
        let p2 = ((F::lit(2.0) * kf - F::one()) * x * p1 - (kf - F::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = F::from_usize(n).unwrap();
    (p1, nf * (x * p1 - p0) / (x * x - F::one()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<F> {
    pub value: Complex<F>,
    /// Difference from the estimate with half as many panels.
    pub error: F,
    /// Integral of `|f|`, the scale against which roundoff is judged.
    pub abs_mass: F,
    pub panels: usize,
}

fn composite<F: Real, G: FnMut(F) -> Complex<F>>(
    rule: &GaussLegendre<F>,
    f: &mut G,
    a: F,
    b: F,
    panels: usize,
) -> (Complex<F>, F) {
    let width = (b - a) / F::from_usize(panels).unwrap();
    let half = width * F::lit(0.5);
    let mut sum = Complex::new(F::zero(), F::zero());
    let mut mass = F::zero();
    for p in 0..panels {
        let mid = a + width * (F::from_usize(p).unwrap() + F::lit(0.5));
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(mid + half * *x);
            sum = sum + v * (*w * half);
            mass = mass + v.norm() * *w * half;
        }
    }
    (sum, mass)
}

/// `int_a^b f` for a complex-valued `f`, doubling the number of panels until
/// two successive estimates agree to `rel_tol` (or to roundoff relative to
/// `int |f|`). Returns the finer estimate.
pub fn integrate_complex<F: Real, G: FnMut(F) -> Complex<F>>(
    mut f: G,
    a: F,
    b: F,
    q: &QuadSpec<F>,
) -> Result<Estimate<F>> {
    let rule = GaussLegendre::new(PANEL_POINTS);
    if a == b {
        return Ok(Estimate {
            value: Complex::new(F::zero(), F::zero()),
            error: F::zero(),
            abs_mass: F::zero(),
            panels: 0,
        });
    }
    let roundoff = F::lit(64.0) * F::epsilon();
    let (mut prev, _) = composite(&rule, &mut f, a, b, 1 << (MIN_LEVEL - 1));
    for level in MIN_LEVEL..=q.max_doublings {
        let panels = 1usize << level;
        let (cur, mass) = composite(&rule, &mut f, a, b, panels);
        if !(cur.re.is_finite() && cur.im.is_finite()) {
            return Err(Error::QuadratureFailure {
                last: cur.re.as_f64(),
                previous: prev.re.as_f64(),
            });
        }
        let diff = (cur - prev).norm();
        if diff <= q.rel_tol * cur.norm() || diff <= roundoff * mass {
            return Ok(Estimate {
                value: cur,
                error: diff,
                abs_mass: mass,
                panels,
            });
        }
        if level == q.max_doublings {
            return Err(Error::QuadratureFailure {
                last: cur.re.as_f64(),
                previous: prev.re.as_f64(),
            });
        }
        prev = cur;
    }
    Err(Error::Domain(format!(
        "max_doublings must be at least {MIN_LEVEL}, got {}",
        q.max_doublings
    )))
}

/// Real-valued counterpart of [`integrate_complex`].
pub fn integrate<F: Real, G: FnMut(F) -> F>(mut f: G, a: F, b: F, q: &QuadSpec<F>) -> Result<F> {
    integrate_complex(|x| Complex::new(f(x), F::zero()), a, b, q).map(|e| e.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_and_weights() {
        let rule = GaussLegendre::<f64>::new(PANEL_POINTS);
        let wsum: f64 = rule.weights().iter().sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        // exact for x^62
        let m: f64 = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .map(|(x, w)| w * x.powi(62))
            .sum();
        assert!((m - 2.0 / 63.0).abs() < 1e-14);
        let rule3 = GaussLegendre::<f64>::new(3);
        assert!((rule3.nodes()[0].abs() - (0.6f64).sqrt()).abs() < 1e-15);
        assert!((rule3.weights()[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn smooth_integral() {
        let q = QuadSpec::default();
        let v = integrate(|x: f64| x.sin(), 0.0, std::f64::consts::PI, &q).unwrap();
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn error_estimate_bounds_true_error() {
        let q = QuadSpec::default();
        let e = integrate_complex(
            |x: f64| Complex::new((-x * x).exp() * (40.0 * x).cos(), 0.0),
            -8.0,
            8.0,
            &q,
        )
        .unwrap();
        let exact = std::f64::consts::PI.sqrt() * (-400.0f64).exp();
        assert!((e.value.re - exact).abs() <= e.error.max(64.0 * f64::EPSILON * e.abs_mass));
    }

    #[test]
    fn reports_failure_with_estimates() {
        let q = QuadSpec {
            max_doublings: 3,
            ..QuadSpec::default()
        };
        let r = integrate(|x: f64| (1e4 * x * x).sin(), 0.0, 10.0, &q);
        assert!(matches!(r, Err(Error::QuadratureFailure { .. })));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadSpec::with_rel_tol(0.0f64).is_err());
        assert!(QuadSpec::with_rel_tol(1e-8f64).is_ok());
    }

    #[test]
    fn runs_in_single_precision() {
        let q = QuadSpec::<f32>::default();
        let v = integrate(|x: f32| x.exp(), 0.0, 1.0, &q).unwrap();
        assert!((v - (1.0f32.exp() - 1.0)).abs() < 1e-5);
    }
}
