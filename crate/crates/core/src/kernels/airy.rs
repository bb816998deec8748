//! The Airy function `Ai` on `|x| <= 8`, by its Maclaurin series and by
//! contour quadrature of `(1/2 pi) int exp(i (l^3/3 + l x)) dl`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernels::contour::FourierIntegral;
use crate::kernels::gamma::gamma;
use crate::kernels::quad::QuadSpec;
use crate::scalar::Real;

/// Largest `|x|` accepted by [`airy`] and [`airy_series`].
pub const AIRY_WINDOW: f64 = 8.0;

/// Interval on which both methods are evaluated and must agree.
pub const CROSS_CHECK_RANGE: (f64, f64) = (-2.0, 4.0);

/// Relative agreement demanded on [`CROSS_CHECK_RANGE`].
pub const CROSS_CHECK_TOL: f64 = 1e-9;

fn check_window<F: Real>(x: F) -> Result<()> {
    if x.abs() <= F::lit(AIRY_WINDOW) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Airy evaluation needs |x| <= {AIRY_WINDOW}, got {x}"
        )))
    }
}

/// `(Ai(0), Ai'(0))` from `3^{-2/3} / Gamma(2/3)` and `-3^{-1/3} / Gamma(1/3)`.
pub fn airy_initial_values<F: Real>() -> (F, F) {
    let three = F::lit(3.0);
    let third = F::one() / three;
    let ai0 = three.powf(-F::lit(2.0) * third) / gamma(F::lit(2.0) * third);
    let dai0 = -three.powf(-third) / gamma(third);
    (ai0, dai0)
}

/// Power series solution of `y'' = x y` with the Airy initial values.
pub fn airy_series<F: Real>(x: F) -> Result<F> {
    check_window(x)?;
    let (ai0, dai0) = airy_initial_values::<F>();
    // a_{n+2} = a_{n-1} / ((n+2)(n+1)), a_2 = 0
    let mut a = [ai0, dai0, F::zero()];
    let mut sum = ai0 + dai0 * x;
    let mut power = x * x;
    let mut quiet = 0;
    for n in 3..400usize {
        let next = a[0] / F::from_usize(n * (n - 1)).unwrap();
        a = [a[1], a[2], next];
        power = power * x;
        let term = next * power;
        sum = sum + term;
        if term.abs() <= F::epsilon() * sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    Ok(sum)
}

/// Contour quadrature of the Airy integral.
pub fn airy_contour<F: Real>(x: F, q: &QuadSpec<F>) -> Result<F> {
    let zero = Complex::new(F::zero(), F::zero());
    FourierIntegral::new(vec![
        zero,
        Complex::new(F::zero(), x),
        zero,
        Complex::new(F::zero(), F::one() / F::lit(3.0)),
    ])?
    .evaluate(q)
}

/// `Ai(x)` for `|x| <= 8`. Returns the contour value; inside
/// [`CROSS_CHECK_RANGE`] the series is evaluated too and a disagreement
/// beyond [`CROSS_CHECK_TOL`] is an error.
pub fn airy<F: Real>(x: F) -> Result<F> {
    airy_with(x, &QuadSpec::default())
}

/// [`airy`] with explicit quadrature settings.
pub fn airy_with<F: Real>(x: F, q: &QuadSpec<F>) -> Result<F> {
    check_window(x)?;
    let contour = airy_contour(x, q)?;
    let (lo, hi) = CROSS_CHECK_RANGE;
    if x >= F::lit(lo) && x <= F::lit(hi) {
        let series = airy_series(x)?;
        let tol = F::lit(CROSS_CHECK_TOL).max(F::lit(1e4) * F::epsilon());
        if (series - contour).abs() > tol * contour.abs() {
            return Err(Error::AiryCrossCheck {
                x: x.as_f64(),
                series: series.as_f64(),
                contour: contour.as_f64(),
            });
        }
    }
    Ok(contour)
}
