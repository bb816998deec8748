//! Simultaneous (Durand-Kerner) iteration for all roots of a complex
//! polynomial.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Horner evaluation, coefficients lowest degree first.
pub fn eval_complex_poly<F: Real>(coeffs: &[Complex<F>], z: Complex<F>) -> Complex<F> {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(F::zero(), F::zero()), |acc, c| acc * z + *c)
}

#[derive(Clone, Debug)]
pub struct RootsOutcome<F> {
    pub roots: Vec<Complex<F>>,
    pub sweeps: usize,
    pub converged: bool,
}

/// Runs up to `max_sweeps` Weierstrass updates from perturbed roots of unity
/// on the Cauchy radius. Trailing zero coefficients are dropped; the
/// effective leading coefficient must be nonzero.
pub fn durand_kerner<F: Real>(coeffs: &[Complex<F>], max_sweeps: usize) -> Result<RootsOutcome<F>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == F::zero()) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::Domain(
            "zero polynomial has no isolated roots".into(),
        ));
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(RootsOutcome {
            roots: Vec::new(),
            sweeps: 0,
            converged: true,
        });
    }
    let lead = coeffs[degree];
    let monic: Vec<Complex<F>> = coeffs.iter().map(|c| *c / lead).collect();
    if degree == 1 {
        return Ok(RootsOutcome {
            roots: vec![-monic[0]],
            sweeps: 0,
            converged: true,
        });
    }

    let radius = F::one()
        + monic[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(F::zero(), F::max);
    let seed = Complex::new(F::lit(0.4), F::lit(0.9));
    let mut roots: Vec<Complex<F>> = (0..degree)
        .map(|k| seed.powi(k as i32) * radius / seed.norm().powi(k as i32) * F::lit(0.5))
        .map(|z| z * Complex::from_polar(F::one(), F::lit(0.25)))
        .collect();

    let tol = F::lit(16.0) * F::epsilon();
    for sweep in 1..=max_sweeps {
        let mut max_step = F::zero();
        for k in 0..degree {
            let zk = roots[k];
            let mut denom = Complex::new(F::one(), F::zero());
            for (j, zj) in roots.iter().enumerate() {
                if j != k {
                    denom = denom * (zk - *zj);
                }
            }
            if denom.norm() == F::zero() {
                denom = Complex::new(F::epsilon(), F::zero());
            }
            let step = eval_complex_poly(&monic, zk) / denom;
            roots[k] = zk - step;
            max_step = max_step.max(step.norm() / (F::one() + zk.norm()));
        }
        if max_step <= tol {
            return Ok(RootsOutcome {
                roots,
                sweeps: sweep,
                converged: true,
            });
        }
    }
    Ok(RootsOutcome {
        roots,
        sweeps: max_sweeps,
        converged: false,
    })
}
