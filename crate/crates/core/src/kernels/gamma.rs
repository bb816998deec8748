//! Lanczos approximation of the Gamma function (g = 7, nine terms).

use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Gamma(x)` for real `x`, using the reflection formula below 1/2.
/// Poles at non-positive integers return infinity.
pub fn gamma<F: Real>(x: F) -> F {
    if x <= F::zero() && x == x.floor() {
        return F::infinity();
    }
    if x < F::lit(0.5) {
        return F::PI() / ((F::PI() * x).sin() * gamma(F::one() - x));
    }
    let x = x - F::one();
    let mut acc = F::lit(LANCZOS_COEFFS[0]);
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + F::lit(*c) / (x + F::from_usize(i).unwrap());
    }
    let t = x + F::lit(LANCZOS_G) + F::lit(0.5);
    F::TAU().sqrt() * t.powf(x + F::lit(0.5)) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_and_half_integer_values() {
        let mut fact = 1.0f64;
        for n in 1..15 {
            assert!((gamma(n as f64) - fact).abs() <= 1e-13 * fact, "n = {n}");
            fact *= n as f64;
        }
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5f64) - sqrt_pi).abs() < 1e-14);
        assert!((gamma(-0.5f64) + 2.0 * sqrt_pi).abs() < 1e-13);
        assert!(gamma(-2.0f64).is_infinite());
    }

    #[test]
    fn thirds_satisfy_reflection() {
        // Gamma(1/3) Gamma(2/3) = 2 pi / sqrt 3
        let prod = gamma(1.0f64 / 3.0) * gamma(2.0f64 / 3.0);
        let expect = 2.0 * std::f64::consts::PI / 3f64.sqrt();
        assert!((prod - expect).abs() < 1e-14 * expect);
        assert!((gamma(1.0f64 / 3.0) - 2.678_938_534_707_747_6).abs() < 1e-14);
        assert!((gamma(1.25f64) - 0.906_402_477_055_477).abs() < 1e-14);
    }
}
