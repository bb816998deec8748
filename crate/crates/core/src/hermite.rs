//! Classical Hermite polynomials in three normalizations, derived heat
//! polynomials, and Gould-Hopper (higher-order Hermite) polynomials.

use crate::error::{Error, Result};
use crate::exactnum::{BiPolynomial, Polynomial};
use crate::scalar::{Real, Scalar};

/// Normalization of the Hermite family, named by its exponential
/// generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HermiteConvention {
    /// `exp(uz + z^2/2)`; `H_n(u)` counts involutions of `n` points
    /// weighted by `u^(fixed points)`.
    Combinatorial,
    /// `exp(uz - z^2/2)`, usually written `He_n`.
    Probabilists,
    /// `exp(2uz - z^2)`.
    Physicists,
}

impl HermiteConvention {
    pub const ALL: [HermiteConvention; 3] = [
        HermiteConvention::Combinatorial,
        HermiteConvention::Probabilists,
        HermiteConvention::Physicists,
    ];

    /// `(alpha, beta)` with `H_{n+1} = alpha u H_n + beta n H_{n-1}`.
    fn recurrence(self) -> (i64, i64) {
        match self {
            HermiteConvention::Combinatorial => (1, 1),
            HermiteConvention::Probabilists => (1, -1),
            HermiteConvention::Physicists => (2, -2),
        }
    }
}

/// `H_0 .. H_n` evaluated at `u` by the three-term recurrence.
pub fn hermite_values<T: Scalar>(conv: HermiteConvention, n: usize, u: &T) -> Vec<T> {
    let (alpha, beta) = conv.recurrence();
    let alpha_u = T::from_int(alpha) * u.clone();
    let mut out = Vec::with_capacity(n + 1);
    out.push(T::one());
    if n >= 1 {
        out.push(alpha_u.clone());
    }
    for k in 1..n {
        let next =
            alpha_u.clone() * out[k].clone() + T::from_int(beta * k as i64) * out[k - 1].clone();
        out.push(next);
    }
    out
}

pub fn hermite_poly<T: Scalar>(conv: HermiteConvention, n: usize) -> Polynomial<T> {
    let (alpha, beta) = conv.recurrence();
    let alpha_u = Polynomial::monomial(T::from_int(alpha), 1);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = alpha_u.clone();
    for k in 1..n {
        let next = &(&alpha_u * &cur) + &prev.scale(&T::from_int(beta * k as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Gaussian heat kernel `(2 pi t)^{-1/2} exp(-x^2 / 2t)`.
fn gaussian<F: Real>(t: F, x: F) -> F {
    (-(x * x) / (F::lit(2.0) * t)).exp() / (F::TAU() * t).sqrt()
}

/// Derived heat polynomial `omega_n(t, x) = (-d/dx)^n k(t, x)`, in the closed
/// form `t^{-n/2} He_n(x / sqrt t) k(t, x)`.
pub fn derived_heat_poly<F: Real>(n: usize, t: F, x: F) -> Result<F> {
    if !(t > F::zero()) {
        return Err(Error::Domain(format!(
            "derived heat polynomial needs t > 0, got {t}"
        )));
    }
    let root_t = t.sqrt();
    let he = hermite_values(HermiteConvention::Probabilists, n, &(x / root_t))[n];
    Ok(he * root_t.powi(-(n as i32)) * gaussian(t, x))
}

/// The normalization `t^{-n/2} k(t,x) H_n(x / sqrt(2t))` with physicists'
/// `H_n`. It differs from [`derived_heat_poly`] by the factor `2^{n/2}`;
/// kept so reports can show the discrepancy.
pub fn derived_heat_poly_physicists_form<F: Real>(n: usize, t: F, x: F) -> Result<F> {
    if !(t > F::zero()) {
        return Err(Error::Domain(format!(
            "derived heat polynomial needs t > 0, got {t}"
        )));
    }
    let arg = x / (F::lit(2.0) * t).sqrt();
    let h = hermite_values(HermiteConvention::Physicists, n, &arg)[n];
    Ok(h * t.sqrt().powi(-(n as i32)) * gaussian(t, x))
}

/// `H^{(n)}_j(t, x) = exp(t d^n/dx^n) x^j`, stored with coefficients that are
/// polynomials in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct GouldHopperPoly<T> {
    pub n: usize,
    pub j: usize,
    pub poly: BiPolynomial<T>,
}

impl<T: Scalar> GouldHopperPoly<T> {
    pub fn eval(&self, t: &T, x: &T) -> T {
        self.poly.eval(t, x)
    }

    /// The polynomial in `x` at fixed `t`.
    pub fn at_time(&self, t: &T) -> Polynomial<T> {
        self.poly.eval_t(t)
    }
}

/// `j! sum_{k <= j/n} x^{j-nk} t^k / ((j-nk)! k!)`.
pub fn gould_hopper<T: Scalar>(n: usize, j: usize) -> Result<GouldHopperPoly<T>> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "Gould-Hopper order must be >= 2, got {n}"
        )));
    }
    let mut x_coeffs = vec![Polynomial::zero(); j + 1];
    let mut k_fact = T::one();
    for k in 0..=j / n {
        if k > 0 {
            k_fact = k_fact * T::from_int(k as i64);
        }
        let power = j - n * k;
        // j! / (j - nk)! as a falling product
        let falling = ((power + 1)..=j).fold(T::one(), |acc, i| acc * T::from_int(i as i64));
        x_coeffs[power] = Polynomial::monomial(falling / k_fact.clone(), k);
    }
    Ok(GouldHopperPoly {
        n,
        j,
        poly: BiPolynomial::new(x_coeffs),
    })
}

/// `d_t H^{(n)}_j - d_x^n H^{(n)}_j`, which must vanish identically.
pub fn gh_pde_residual_exact<T: Scalar>(n: usize, j: usize) -> Result<BiPolynomial<T>> {
    let gh = gould_hopper::<T>(n, j)?;
    Ok(&gh.poly.d_t() - &gh.poly.d_x_n(n))
}

/// `H^{(n)}_j(0, x)`; equals `x^j`.
pub fn gh_initial_condition<T: Scalar>(n: usize, j: usize) -> Result<Polynomial<T>> {
    Ok(gould_hopper::<T>(n, j)?.at_time(&T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn p(v: &[i64]) -> Polynomial<Q> {
        Polynomial::new(v.iter().map(|&c| Q::from_int(c)).collect())
    }

    /// Involutions of `n` points by number of fixed points, by enumerating
    /// all permutations.
    fn involution_counts(n: usize) -> Vec<i64> {
        fn permute(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    permute(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut perms = Vec::new();
        permute(&mut Vec::new(), &mut vec![false; n], &mut perms);
        let mut counts = vec![0i64; n + 1];
        for s in perms {
            if (0..n).all(|i| s[s[i]] == i) {
                counts[(0..n).filter(|&i| s[i] == i).count()] += 1;
            }
        }
        counts
    }

    #[test]
    fn combinatorial_small_degrees() {
        assert_eq!(
            hermite_poly::<Q>(HermiteConvention::Combinatorial, 0),
            p(&[1])
        );
        assert_eq!(
            hermite_poly::<Q>(HermiteConvention::Combinatorial, 4),
            p(&[3, 0, 6, 0, 1])
        );
        for n in 0..=6 {
            assert_eq!(
                hermite_poly::<Q>(HermiteConvention::Combinatorial, n),
                p(&involution_counts(n))
            );
        }
    }

    #[test]
    fn probabilists_and_physicists() {
        assert_eq!(
            hermite_poly::<Q>(HermiteConvention::Probabilists, 3),
            p(&[0, -3, 0, 1])
        );
        assert_eq!(
            hermite_poly::<Q>(HermiteConvention::Physicists, 3),
            p(&[0, -12, 0, 8])
        );
    }

    #[test]
    fn combinatorial_is_rotated_probabilists() {
        // H_n(u) = i^{-n} He_n(iu): coefficient of u^k picks up (-1)^{(n-k)/2}
        for n in 0..=12 {
            let c = hermite_poly::<Q>(HermiteConvention::Combinatorial, n);
            let he = hermite_poly::<Q>(HermiteConvention::Probabilists, n);
            for k in 0..=n {
                let sign = if ((n - k) / 2) % 2 == 0 { 1 } else { -1 };
                assert_eq!(c.coeff(k), he.coeff(k) * Q::from_int(sign));
            }
        }
    }

    #[test]
    fn values_match_polynomials() {
        let u = Q::new(2.into(), 3.into());
        for conv in HermiteConvention::ALL {
            let vals = hermite_values(conv, 10, &u);
            for (n, v) in vals.iter().enumerate() {
                assert_eq!(&hermite_poly::<Q>(conv, n).eval(&u), v);
            }
        }
    }

    #[test]
    fn derived_heat_low_orders() {
        let (t, x) = (0.8_f64, 0.3);
        assert_eq!(derived_heat_poly(0, t, x).unwrap(), gaussian(t, x));
        let w1 = derived_heat_poly(1, 1.0_f64, 1.0).unwrap();
        assert!((w1 - (-0.5_f64).exp() / (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-15);
        assert!((w1 - 0.24197072451914337).abs() < 1e-12);
        assert!(derived_heat_poly(2, 0.0_f64, 1.0).is_err());
    }

    #[test]
    fn derived_heat_is_negative_x_derivative() {
        let (t, x, h) = (0.7_f64, 0.4_f64, 1e-4);
        for n in 0..=6 {
            let fd = -(derived_heat_poly(n, t, x + h).unwrap()
                - derived_heat_poly(n, t, x - h).unwrap())
                / (2.0 * h);
            let next = derived_heat_poly(n + 1, t, x).unwrap();
            assert!(
                (fd - next).abs() <= 1e-6 * next.abs().max(1e-3),
                "n={n}: {fd} vs {next}"
            );
        }
    }

    #[test]
    fn physicists_form_differs_by_power_of_two() {
        for n in 0..=8 {
            let ratio = derived_heat_poly_physicists_form(n, 1.3_f64, 0.9).unwrap()
                / derived_heat_poly(n, 1.3_f64, 0.9).unwrap();
            assert!((ratio - 2f64.powf(n as f64 / 2.0)).abs() < 1e-12 * ratio);
        }
    }

    #[test]
    fn gould_hopper_examples() {
        let gh = gould_hopper::<Q>(3, 2).unwrap();
        assert_eq!(gh.poly, BiPolynomial::new(vec![p(&[]), p(&[]), p(&[1])]));
        let gh = gould_hopper::<Q>(3, 3).unwrap();
        assert_eq!(
            gh.poly,
            BiPolynomial::new(vec![p(&[0, 6]), p(&[]), p(&[]), p(&[1])])
        );
        let gh = gould_hopper::<Q>(2, 4).unwrap();
        assert_eq!(
            gh.poly,
            BiPolynomial::new(vec![p(&[0, 0, 12]), p(&[]), p(&[0, 12]), p(&[]), p(&[1])])
        );
        assert!(gould_hopper::<Q>(1, 3).is_err());
    }

    /// `exp(t d^n) x^j` applied term by term as a power series in `t`.
    fn operator_oracle(n: usize, j: usize) -> BiPolynomial<Q> {
        let mut x_coeffs = vec![Polynomial::<Q>::zero(); j + 1];
        let mut deriv = Polynomial::monomial(Q::from_int(1), j);
        let mut k = 0usize;
        let mut k_fact = Q::from_int(1);
        while !deriv.is_zero() {
            for (power, c) in deriv.coeffs().iter().enumerate() {
                let term = Polynomial::monomial(c.clone() / k_fact.clone(), k);
                x_coeffs[power] = &x_coeffs[power] + &term;
            }
            k += 1;
            k_fact *= Q::from_int(k as i64);
            deriv = deriv.nth_derivative(n);
        }
        BiPolynomial::new(x_coeffs)
    }

    #[test]
    fn gould_hopper_matches_operator_series() {
        for n in 2..=5 {
            for j in 0..=14 {
                assert_eq!(
                    gould_hopper::<Q>(n, j).unwrap().poly,
                    operator_oracle(n, j),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn gould_hopper_support_and_degree() {
        for n in 2..=6 {
            for j in 0..=24 {
                let gh = gould_hopper::<Q>(n, j).unwrap();
                assert_eq!(gh.poly.degree_x(), Some(j));
                for power in 0..=j {
                    let c = gh.poly.coeff_x(power);
                    if (j - power) % n == 0 {
                        let k = (j - power) / n;
                        assert_eq!(c.degree(), Some(k));
                        assert_eq!(c.coeffs().iter().filter(|v| !v.is_zero()).count(), 1);
                    } else {
                        assert!(c.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn probabilists_from_heat_flow() {
        let half = Q::new((-1).into(), 2.into());
        for j in 0..=20 {
            let gh = gould_hopper::<Q>(2, j).unwrap();
            assert_eq!(
                gh.at_time(&half),
                hermite_poly::<Q>(HermiteConvention::Probabilists, j)
            );
        }
    }

    #[test]
    fn residual_examples() {
        assert!(gh_pde_residual_exact::<Q>(3, 3).unwrap().is_zero());
        assert!(gh_pde_residual_exact::<Q>(2, 0).unwrap().is_zero());
        assert!(gh_pde_residual_exact::<Q>(5, 24).unwrap().is_zero());
    }

    #[test]
    fn initial_condition_is_monomial() {
        for (n, j) in [(3, 7), (2, 2), (4, 4)] {
            assert_eq!(
                gh_initial_condition::<Q>(n, j).unwrap(),
                Polynomial::monomial(Q::from_int(1), j)
            );
        }
    }
}
