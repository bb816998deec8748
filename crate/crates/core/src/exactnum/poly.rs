//! Dense univariate polynomials and polynomials in `x` with polynomial
//! coefficients in `t`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::TruncatedSeries;
use crate::scalar::Scalar;

/// Dense polynomial, lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| T::from_int(k as i64) * c.clone())
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(c x)`
    pub fn scale_argument(&self, c: &T) -> Self {
        let mut power = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(out)
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::with_order(self.coeffs.iter().take(order).cloned().collect(), order)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Polynomial in `x` whose coefficients are polynomials in `t`:
/// `sum_k p_k(t) x^k`. Trailing zero `x`-coefficients are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPolynomial<T> {
    x_coeffs: Vec<Polynomial<T>>,
}

impl<T: Scalar> BiPolynomial<T> {
    pub fn new(mut x_coeffs: Vec<Polynomial<T>>) -> Self {
        while x_coeffs.last().is_some_and(Polynomial::is_zero) {
            x_coeffs.pop();
        }
        Self { x_coeffs }
    }

    pub fn zero() -> Self {
        Self {
            x_coeffs: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x_coeffs.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.x_coeffs.len().checked_sub(1)
    }

    pub fn x_coeffs(&self) -> &[Polynomial<T>] {
        &self.x_coeffs
    }

    /// The `t`-polynomial multiplying `x^k`.
    pub fn coeff_x(&self, k: usize) -> Polynomial<T> {
        self.x_coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    /// Number of nonzero scalar coefficients.
    pub fn support_size(&self) -> usize {
        self.x_coeffs
            .iter()
            .map(|p| p.coeffs().iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    pub fn d_t(&self) -> Self {
        Self::new(self.x_coeffs.iter().map(Polynomial::derivative).collect())
    }

    pub fn d_x(&self) -> Self {
        Self::new(
            self.x_coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, p)| p.scale(&T::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn d_x_n(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.d_x())
    }

    /// Fixes `t`, leaving a polynomial in `x`.
    pub fn eval_t(&self, t: &T) -> Polynomial<T> {
        Polynomial::new(self.x_coeffs.iter().map(|p| p.eval(t)).collect())
    }

    pub fn eval(&self, t: &T, x: &T) -> T {
        self.eval_t(t).eval(x)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> BiPolynomial<U> {
        BiPolynomial::new(self.x_coeffs.iter().map(|p| p.map(f)).collect())
    }
}

impl<T: Scalar> Sub for &BiPolynomial<T> {
    type Output = BiPolynomial<T>;

    fn sub(self, rhs: Self) -> BiPolynomial<T> {
        let n = self.x_coeffs.len().max(rhs.x_coeffs.len());
        BiPolynomial::new((0..n).map(|k| &self.coeff_x(k) - &rhs.coeff_x(k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn p(v: &[i64]) -> Polynomial<Q> {
        Polynomial::new(v.iter().map(|&c| Q::from_int(c)).collect())
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(p(&[3, 0, 1]).eval(&Q::from_int(2)), Q::from_int(7));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[5, 1, 1, 1]).derivative(), p(&[1, 2, 3]));
        assert_eq!(p(&[0, 0, 0, 1]).nth_derivative(3), p(&[6]));
        assert!(p(&[0, 0, 0, 1]).nth_derivative(4).is_zero());
    }

    #[test]
    fn bipolynomial_derivatives() {
        // x^3 + 6t
        let bp = BiPolynomial::new(vec![p(&[0, 6]), p(&[]), p(&[]), p(&[1])]);
        assert_eq!(bp.d_t(), BiPolynomial::new(vec![p(&[6])]));
        assert_eq!(bp.d_x_n(3), BiPolynomial::new(vec![p(&[6])]));
        assert!((&bp.d_t() - &bp.d_x_n(3)).is_zero());
        assert_eq!(bp.eval(&Q::from_int(1), &Q::from_int(2)), Q::from_int(14));
    }
}
