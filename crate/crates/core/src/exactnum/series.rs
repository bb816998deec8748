//! Truncated formal power series in one indeterminate.
//!
//! A series of order `N` stores `c_0 .. c_{N-1}` and stands for
//! `sum c_k z^k + O(z^N)`. Binary operations truncate to the smaller order of
//! their inputs and never fail on mixed orders.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// The order is the number of coefficients given.
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order` terms.
    pub fn with_order(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order, T::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::with_order(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// The indeterminate `z` itself.
    pub fn variable(order: usize) -> Self {
        Self::with_order(vec![T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation order is not a claim
    /// about the underlying series, callers must stay below `order()`.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..order].to_vec())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_mul(&self, k: usize) -> Self {
        let n = self.order();
        let kept = n.saturating_sub(k);
        let mut out = vec![T::zero(); n - kept];
        out.extend_from_slice(&self.coeffs[..kept]);
        Self::new(out)
    }

    /// Divides by `z^k`; the order drops by `k`.
    pub fn shift_div(&self, k: usize) -> Result<Self> {
        if let Some(index) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(Error::ValuationTooSmall { index });
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// `q` with `q * divisor == self` up to the common truncation order.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        let n = self.order().min(divisor.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let b0 = divisor.coeffs[0].clone();
        if b0.is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let mut q: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc = acc - divisor.coeffs[i].clone() * q[k - i].clone();
            }
            q.push(acc / b0.clone());
        }
        Ok(Self::new(q))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).divide(self)
    }

    /// Square root of a series with constant term 1, by the coefficient
    /// recurrence `2 s_n = a_n - sum_{k=1}^{n-1} s_k s_{n-k}`.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let two = T::from_int(2);
        let mut s: Vec<T> = vec![T::one()];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc - s[i].clone() * s[k - i].clone();
            }
            s.push(acc / two.clone());
        }
        Ok(Self::new(s))
    }

    /// `exp` of a series with zero constant term, from `b' = a' b`:
    /// `n b_n = sum_{k=1}^n k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let mut b: Vec<T> = vec![T::one()];
        for m in 1..n {
            let mut acc = T::zero();
            for k in 1..=m {
                acc = acc + T::from_int(k as i64) * self.coeffs[k].clone() * b[m - k].clone();
            }
            b.push(acc / T::from_int(m as i64));
        }
        Ok(Self::new(b))
    }

    /// `self(inner(z))`, truncated to the smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let n = self.order().min(inner.order());
        if inner.order() > 0 && !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone(), n);
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates the truncated polynomial at a point.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..n)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..n)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Cauchy product truncated to the smaller order.
impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> TruncatedSeries<Q> {
        TruncatedSeries::new(v.iter().map(|&c| Q::from_int(c)).collect())
    }

    /// Catalan numbers by the convolution recurrence.
    fn catalan(n: usize) -> Vec<Q> {
        let mut c = vec![Q::from_int(1)];
        for k in 0..n.saturating_sub(1) {
            let next = (0..=k).fold(Q::from_int(0), |acc, i| {
                acc + c[i].clone() * c[k - i].clone()
            });
            c.push(next);
        }
        c
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = ints(&[1, 1, 0]);
        let b = ints(&[1, -1, 0]);
        assert_eq!(&a * &b, ints(&[1, 0, -1]));
    }

    #[test]
    fn mul_geometric_inverse() {
        let geo = ints(&[1, 1, 1, 1, 1]);
        let b = ints(&[1, -1, 0, 0, 0]);
        assert_eq!(&geo * &b, ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn catalan_functional_equation() {
        let c = TruncatedSeries::new(catalan(9));
        let lhs = (&c * &c).truncate(8);
        let rhs = (&c - &TruncatedSeries::one(9)).shift_div(1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[5, 6]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn div_geometric() {
        let one = TruncatedSeries::<Q>::one(4);
        let d = ints(&[1, -1, 0, 0]);
        assert_eq!(one.divide(&d).unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn div_factorization() {
        let a = ints(&[0, 1, 1, 0]);
        let b = ints(&[1, 1, 0, 0]);
        assert_eq!(a.divide(&b).unwrap(), ints(&[0, 1, 0, 0]));
    }

    #[test]
    fn div_non_unit_errors() {
        let a = ints(&[1, 1]);
        let b = ints(&[0, 1]);
        assert_eq!(a.divide(&b), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn shift_div_cases() {
        assert_eq!(ints(&[0, 1, 1]).shift_div(1).unwrap(), ints(&[1, 1]));
        assert_eq!(ints(&[0, 0, 1]).shift_div(2).unwrap(), ints(&[1]));
        assert_eq!(
            ints(&[0, 3, 1]).shift_div(2),
            Err(Error::ValuationTooSmall { index: 1 })
        );
    }

    #[test]
    fn sqrt_binomial_series() {
        // sqrt(1 - 4z): coefficients binom(1/2, k) (-4)^k
        let a = ints(&[1, -4, 0, 0, 0]);
        let s = a.sqrt().unwrap();
        let mut expect = Vec::new();
        let mut binom = Q::from_int(1);
        for k in 0..5i64 {
            expect.push(binom.clone() * Q::from_int(-4).pow(k as i32));
            binom = binom * (q(1, 2) - Q::from_int(k)) / Q::from_int(k + 1);
        }
        assert_eq!(s.coeffs(), &expect[..]);
        assert_eq!(s, ints(&[1, -2, -2, -4, -10]));
        assert_eq!(ints(&[1, 0, 0]).sqrt().unwrap(), ints(&[1, 0, 0]));
    }

    #[test]
    fn sqrt_requires_unit_constant() {
        assert_eq!(ints(&[4, 1]).sqrt(), Err(Error::SqrtConstantTerm));
    }

    #[test]
    fn exp_of_z() {
        let e = TruncatedSeries::<Q>::variable(4).exp().unwrap();
        assert_eq!(e.coeffs(), &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
        assert_eq!(ints(&[1, 1]).exp(), Err(Error::ExpConstantTerm));
    }

    #[test]
    fn compose_cases() {
        let geo = ints(&[1, 1, 1, 1, 1, 1, 1]);
        let z2 = ints(&[0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(geo.compose(&z2).unwrap(), ints(&[1, 0, 1, 0, 1, 0, 1]));

        let c = TruncatedSeries::new(catalan(4));
        let three_z = ints(&[0, 3, 0, 0]);
        assert_eq!(c.compose(&three_z).unwrap(), ints(&[1, 3, 18, 135]));

        let a = ints(&[7, 2, 3]);
        assert_eq!(a.compose(&ints(&[0, 0, 0])).unwrap(), ints(&[7, 0, 0]));
        assert_eq!(
            a.compose(&ints(&[1, 0, 0])),
            Err(Error::ComposeConstantTerm)
        );
    }

    #[test]
    fn works_over_floats() {
        let a = TruncatedSeries::<f64>::new(vec![1.0, -4.0, 0.0, 0.0]);
        let s = a.sqrt().unwrap();
        assert_eq!(s.coeffs(), &[1.0, -2.0, -2.0, -4.0]);
    }
}
