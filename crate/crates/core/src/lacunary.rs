//! Coefficient-by-coefficient check of the triple lacunary generating function
//!
//! ```text
//! sum_n H_{3n}(u) z^n / n!
//!     = exp((w-u)(3u-w)/6) / sqrt(1 - 6wz) * 2F0(1/6, 5/6; -; 54 z^2 / (1-6wz)^3),
//! w = (1 - sqrt(1 - 12uz)) / (6z) = u C(3uz),
//! ```
//!
//! with `H` in the combinatorial normalization. Both sides are built as
//! truncated series in `z` at a fixed rational `u`. The coefficient of `z^n`
//! on either side is a polynomial in `u` of degree at most `3n`, so agreement
//! at `3N + 1` distinct points certifies the identity through `z^{N-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::TruncatedSeries;
use crate::hermite::{hermite_values, HermiteConvention};
use crate::scalar::{factorial, pochhammer, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct LacunaryCase<T> {
    pub u: T,
    /// Truncation order `N` in `z`, at least 1.
    pub order: usize,
}

impl<T: Scalar> LacunaryCase<T> {
    pub fn new(u: T, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("lacunary order must be >= 1".into()));
        }
        Ok(Self { u, order })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LacunaryVerdict<T> {
    pub lhs: TruncatedSeries<T>,
    pub rhs: TruncatedSeries<T>,
    pub first_mismatch: Option<usize>,
    pub pass: bool,
}

/// `sum_{n<N} H_{3n}(u) z^n / n!`.
pub fn lhs_series<T: Scalar>(case: &LacunaryCase<T>) -> TruncatedSeries<T> {
    lhs_series_in(HermiteConvention::Combinatorial, case)
}

fn lhs_series_in<T: Scalar>(conv: HermiteConvention, case: &LacunaryCase<T>) -> TruncatedSeries<T> {
    let n = case.order;
    let h = hermite_values(conv, 3 * (n - 1), &case.u);
    TruncatedSeries::new(
        (0..n)
            .map(|k| h[3 * k].clone() / factorial::<T>(k))
            .collect(),
    )
}

/// `w = (1 - sqrt(1 - 12uz)) / (6z)`.
pub fn w_series<T: Scalar>(case: &LacunaryCase<T>) -> TruncatedSeries<T> {
    let n = case.order;
    let radicand =
        TruncatedSeries::with_order(vec![T::one(), -(T::from_int(12) * case.u.clone())], n + 1);
    let root = radicand.sqrt().expect("radicand has constant term 1");
    (&TruncatedSeries::one(n + 1) - &root)
        .shift_div(1)
        .expect("1 - sqrt(1 - 12uz) has no constant term")
        .scale(&(T::one() / T::from_int(6)))
}

/// Catalan generating function from `c_{n+1} = sum_i c_i c_{n-i}`.
pub fn catalan_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let mut c: Vec<T> = Vec::with_capacity(order);
    for k in 0..order {
        if k == 0 {
            c.push(T::one());
        } else {
            let next = (0..k).fold(T::zero(), |acc, i| {
                acc + c[i].clone() * c[k - 1 - i].clone()
            });
            c.push(next);
        }
    }
    TruncatedSeries::new(c)
}

/// `u C(3uz)`, an independent construction of [`w_series`].
pub fn w_series_catalan<T: Scalar>(case: &LacunaryCase<T>) -> TruncatedSeries<T> {
    let n = case.order;
    let inner = TruncatedSeries::with_order(vec![T::zero(), T::from_int(3) * case.u.clone()], n);
    catalan_series::<T>(n)
        .compose(&inner)
        .expect("3uz has no constant term")
        .scale(&case.u)
}

/// `sum_k (a)_k (b)_k / k! arg^k` for an argument of valuation at least 2.
/// Term `k` starts at `z^{2k}`, so the sum is finite at any truncation order.
pub fn hyp2f0_formal<T: Scalar>(
    a: &T,
    b: &T,
    arg: &TruncatedSeries<T>,
) -> Result<TruncatedSeries<T>> {
    let n = arg.order();
    if let Some(index) = arg.coeffs().iter().take(2).position(|c| !c.is_zero()) {
        return Err(Error::ValuationTooSmall { index });
    }
    let mut sum = TruncatedSeries::one(n);
    let mut power = TruncatedSeries::one(n);
    for k in 1..=(n.saturating_sub(1) / 2) {
        power = &power * arg;
        let weight = pochhammer(a, k) * pochhammer(b, k) / factorial::<T>(k);
        sum = &sum + &power.scale(&weight);
    }
    Ok(sum)
}

/// The three factors of the right-hand side, kept apart for diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct RhsFactors<T> {
    pub exponential: TruncatedSeries<T>,
    pub inverse_root: TruncatedSeries<T>,
    pub hypergeometric: TruncatedSeries<T>,
}

pub fn rhs_factors<T: Scalar>(case: &LacunaryCase<T>) -> Result<RhsFactors<T>> {
    let n = case.order;
    let w = w_series(case);
    let u = TruncatedSeries::constant(case.u.clone(), n);
    let three_u = TruncatedSeries::constant(T::from_int(3) * case.u.clone(), n);

    let exponent = (&(&w - &u) * &(&three_u - &w)).scale(&(T::one() / T::from_int(6)));
    let exponential = exponent.exp()?;

    // 1 - 6wz
    let base = &TruncatedSeries::one(n) - &w.shift_mul(1).scale(&T::from_int(6));
    let inverse_root = base.sqrt()?.recip()?;

    let numerator = TruncatedSeries::with_order(vec![T::zero(), T::zero(), T::from_int(54)], n);
    let arg = numerator.divide(&base.pow(3))?;
    let hypergeometric = hyp2f0_formal(
        &(T::one() / T::from_int(6)),
        &(T::from_int(5) / T::from_int(6)),
        &arg,
    )?;
    Ok(RhsFactors {
        exponential,
        inverse_root,
        hypergeometric,
    })
}

pub fn rhs_series<T: Scalar>(case: &LacunaryCase<T>) -> Result<TruncatedSeries<T>> {
    let f = rhs_factors(case)?;
    Ok(&(&f.exponential * &f.inverse_root) * &f.hypergeometric)
}

pub fn verify_lacunary<T: Scalar>(case: &LacunaryCase<T>) -> Result<LacunaryVerdict<T>> {
    let lhs = lhs_series(case);
    let rhs = rhs_series(case)?;
    let first_mismatch = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .position(|(a, b)| a != b)
        .or((lhs.order() != rhs.order()).then(|| lhs.order().min(rhs.order())));
    Ok(LacunaryVerdict {
        pass: first_mismatch.is_none(),
        lhs,
        rhs,
        first_mismatch,
    })
}

/// Hermite normalizations whose `H_3(u)` equals the `z^1` coefficient of the
/// right-hand side at `u`. Only the combinatorial one survives for generic `u`.
pub fn matching_conventions<T: Scalar>(u: &T) -> Result<Vec<HermiteConvention>> {
    let case = LacunaryCase::new(u.clone(), 2)?;
    let rhs = rhs_series(&case)?;
    Ok(HermiteConvention::ALL
        .into_iter()
        .filter(|&conv| lhs_series_in(conv, &case).coeff(1) == rhs.coeff(1))
        .collect())
}

/// Distinct evaluation points needed to certify order `N`.
pub fn certification_points(order: usize) -> usize {
    3 * order + 1
}

/// `count` points `k/7` centred on zero: `k = -count/2 .. count - count/2 - 1`.
pub fn default_points(count: usize) -> Vec<BigRational> {
    let lo = -((count / 2) as i64);
    (0..count as i64)
        .map(|i| BigRational::new(BigInt::from(lo + i), BigInt::from(7)))
        .collect()
}
