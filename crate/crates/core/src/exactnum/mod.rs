//! Exact algebra substrate: truncated formal power series and dense
//! polynomials over any [`Scalar`](crate::Scalar). Instantiated with
//! `BigRational` every operation is exact.

mod poly;
mod series;

pub use poly::{BiPolynomial, Polynomial};
pub use series::TruncatedSeries;
