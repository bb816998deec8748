//! Scalar traits shared by the exact and the numeric engine.
//!
//! The series and polynomial algebra only needs field operations, so it is
//! written against [`Scalar`] and runs unchanged over [`BigRational`] (exact)
//! or `f64`/`f32` (approximate). Quadrature and special functions need the
//! transcendental toolbox and are written against [`Real`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// A field element usable as a series or polynomial coefficient.
pub trait Scalar: Num + Clone + PartialEq + Debug + Neg<Output = Self> {
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f32
    }
}

/// Floating point scalar for the numeric engine: f32 or f64.
pub trait Real:
    Scalar + Float + FloatConst + FromPrimitive + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in the scalar type")
    }

    /// Lossy conversion used for diagnostics and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {}
impl Real for f32 {}

/// `n!` in the scalar type, computed by repeated multiplication.
pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n as i64).fold(T::one(), |acc, k| acc * T::from_int(k))
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer<T: Scalar>(a: &T, k: usize) -> T {
    (0..k as i64).fold(T::one(), |acc, i| acc * (a.clone() + T::from_int(i)))
}
