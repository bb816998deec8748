//! Exact and numeric verification of lacunary Hermite generating functions,
//! Airy-heat kernels, higher-order heat equations and Gould-Hopper
//! polynomials.
//!
//! The algebra ([`exactnum`], [`hermite`], [`lacunary`]) is generic over
//! [`Scalar`] and runs exactly over `BigRational`; the analysis
//! ([`kernels`], [`pde`]) is generic over [`Real`] (`f32` or `f64`).

// `!(x > 0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod hermite;
pub mod kernels;
pub mod lacunary;
pub mod pde;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use exactnum::{BiPolynomial, Polynomial, TruncatedSeries};
pub use hermite::{GouldHopperPoly, HermiteConvention};
pub use kernels::{FourierIntegral, KernelParams, QuadSpec};
pub use lacunary::{LacunaryCase, LacunaryVerdict};
pub use pde::{DualityScan, FieldProbe, PdeCoefficients};
pub use report::VerificationReport;
pub use scalar::{Real, Scalar};

pub use num_rational::BigRational;

pub type RationalSeries = TruncatedSeries<BigRational>;
pub type RationalPolynomial = Polynomial<BigRational>;
pub type RationalBiPolynomial = BiPolynomial<BigRational>;
pub type RationalGouldHopper = GouldHopperPoly<BigRational>;
pub type RationalLacunaryCase = LacunaryCase<BigRational>;

pub type KernelParamsF64 = KernelParams<f64>;
pub type QuadSpecF64 = QuadSpec<f64>;
pub type DualityScanF64 = DualityScan<f64>;
pub type KernelParamsF32 = KernelParams<f32>;
pub type QuadSpecF32 = QuadSpec<f32>;
