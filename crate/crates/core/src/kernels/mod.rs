//! Numerical kernels: quadrature, Gamma, Airy functions and the Airy-heat
//! family evaluated on steepest-descent contours.

pub mod airy;
pub mod contour;
pub mod gamma;
pub mod kernel;
pub mod quad;

pub use airy::{airy, airy_contour, airy_series, airy_with};
pub use contour::{ContourPath, FourierIntegral};
pub use gamma::gamma;
pub use kernel::{
    airy_heat, airy_heat_real_axis, canonical_a, convolve, derived_heat_quadrature,
    even_kernel_window, heat_kernel, heat_window, higher_airy, KernelParams,
};
pub use quad::{integrate, integrate_complex, Estimate, QuadSpec};
