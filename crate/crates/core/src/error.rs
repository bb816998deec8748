use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-unit divisor: constant term of the divisor is zero")]
    NonUnitDivisor,

    #[error("valuation too small: coefficient of z^{index} is nonzero")]
    ValuationTooSmall { index: usize },

    #[error("square root requires constant term 1")]
    SqrtConstantTerm,

    #[error("exponential requires zero constant term")]
    ExpConstantTerm,

    #[error("composition requires zero constant term in the inner series")]
    ComposeConstantTerm,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge: last two estimates {last:e} and {previous:e}")]
    QuadratureFailure { last: f64, previous: f64 },

    #[error("integrand grows along the integration path: {0}")]
    GrowingIntegrand(String),

    #[error("Airy cross-check failed at x = {x}: series {series:e}, contour {contour:e}")]
    AiryCrossCheck { x: f64, series: f64, contour: f64 },

    #[error("root iteration did not converge after {sweeps} sweeps (max residual {residual:e})")]
    RootsNotConverged { sweeps: usize, residual: f64 },

    #[error("non-finite probe value at stencil point (t = {t}, x = {x})")]
    NonFinite { t: f64, x: f64 },
}
