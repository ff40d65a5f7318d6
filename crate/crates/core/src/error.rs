use thiserror::Error;

use crate::elements::ClassKind;
use crate::predicates::EventDescriptor;

/// Errors produced by the model, the inverse solvers and the probability
/// engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({x}, {y}) lies outside the model triangle")]
    OutsideModel { x: f64, y: f64 },

    #[error("stick parts ({0}, {1}, {2}) are not non-negative with sum √3")]
    InvalidTriple(f64, f64, f64),

    #[error("lengths ({0}, {1}, {2}) violate the strict triangle inequality")]
    InvalidTriangle(f64, f64, f64),

    #[error("triangle is {0:?}, an acute triangle was required")]
    NotAcute(ClassKind),

    #[error("no triangle has the requested elements: {0}")]
    NoTriangle(&'static str),

    #[error("no unique construction: {0}")]
    NoUniqueConstruction(&'static str),

    #[error("failed to bracket a root of the cubic {coefficients:?}")]
    RootBracket { coefficients: [f64; 4] },

    #[error("iteration did not converge after {iterations} steps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("reconstruction misses its input by relative residual {residual:e}")]
    ResidualTooLarge { residual: f64 },

    #[error("no closed form is known for {0}")]
    NoClosedForm(EventDescriptor),

    #[error("no integral representation is available for {0}")]
    NoIntegral(EventDescriptor),

    #[error("at least one sample is required")]
    EmptySample,

    #[error("quadrature reached error {achieved:e}, target was {target:e}")]
    ToleranceNotMet { achieved: f64, target: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
