//! Geometric probabilities for a stick broken at two uniform points.
//!
//! The three parts are read as elements of a triangle — sides, medians,
//! altitudes, exradii, distances from the incentre or circumcentre, a
//! cevian triple, radii of tangent circles, angle bisectors — and we ask how
//! likely a triangle (or an acute triangle) with those elements is.
//!
//! The parts are modelled as the distances from a uniform point of the
//! equilateral triangle `(−1, 0), (1, 0), (0, √3)` to its sides ([`model`]).
//! [`elements`] computes element triples of a triangle, [`solvers`] inverts
//! them, [`predicates`] decides each event, and [`probability`] evaluates
//! every event by closed form, quadrature and Monte Carlo.
//!
//! ```
//! use broken_stick::model::{SampleStream, SamplerKind};
//! use broken_stick::predicates::Interpretation;
//! use broken_stick::probability::{closed_form, monte_carlo};
//!
//! let event = Interpretation::Sides.acute();
//! let exact = closed_form(event).unwrap().value;
//! let stream = SampleStream::new(42, SamplerKind::DirectUniform);
//! let mc = monte_carlo(event, 100_000, &stream).unwrap();
//! assert!((mc.value - exact).abs() < 4.0 * mc.uncertainty);
//! ```

pub mod elements;
pub mod error;
pub mod model;
pub mod predicates;
pub mod probability;
pub mod quadrature;
pub mod region;
pub mod roots;
pub mod solvers;

pub use error::{Error, Result};
pub use model::{ModelPoint, SampleStream, SamplerKind, StickTriple};
pub use predicates::{EventDescriptor, Interpretation, Predicate};
pub use probability::{Method, ProbabilityEstimate};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/model.md")]
    mod model {}
    #[doc = include_str!("../../../book/src/elements.md")]
    mod elements {}
    #[doc = include_str!("../../../book/src/probabilities.md")]
    mod probabilities {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
