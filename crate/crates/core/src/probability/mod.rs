//! Three engines for the same events: exact expressions, region integrals
//! and Monte Carlo, plus cross-validation among them.

pub mod closed_form;
mod integrals;
mod monte_carlo;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::SampleStream;
use crate::predicates::{EventDescriptor, Interpretation};

pub use closed_form::{closed_form, general_triangle_acute_probability, general_triangle_probability};
pub use integrals::{
    cevian_integrand, cevian_lower, cevian_upper, cevian_window, has_integral, quadrature,
};
pub use monte_carlo::{
    general_triangle_monte_carlo, monte_carlo, monte_carlo_many, triangle_point, CHUNK,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ClosedForm, Method::Quadrature, Method::MonteCarlo];

    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Quadrature => "quadrature",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityEstimate {
    pub event: EventDescriptor,
    pub method: Method,
    pub value: f64,
    /// Standard error for Monte Carlo, absolute error bound for quadrature,
    /// zero for closed forms.
    pub uncertainty: f64,
    /// Sample count, Monte Carlo only.
    pub n: Option<u64>,
    /// Seed, Monte Carlo only.
    pub seed: Option<u64>,
    /// Samples whose predicate could not be decided (solver did not
    /// converge); excluded from `value` and reported here.
    pub failures: u64,
}

impl ProbabilityEstimate {
    pub(crate) fn exact(event: EventDescriptor, method: Method, value: f64, uncertainty: f64) -> Self {
        Self {
            event,
            method,
            value,
            uncertainty,
            n: None,
            seed: None,
            failures: 0,
        }
    }
}

/// `P(obtuse)/P(acute)`, with right triangles of probability zero.
///
/// For circumcentre distances both an acute and an obtuse triangle exist for
/// every triple, so `P(obtuse) = P(exists)` rather than `P(exists) − P(acute)`.
pub fn obtuse_acute_ratio(interpretation: Interpretation, exists: f64, acute: f64) -> f64 {
    let obtuse = if interpretation == Interpretation::CircumcenterDistances {
        exists
    } else {
        exists - acute
    };
    obtuse / acute
}

/// Outcome of comparing every available method for one event.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub event: EventDescriptor,
    pub estimates: Vec<ProbabilityEstimate>,
    /// Methods that do not apply to the event.
    pub absent: Vec<Method>,
    /// One message per failed comparison.
    pub disagreements: Vec<String>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Slack for comparisons between deterministic values.
const ROUNDING: f64 = 1e-12;

/// Compares precomputed estimates of one event: Monte Carlo against every
/// deterministic value at `4·stderr`, deterministic values against each
/// other at the sum of their error bounds.
pub fn compare(event: EventDescriptor, estimates: Vec<ProbabilityEstimate>, absent: Vec<Method>) -> CrossValidation {
    let mut disagreements = Vec::new();
    for (i, x) in estimates.iter().enumerate() {
        for y in &estimates[i + 1..] {
            let (mc, other) = match (x.method, y.method) {
                (Method::MonteCarlo, Method::MonteCarlo) => continue,
                (Method::MonteCarlo, _) => (Some(x), y),
                (_, Method::MonteCarlo) => (Some(y), x),
                _ => (None, y),
            };
            let (a, b, bound) = match mc {
                Some(m) => (m.value, other.value, 4.0 * m.uncertainty + other.uncertainty + ROUNDING),
                None => (x.value, y.value, x.uncertainty + y.uncertainty + ROUNDING),
            };
            if (a - b).abs() > bound {
                disagreements.push(format!(
                    "{event}: {} {} vs {} {} differ by {:e} > {:e}",
                    x.method,
                    x.value,
                    y.method,
                    y.value,
                    (a - b).abs(),
                    bound
                ));
            }
        }
    }
    CrossValidation {
        event,
        estimates,
        absent,
        disagreements,
    }
}

/// Runs every method available for `event` and compares them.
///
/// Errors from individual engines (a quadrature missing its tolerance, a
/// Monte Carlo run with `n = 0`) are recorded as disagreements.
pub fn cross_validate(event: EventDescriptor, n: u64, stream: &SampleStream) -> CrossValidation {
    let mut estimates = Vec::new();
    let mut absent = Vec::new();
    let mut errors = Vec::new();
    match closed_form(event) {
        Ok(e) => estimates.push(e),
        Err(_) => absent.push(Method::ClosedForm),
    }
    if has_integral(event) {
        match quadrature(event) {
            Ok(e) => estimates.push(e),
            Err(err) => errors.push(format!("{event}: quadrature failed: {err}")),
        }
    } else {
        absent.push(Method::Quadrature);
    }
    match monte_carlo(event, n, stream) {
        Ok(e) => estimates.push(e),
        Err(err) => errors.push(format!("{event}: monte carlo failed: {err}")),
    }
    let mut report = compare(event, estimates, absent);
    report.disagreements.extend(errors);
    report
}
