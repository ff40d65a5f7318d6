//! Exact probabilities, evaluated in floating point.

use crate::elements::TriangleSides;
use crate::error::{Error, Result};
use crate::predicates::{EventDescriptor, Interpretation, Predicate};

use super::{Method, ProbabilityEstimate};

/// `3 ln 2 − 2`, also written `ln(8/e²)`.
pub fn sides_acute() -> f64 {
    3.0 * std::f64::consts::LN_2 - 2.0
}

/// `1/3 − (5/9) ln(8/5)`.
pub fn medians_acute() -> f64 {
    1.0 / 3.0 - 5.0 / 9.0 * (8.0f64 / 5.0).ln()
}

/// `(4/25)(3√5 ln((3 + √5)/2) − 5)`.
pub fn altitudes_exists() -> f64 {
    let r5 = 5f64.sqrt();
    4.0 / 25.0 * (3.0 * r5 * ((3.0 + r5) / 2.0).ln() - 5.0)
}

/// `(24√7/49) arcsin(√14/8) − 2/7`.
pub fn exradii_acute() -> f64 {
    24.0 * 7f64.sqrt() / 49.0 * (14f64.sqrt() / 8.0).asin() - 2.0 / 7.0
}

/// Value of the event when it has an exact expression.
pub fn value(event: EventDescriptor) -> Option<f64> {
    use Interpretation::*;
    if event.is_certain() {
        return Some(1.0);
    }
    match (event.interpretation, event.predicate) {
        (Sides | Medians, Predicate::Exists) => Some(0.25),
        (Sides, Predicate::Acute) => Some(sides_acute()),
        (Medians, Predicate::Acute) => Some(medians_acute()),
        (Altitudes, Predicate::Exists) => Some(altitudes_exists()),
        (Exradii, Predicate::Acute) => Some(exradii_acute()),
        (TangentCircles, Predicate::Exists) => Some(5.0 / 27.0),
        _ => None,
    }
}

/// The exact probability of `event`.
///
/// ```
/// use broken_stick::predicates::Interpretation;
/// use broken_stick::probability::closed_form;
///
/// let p = closed_form(Interpretation::TangentCircles.exists()).unwrap();
/// assert!((p.value - 5.0 / 27.0).abs() < 1e-15);
/// assert!(closed_form(Interpretation::AngleBisectors.acute()).is_err());
/// ```
pub fn closed_form(event: EventDescriptor) -> Result<ProbabilityEstimate> {
    let value = value(event).ok_or(Error::NoClosedForm(event))?;
    Ok(ProbabilityEstimate::exact(event, Method::ClosedForm, value, 0.0))
}

/// Obtuse/acute ratios known as exact expressions.
pub fn ratio(interpretation: Interpretation) -> Option<f64> {
    let ln2 = std::f64::consts::LN_2;
    let ln5 = 5f64.ln();
    match interpretation {
        Interpretation::Sides => Some((9.0 - 12.0 * ln2) / (12.0 * ln2 - 8.0)),
        Interpretation::Medians => {
            Some((3.0 - 60.0 * ln2 + 20.0 * ln5) / (60.0 * ln2 - 20.0 * ln5 - 12.0))
        }
        _ => None,
    }
}

/// Probability that the distances from a uniform interior point of `t` to
/// its sides form a triangle: `2abc/((a + b)(b + c)(c + a))`.
pub fn general_triangle_probability(t: &TriangleSides) -> ProbabilityEstimate {
    let [a, b, c] = t.as_array();
    let value = 2.0 * a * b * c / ((a + b) * (b + c) * (c + a));
    ProbabilityEstimate::exact(Interpretation::Sides.exists(), Method::ClosedForm, value, 0.0)
}

/// Acute variant of [`general_triangle_probability`]; only known for the
/// isosceles shape `5 : 5 : 8`, where one boundary conic is an ellipse and
/// the other two are hyperbolas:
///
/// ```text
/// 25/28 + (25/32) ln(13/5) − (100/49) √14 arcsin(√7/13)
/// ```
pub fn general_triangle_acute_probability(t: &TriangleSides) -> Result<ProbabilityEstimate> {
    let mut s = t.as_array();
    s.sort_by(f64::total_cmp);
    let scale = s[0] / 5.0;
    let shape = [5.0, 5.0, 8.0];
    let matches = s
        .iter()
        .zip(shape)
        .all(|(x, y)| (x - y * scale).abs() <= 1e-12 * x.max(1.0));
    if !matches {
        return Err(Error::NoClosedForm(Interpretation::Sides.acute()));
    }
    let value = 25.0 / 28.0 + 25.0 / 32.0 * (13.0f64 / 5.0).ln()
        - 100.0 / 49.0 * 14f64.sqrt() * (7f64.sqrt() / 13.0).asin();
    Ok(ProbabilityEstimate::exact(Interpretation::Sides.acute(), Method::ClosedForm, value, 0.0))
}
