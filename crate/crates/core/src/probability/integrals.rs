//! Region integrals for the events that have a one-dimensional integral
//! representation. Each returns `(value, absolute error bound)`.

use crate::error::{Error, Result};
use crate::model::SQRT_3;
use crate::predicates::{EventDescriptor, Interpretation, Predicate};
use crate::quadrature::{integrate, QuadratureSpec};

use super::{Method, ProbabilityEstimate};

const SMOOTH: f64 = 1e-12;
const SINGULAR: f64 = 1e-10;

fn run(f: &(dyn Fn(f64) -> f64 + Sync), lo: f64, hi: f64, target: f64) -> Result<(f64, f64)> {
    let r = integrate(&QuadratureSpec {
        integrand: f,
        interval: (lo, hi),
        target_abs_error: target,
    })?;
    Ok((r.value, r.error))
}

/// Area between the hypotenuse-side edge and `x = y²/(√3(√3 − y))`, the
/// right-angle curve, cut from the medial triangle three times.
fn sides_acute() -> Result<(f64, f64)> {
    let f = |y: f64| y / SQRT_3 - y * y / (SQRT_3 * (SQRT_3 - y));
    let (v, e) = run(&f, 0.0, SQRT_3 / 2.0, SMOOTH)?;
    Ok(((SQRT_3 / 4.0 - 3.0 * v) / SQRT_3, 3.0 * e / SQRT_3))
}

/// Three caps under the hyperbolas `y = (√(9x² + 10) − 1)/(3√3)`, added to
/// the central triangle of area √3/16.
fn medians_acute() -> Result<(f64, f64)> {
    let f = |x: f64| SQRT_3 / 4.0 - ((9.0 * x * x + 10.0).sqrt() - 1.0) / (3.0 * SQRT_3);
    let (v, e) = run(&f, -0.25, 0.25, SMOOTH)?;
    Ok(((SQRT_3 / 16.0 + 3.0 * v) / SQRT_3, 3.0 * e / SQRT_3))
}

/// Complement of three disjoint corners, each of area
/// `2∫₀¹ 3√3/5 − √(3x²/5 + 12/25) dx`.
fn altitudes_exists() -> Result<(f64, f64)> {
    let f = |x: f64| 3.0 * SQRT_3 / 5.0 - (3.0 * x * x / 5.0 + 12.0 / 25.0).sqrt();
    let (v, e) = run(&f, 0.0, 1.0, SMOOTH)?;
    Ok((1.0 - 6.0 * v / SQRT_3, 6.0 * e / SQRT_3))
}

/// The integrand is `√(9·(half-width)²)` with a radicand that vanishes
/// at the upper limit `τ = (2√6 − √3)/7`. Substituting `t = τ − s²` turns the
/// `√(τ − t)` endpoint behaviour into a smooth integrand in `s`. The integrand
/// is three times the half-width of the obtuse band, hence the prefactor
/// `2/√3` (six half-bands over the model area √3).
fn altitudes_acute() -> Result<(f64, f64)> {
    let tau = (2.0 * 6f64.sqrt() - SQRT_3) / 7.0;
    let f = |t: f64| {
        let inner = (2.0 * t * t - 2.0 * SQRT_3 * t + 3.0).sqrt();
        (15.0 * t * t - 6.0 * SQRT_3 * t + 9.0 - 12.0 * t * inner).max(0.0).sqrt()
    };
    let g = |s: f64| 2.0 * s * f(tau - s * s);
    let (v, e) = run(&g, 0.0, tau.sqrt(), SINGULAR)?;
    let k = 2.0 / SQRT_3;
    Ok((1.0 - k * v, k * e))
}

/// Ellipse `|7y − √3| < √(3(8 − 7x²))` through the side midpoints; the
/// region form `(1/√3)(√3/4 + 3∫(√3 + √(3(8 − 7x²)))/7 − √3/2 dx)`.
fn exradii_acute() -> Result<(f64, f64)> {
    let f = |x: f64| (SQRT_3 + (3.0 * (8.0 - 7.0 * x * x)).sqrt()) / 7.0 - SQRT_3 / 2.0;
    let (v, e) = run(&f, -0.5, 0.5, SMOOTH)?;
    Ok(((SQRT_3 / 4.0 + 3.0 * v) / SQRT_3, 3.0 * e / SQRT_3))
}

/// Petal between `x = g(t)` and `x = f(t)` after `y = t(1 − x)`, with
/// Jacobian `1 − x`, integrated in closed form over `x`.
fn cevian_acute() -> Result<(f64, f64)> {
    let (v, e) = run(&cevian_integrand, cevian_window().0, cevian_window().1, SMOOTH)?;
    Ok((SQRT_3 * v, SQRT_3 * e))
}

/// `t` range of the petal: `[√3/(2√2 + 1), √3/3]`.
pub fn cevian_window() -> (f64, f64) {
    (SQRT_3 / (2.0 * 2f64.sqrt() + 1.0), SQRT_3 / 3.0)
}

/// Lower `x`-boundary of the petal in the `(x, t)` chart.
pub fn cevian_lower(t: f64) -> f64 {
    let m = SQRT_3;
    let a = 7.0 * t * t + 2.0 * m * t - 3.0;
    let b = 37.0 * t.powi(4) + 20.0 * m * t.powi(3) - 18.0 * t * t - 12.0 * m * t + 9.0;
    let root = 2.0 * t * b.sqrt();
    ((t - m) * a + root) / ((t + m) * a + root)
}

/// Upper `x`-boundary of the petal, `(9t³ − 9t²√3 − 3t + 3√3)/(9t³ + 5t²√3 + 9t − 3√3)`.
pub fn cevian_upper(t: f64) -> f64 {
    let m = SQRT_3;
    (9.0 * t.powi(3) - 9.0 * t * t * m - 3.0 * t + 3.0 * m)
        / (9.0 * t.powi(3) + 5.0 * t * t * m + 9.0 * t - 3.0 * m)
}

/// The petal integrand `(1 − g(s))² − 4(7s² + 2√3s − 3)²/(3√3s³ + 5s² + 3√3s − 3)²`.
pub fn cevian_integrand(s: f64) -> f64 {
    let m = SQRT_3;
    let num = 7.0 * s * s + 2.0 * m * s - 3.0;
    let den = 3.0 * m * s.powi(3) + 5.0 * s * s + 3.0 * m * s - 3.0;
    (1.0 - cevian_lower(s)).powi(2) - 4.0 * num * num / (den * den)
}

/// `∫₀^{1/3} 1 − 2x − 3x² dx`, the tangent-circle region after symmetry.
fn tangent_exists() -> Result<(f64, f64)> {
    run(&|x: f64| 1.0 - 2.0 * x - 3.0 * x * x, 0.0, 1.0 / 3.0, SMOOTH)
}

/// Whether [`quadrature`] supports `event`.
pub fn has_integral(event: EventDescriptor) -> bool {
    use Interpretation::*;
    matches!(
        (event.interpretation, event.predicate),
        (Sides | Medians | Altitudes | Exradii | CevianHwm, Predicate::Acute)
            | (Altitudes | TangentCircles, Predicate::Exists)
    )
}

/// Evaluates the event's region integral.
///
/// ```
/// use broken_stick::predicates::Interpretation;
/// use broken_stick::probability::quadrature;
///
/// let p = quadrature(Interpretation::CevianHwm.acute()).unwrap();
/// assert!((p.value - 0.04223393591).abs() < 1e-7);
/// ```
pub fn quadrature(event: EventDescriptor) -> Result<ProbabilityEstimate> {
    use Interpretation::*;
    let (value, error) = match (event.interpretation, event.predicate) {
        (Sides, Predicate::Acute) => sides_acute()?,
        (Medians, Predicate::Acute) => medians_acute()?,
        (Altitudes, Predicate::Exists) => altitudes_exists()?,
        (Altitudes, Predicate::Acute) => altitudes_acute()?,
        (Exradii, Predicate::Acute) => exradii_acute()?,
        (CevianHwm, Predicate::Acute) => cevian_acute()?,
        (TangentCircles, Predicate::Exists) => tangent_exists()?,
        _ => return Err(Error::NoIntegral(event)),
    };
    Ok(ProbabilityEstimate::exact(event, Method::Quadrature, value, error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::closed_form;
    use approx::assert_abs_diff_eq;

    #[test]
    fn duplicates_closed_forms() {
        for event in EventDescriptor::all().filter(|e| has_integral(*e)) {
            let q = quadrature(event).unwrap();
            assert!(q.uncertainty <= 1e-8, "{event}");
            if let Some(exact) = closed_form::value(event) {
                assert_abs_diff_eq!(q.value, exact, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn reference_values() {
        let alt = quadrature(Interpretation::Altitudes.acute()).unwrap();
        assert_abs_diff_eq!(alt.value, 0.077_443_88, epsilon = 1e-6);
        let cev = quadrature(Interpretation::CevianHwm.acute()).unwrap();
        assert_abs_diff_eq!(cev.value, 0.042_233_935_83, epsilon = 1e-9);
    }

    #[test]
    fn petal_boundaries_meet_the_window() {
        let (lo, hi) = cevian_window();
        assert_abs_diff_eq!(cevian_upper(lo), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cevian_upper(hi), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn missing_integral() {
        let e = Interpretation::AngleBisectors.acute();
        assert_eq!(quadrature(e), Err(Error::NoIntegral(e)));
    }
}
