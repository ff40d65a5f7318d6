//! Membership tests: does a broken stick realise a given event?
//!
//! Each predicate reads the three parts as a particular element triple of a
//! triangle. All inequalities are strict, so boundary triples (a set of
//! measure zero) evaluate to `false` for open conditions. Every predicate is
//! homogeneous of degree zero, so the functions accept any positive triple,
//! not only triples summing to √3.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elements::{classify, distances_to_sides, TriangleSides};
use crate::error::{Error, Result};
use crate::model::StickTriple;
use crate::solvers::{self, BisectorOptions, Branch};

/// How the three parts are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    Sides,
    Medians,
    Altitudes,
    Exradii,
    IncenterDistances,
    CevianHwm,
    TangentCircles,
    AngleBisectors,
    CircumcenterDistances,
}

impl Interpretation {
    /// In the order of the summary table.
    pub const ALL: [Interpretation; 9] = [
        Interpretation::Sides,
        Interpretation::Medians,
        Interpretation::Altitudes,
        Interpretation::Exradii,
        Interpretation::IncenterDistances,
        Interpretation::CevianHwm,
        Interpretation::TangentCircles,
        Interpretation::AngleBisectors,
        Interpretation::CircumcenterDistances,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Interpretation::Sides => "sides",
            Interpretation::Medians => "medians",
            Interpretation::Altitudes => "altitudes",
            Interpretation::Exradii => "exradii",
            Interpretation::IncenterDistances => "incenter-distances",
            Interpretation::CevianHwm => "cevian-hwm",
            Interpretation::TangentCircles => "tangent-circles",
            Interpretation::AngleBisectors => "angle-bisectors",
            Interpretation::CircumcenterDistances => "circumcenter-distances",
        }
    }

    /// Row label of the summary table.
    pub fn label(self) -> &'static str {
        match self {
            Interpretation::Sides => "classical case",
            Interpretation::Medians => "medians",
            Interpretation::Altitudes => "altitudes",
            Interpretation::Exradii => "excircles radii",
            Interpretation::IncenterDistances => "IA, IB, IC",
            Interpretation::CevianHwm => "h_a, w_a and m_a",
            Interpretation::TangentCircles => "r,s,t",
            Interpretation::AngleBisectors => "angle bisector",
            Interpretation::CircumcenterDistances => "d(O,AB), ...",
        }
    }

    pub fn exists(self) -> EventDescriptor {
        EventDescriptor::new(self, Predicate::Exists)
    }

    pub fn acute(self) -> EventDescriptor {
        EventDescriptor::new(self, Predicate::Acute)
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Interpretation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Interpretation::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown interpretation `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Some triangle has these elements.
    Exists,
    /// An acute triangle has these elements.
    Acute,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Exists => "exists",
            Predicate::Acute => "acute",
        }
    }
}

/// One event: an interpretation together with a predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EventDescriptor {
    pub interpretation: Interpretation,
    pub predicate: Predicate,
}

impl EventDescriptor {
    pub const fn new(interpretation: Interpretation, predicate: Predicate) -> Self {
        Self {
            interpretation,
            predicate,
        }
    }

    /// All eighteen events, exists before acute within each interpretation.
    pub fn all() -> impl Iterator<Item = EventDescriptor> {
        Interpretation::ALL
            .into_iter()
            .flat_map(|i| [i.exists(), i.acute()])
    }

    /// Events that happen for every positive triple.
    pub fn is_certain(&self) -> bool {
        use Interpretation::*;
        match self.predicate {
            Predicate::Exists => matches!(
                self.interpretation,
                Exradii | IncenterDistances | CevianHwm | AngleBisectors | CircumcenterDistances
            ),
            Predicate::Acute => self.interpretation == CircumcenterDistances,
        }
    }

    /// Whether evaluating the event needs an iterative reconstruction.
    pub fn is_solver_backed(&self) -> bool {
        self.predicate == Predicate::Acute
            && matches!(
                self.interpretation,
                Interpretation::Altitudes | Interpretation::AngleBisectors
            )
    }

    /// Decides the event for a stick triple.
    ///
    /// Only the solver-backed events can fail, when the reconstruction does
    /// not converge.
    pub fn holds(&self, t: &StickTriple) -> Result<bool> {
        evaluate(*self, t.as_array())
    }
}

impl fmt::Display for EventDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.interpretation.name(), self.predicate.name())
    }
}

impl FromStr for EventDescriptor {
    type Err = String;

    /// `interpretation:predicate`, the predicate defaulting to `exists`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (i, p) = s.split_once(':').unwrap_or((s, "exists"));
        let predicate = match p {
            "exists" => Predicate::Exists,
            "acute" => Predicate::Acute,
            other => return Err(format!("unknown predicate `{other}`")),
        };
        Ok(Self::new(i.parse()?, predicate))
    }
}

/// Evaluates `event` on an arbitrary triple of lengths.
pub fn evaluate(event: EventDescriptor, t: [f64; 3]) -> Result<bool> {
    use Interpretation::*;
    Ok(match (event.interpretation, event.predicate) {
        (Sides, Predicate::Exists) => sides_exists(t),
        (Sides, Predicate::Acute) => sides_acute(t),
        (Medians, Predicate::Exists) => medians_exists(t),
        (Medians, Predicate::Acute) => medians_acute(t),
        (Altitudes, Predicate::Exists) => altitudes_exists(t),
        (Altitudes, Predicate::Acute) => return altitudes_acute(t),
        (Exradii, Predicate::Exists) => all_positive(t),
        (Exradii, Predicate::Acute) => exradii_acute(t),
        (IncenterDistances, Predicate::Exists) => all_positive(t),
        (IncenterDistances, Predicate::Acute) => incenter_acute(t),
        (CevianHwm, Predicate::Exists) => cevian_hwm_exists(t),
        (CevianHwm, Predicate::Acute) => cevian_hwm_acute(t),
        (TangentCircles, Predicate::Exists) => tangent_circles_exists(t),
        (TangentCircles, Predicate::Acute) => tangent_circles_acute(t),
        (AngleBisectors, Predicate::Exists) => all_positive(t),
        (AngleBisectors, Predicate::Acute) => return angle_bisectors_acute(t),
        // one acute and one obtuse triangle for every positive triple
        (CircumcenterDistances, _) => all_positive(t),
    })
}

fn all_positive(t: [f64; 3]) -> bool {
    t.iter().all(|x| *x > 0.0)
}

fn sorted(t: [f64; 3]) -> [f64; 3] {
    let mut s = t;
    s.sort_by(f64::total_cmp);
    s
}

/// `max(α, β, γ) < (α + β + γ)/2`.
pub fn sides_exists(t: [f64; 3]) -> bool {
    let [a, b, c] = t;
    all_positive(t) && 2.0 * a.max(b).max(c) < a + b + c
}

/// `α² + β² > γ²` for each cyclic arrangement.
pub fn sides_acute(t: [f64; 3]) -> bool {
    let [a, b, c] = t.map(|x| x * x);
    all_positive(t) && a + b > c && b + c > a && a + c > b
}

/// `u + v + w > 2 max(u, v, w)`, the same region as [`sides_exists`].
pub fn medians_exists(t: [f64; 3]) -> bool {
    sides_exists(t)
}

/// `u² + v² + w² < 6 min(u², v², w²)`.
pub fn medians_acute(t: [f64; 3]) -> bool {
    let [lo, ..] = sorted(t);
    let sq: f64 = t.iter().map(|x| x * x).sum();
    lo > 0.0 && sq < 6.0 * lo * lo
}

/// The reciprocals satisfy the triangle inequality.
pub fn altitudes_exists(t: [f64; 3]) -> bool {
    all_positive(t) && sides_exists(t.map(|x| 1.0 / x))
}

/// Reconstructs from the altitudes and classifies.
pub fn altitudes_acute(t: [f64; 3]) -> Result<bool> {
    if !altitudes_exists(t) {
        return Ok(false);
    }
    let [u, v, w] = t;
    Ok(classify(&solvers::solve_from_altitudes(u, v, w)?.sides).is_acute())
}

/// `uv + vw + wu > max(u², v², w²)`.
pub fn exradii_acute(t: [f64; 3]) -> bool {
    let [u, v, w] = t;
    let m = u.max(v).max(w);
    all_positive(t) && u * v + v * w + w * u > m * m
}

/// Strictly ordered parts give a unique altitude–bisector–median triangle.
pub fn cevian_hwm_exists(t: [f64; 3]) -> bool {
    let [u, v, w] = sorted(t);
    u > 0.0 && u < v && v < w
}

/// With `u < v < w` the sorted triple, the triangle is acute iff `2u² > v²`
/// and
///
/// ```text
/// u √(v⁴ − 3u²(v² − u²)) / (2u² − v²)  <  w  <  u v² / (2u² − v²)
/// ```
pub fn cevian_hwm_acute(t: [f64; 3]) -> bool {
    if !cevian_hwm_exists(t) {
        return false;
    }
    let [u, v, w] = sorted(t);
    let (u2, v2) = (u * u, v * v);
    let denom = 2.0 * u2 - v2;
    if denom <= 0.0 {
        return false;
    }
    let lower = u * (v2 * v2 - 3.0 * u2 * (v2 - u2)).sqrt() / denom;
    let upper = u * v2 / denom;
    lower < w && w < upper
}

/// `max(r, s, t)³ < 4rst`.
pub fn tangent_circles_exists(t: [f64; 3]) -> bool {
    let [r, s, q] = t;
    let m = r.max(s).max(q);
    all_positive(t) && m * m * m < 4.0 * r * s * q
}

/// With radii sorted `r ≥ s ≥ t` the largest angle of the enclosing triangle
/// sits at the vertex hugging the smallest circle; it is acute iff
///
/// ```text
/// 2(r − t)√(st) + 2(s − t)√(rt) < rt + st + t² − rs
/// ```
pub fn tangent_circles_acute(t: [f64; 3]) -> bool {
    if !tangent_circles_exists(t) {
        return false;
    }
    let [small, s, r] = sorted(t);
    2.0 * (r - small) * (s * small).sqrt() + 2.0 * (s - small) * (r * small).sqrt()
        < r * small + s * small + small * small - r * s
}

/// `√2 u²vw + u²(v² + w²) − v²w² > 0` for each cyclic arrangement.
pub fn incenter_acute(t: [f64; 3]) -> bool {
    let [u, v, w] = t;
    let term = |x: f64, y: f64, z: f64| {
        std::f64::consts::SQRT_2 * x * x * y * z + x * x * (y * y + z * z) - y * y * z * z
    };
    all_positive(t) && term(u, v, w) > 0.0 && term(v, u, w) > 0.0 && term(w, u, v) > 0.0
}

/// Reconstructs from the bisectors and classifies.
pub fn angle_bisectors_acute(t: [f64; 3]) -> Result<bool> {
    if !all_positive(t) {
        return Ok(false);
    }
    let [u, v, w] = t;
    let rec = solvers::solve_from_angle_bisectors(u, v, w, BisectorOptions::default())?;
    Ok(classify(&rec.sides).is_acute())
}

/// The constructive counterpart of [`evaluate`]: build the triangle with the
/// inverse solvers (or directly from the side formulas) and classify it,
/// without using any of the inequalities above.
///
/// A construction that provably has no solution gives `false`; numerical
/// failures are returned as errors.
pub fn constructive(event: EventDescriptor, t: [f64; 3]) -> Result<bool> {
    use Interpretation::*;
    let [u, v, w] = t;
    let built = match event.interpretation {
        Sides => TriangleSides::new(u, v, w).map_err(|_| Error::NoTriangle("sides")),
        Medians => {
            // side formulas `a² = (4/9)(2v² + 2w² − u²)`, then the triangle
            // inequality on the result
            let sq = |x: f64, y: f64, z: f64| 4.0 / 9.0 * (2.0 * (y * y + z * z) - x * x);
            let s = [sq(u, v, w), sq(v, u, w), sq(w, u, v)];
            if s.iter().any(|x| *x <= 0.0) {
                Err(Error::NoTriangle("median side formula"))
            } else {
                TriangleSides::new(s[0].sqrt(), s[1].sqrt(), s[2].sqrt())
                    .map_err(|_| Error::NoTriangle("median sides"))
            }
        }
        Altitudes => solvers::solve_from_altitudes(u, v, w).map(|r| r.sides),
        Exradii => solvers::solve_from_exradii(u, v, w).map(|r| r.sides),
        IncenterDistances => solvers::solve_from_incenter_distances(u, v, w).map(|r| r.sides),
        CevianHwm => {
            let [u, v, w] = sorted(t);
            solvers::solve_from_cevian_triple(u, v, w).map(|r| r.sides)
        }
        TangentCircles => solvers::solve_from_tangent_radii(u, v, w).map(|r| r.sides),
        AngleBisectors => {
            solvers::solve_from_angle_bisectors(u, v, w, BisectorOptions::default()).map(|r| r.sides)
        }
        CircumcenterDistances => {
            solvers::solve_from_circumcenter_distances(u, v, w, Branch::Acute).map(|r| r.sides)
        }
    };
    match built {
        Ok(sides) => Ok(match event.predicate {
            Predicate::Exists => true,
            Predicate::Acute => classify(&sides).is_acute(),
        }),
        Err(Error::NoTriangle(_) | Error::NoUniqueConstruction(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether the distances from `p` to the sides of `triangle` (placed by
/// [`crate::elements::embed`]) are the sides of a triangle; `None` when `p`
/// is not strictly inside.
pub fn general_triangle_sides_exists(p: (f64, f64), triangle: &TriangleSides) -> Option<bool> {
    distances_to_sides(triangle, p).map(sides_exists)
}

/// Same as [`general_triangle_sides_exists`] for an acute triangle.
pub fn general_triangle_sides_acute(p: (f64, f64), triangle: &TriangleSides) -> Option<bool> {
    distances_to_sides(triangle, p).map(sides_acute)
}
