//! Inverse constructions: from an element triple back to the triangle.
//!
//! Every solver returns a [`Reconstruction`] whose `residual` is the largest
//! relative deviation between the input triple and the same elements
//! recomputed from the reconstructed sides. Successful reconstructions always
//! have `residual < RESIDUAL_LIMIT`.
//!
//! No-triangle conditions are evaluated exactly on the input floats; only the
//! classification of a reconstructed triangle uses a tolerance.

mod bisectors;
mod integer;
mod tangent;

use serde::{Deserialize, Serialize};

use crate::elements::{
    self, altitudes, circumcenter_distances, exradii, incenter_vertex_distances, medians,
    vertex_cevians, CenterConvention, ClassKind, TriangleSides, Vertex,
};
use crate::error::{Error, Result};
use crate::roots::{Cubic, CubicRoot};

pub use bisectors::{solve_from_angle_bisectors, BisectorOptions};
pub use integer::{find_integer_circum_solutions, pell_family, IntegerSolution};
pub use tangent::{outer_triangles, solve_from_tangent_radii, OuterTriangle};

/// Upper bound on the backward error of a successful reconstruction.
pub const RESIDUAL_LIMIT: f64 = 1e-9;

/// A triangle recovered from one of its element triples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub sides: TriangleSides,
    /// `R` for centre distances, `r` for incentre distances, the half-base
    /// `t` for the cevian triple.
    pub auxiliary: Option<f64>,
    pub residual: f64,
}

/// Which of the two triangles sharing circumcentre distances is wanted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Acute,
    Obtuse,
}

pub(crate) fn relative_residual(computed: [f64; 3], target: [f64; 3]) -> f64 {
    computed
        .iter()
        .zip(target)
        .map(|(c, t)| ((c - t) / t).abs())
        .fold(0.0, f64::max)
}

fn positive(u: f64, v: f64, w: f64) -> Result<()> {
    if [u, v, w].iter().all(|x| x.is_finite() && *x > 0.0) {
        Ok(())
    } else {
        Err(Error::NoTriangle("element lengths must be positive"))
    }
}

fn sides_or_no_triangle(a: f64, b: f64, c: f64, why: &'static str) -> Result<TriangleSides> {
    TriangleSides::new(a, b, c).map_err(|_| Error::NoTriangle(why))
}

fn accept(
    sides: TriangleSides,
    auxiliary: Option<f64>,
    forward: [f64; 3],
    target: [f64; 3],
) -> Result<Reconstruction> {
    let residual = relative_residual(forward, target);
    if residual < RESIDUAL_LIMIT {
        Ok(Reconstruction {
            sides,
            auxiliary,
            residual,
        })
    } else {
        Err(Error::ResidualTooLarge { residual })
    }
}

/// Median triangle: `a² = (4/9)(2(m_b² + m_c²) − m_a²)`.
///
/// A triangle exists iff `u + v + w > 2 max(u, v, w)`.
///
/// ```
/// use broken_stick::solvers::solve_from_medians;
///
/// let rec = solve_from_medians(73f64.sqrt() / 2.0, 13f64.sqrt(), 2.5).unwrap();
/// let [a, b, c] = rec.sides.as_array();
/// assert!((a - 3.0).abs() < 1e-12 && (b - 4.0).abs() < 1e-12 && (c - 5.0).abs() < 1e-12);
/// assert!(solve_from_medians(1.0, 1.0, 2.1).is_err());
/// ```
pub fn solve_from_medians(u: f64, v: f64, w: f64) -> Result<Reconstruction> {
    positive(u, v, w)?;
    if !(u + v + w > 2.0 * u.max(v).max(w)) {
        return Err(Error::NoTriangle("medians violate u + v + w > 2 max"));
    }
    let side = |x: f64, y: f64, z: f64| (4.0 / 9.0 * (2.0 * (y * y + z * z) - x * x)).sqrt();
    let sides = sides_or_no_triangle(side(u, v, w), side(v, u, w), side(w, u, v), "median sides degenerate")?;
    accept(sides, None, medians(&sides), [u, v, w])
}

/// Sides proportional to `(1/u, 1/v, 1/w)`, scaled so the altitudes match.
pub fn solve_from_altitudes(u: f64, v: f64, w: f64) -> Result<Reconstruction> {
    positive(u, v, w)?;
    let (p, q, r) = (1.0 / u, 1.0 / v, 1.0 / w);
    if !(p + q + r > 2.0 * p.max(q).max(r)) {
        return Err(Error::NoTriangle("reciprocal altitudes violate the triangle inequality"));
    }
    let unit = sides_or_no_triangle(p, q, r, "reciprocal altitudes degenerate")?;
    // altitudes of k·unit are 2k·S(unit)·(u, v, w)
    let k = 1.0 / (2.0 * unit.area());
    let sides = sides_or_no_triangle(k * p, k * q, k * r, "reciprocal altitudes degenerate")?;
    accept(sides, None, altitudes(&sides), [u, v, w])
}

/// `a = (uv + uw)/√(uv + vw + wu)` and cyclic; always exists. The auxiliary
/// value is the area `uvw/√(uv + vw + wu)`.
pub fn solve_from_exradii(u: f64, v: f64, w: f64) -> Result<Reconstruction> {
    positive(u, v, w)?;
    let root = (u * v + v * w + w * u).sqrt();
    // tangent lengths s − a = vw/root and cyclic
    let sides = TriangleSides::from_tangent_lengths(v * w / root, u * w / root, u * v / root)
        .map_err(|_| Error::NoTriangle("exradius sides degenerate"))?;
    accept(sides, Some(u * v * w / root), exradii(&sides), [u, v, w])
}

/// `R³ − (u² + v² + w²)R ∓ 2uvw` for the acute (−) and obtuse (+) branch.
pub fn circumradius_cubic(u: f64, v: f64, w: f64, branch: Branch) -> Cubic {
    let sign = match branch {
        Branch::Acute => -1.0,
        Branch::Obtuse => 1.0,
    };
    Cubic::new(1.0, 0.0, -(u * u + v * v + w * w), sign * 2.0 * u * v * w)
}

/// The circumradius cubic shifted to `R = m + δ`, `m = max(u, v, w)`, with
/// `p, q` the other two distances:
///
/// ```text
/// δ³ + 3mδ² + (2m² − p² − q²)δ − m(p ± q)²
/// ```
///
/// (`+` on the acute branch). The constant term is exact, so a small offset
/// `δ` — a needle triangle — keeps full relative precision.
pub fn circumradius_offset_cubic(u: f64, v: f64, w: f64, branch: Branch) -> Cubic {
    let (m, p, q) = split_max(u, v, w);
    let pq = match branch {
        Branch::Acute => p + q,
        Branch::Obtuse => p - q,
    };
    Cubic::new(1.0, 3.0 * m, 2.0 * m * m - p * p - q * q, -m * pq * pq)
}

fn split_max(u: f64, v: f64, w: f64) -> (f64, f64, f64) {
    if u >= v && u >= w {
        (u, v, w)
    } else if v >= w {
        (v, u, w)
    } else {
        (w, u, v)
    }
}

/// The root `R − max(u, v, w)` of [`circumradius_offset_cubic`].
///
/// `R` lies in `(max, 2ω]` with `ω² = (u² + v² + w²)/3` on both branches:
/// the cubic is `≤ 0` at the maximum and positive at `2ω`.
pub fn circumradius_offset(u: f64, v: f64, w: f64, branch: Branch) -> Result<CubicRoot> {
    let m = u.max(v).max(w);
    let omega = ((u * u + v * v + w * w) / 3.0).sqrt();
    circumradius_offset_cubic(u, v, w, branch).root_in(0.0, (2.0 * omega - m).max(0.0))
}

/// The positive root of [`circumradius_cubic`] above `max(u, v, w)`.
pub fn circumradius_root(u: f64, v: f64, w: f64, branch: Branch) -> Result<CubicRoot> {
    let m = u.max(v).max(w);
    let offset = circumradius_offset(u, v, w, branch)?;
    Ok(CubicRoot {
        coefficients: circumradius_cubic(u, v, w, branch).coefficients,
        root: m + offset.root,
        bracket: (m + offset.bracket.0, m + offset.bracket.1),
    })
}

/// `u + v + w − R − √(2(R − u)(R − v)(R − w)/R)`; zero for the acute branch.
pub fn circumradius_identity_gap(u: f64, v: f64, w: f64, r: f64) -> f64 {
    let inner = (2.0 * (r - u) * (r - v) * (r - w) / r).max(0.0);
    u + v + w - r - inner.sqrt()
}

/// All triangles on `branch` whose circumcentre lies at distances `(u, v, w)`
/// from the sides `(BC, CA, AB)`.
///
/// The positive root above `max(u, v, w)` is unique on both branches, so at
/// most one triangle comes back; an empty result means the root produced a
/// degenerate or mismatched triangle (for instance two equal smaller
/// distances on the obtuse branch).
pub fn solve_from_circumcenter_distances_all(
    u: f64,
    v: f64,
    w: f64,
    branch: Branch,
) -> Result<Vec<Reconstruction>> {
    positive(u, v, w)?;
    let m = u.max(v).max(w);
    let delta = circumradius_offset(u, v, w, branch)?.root;
    let r = m + delta;
    // R − d = (m − d) + δ avoids cancelling R against d
    let side = |d: f64| 2.0 * (((m - d) + delta) * (r + d)).max(0.0).sqrt();
    let Ok(sides) = TriangleSides::new(side(u), side(v), side(w)) else {
        return Ok(Vec::new());
    };
    let wanted = match branch {
        Branch::Acute => ClassKind::Acute,
        Branch::Obtuse => ClassKind::Obtuse,
    };
    if elements::classify(&sides).kind != wanted {
        return Ok(Vec::new());
    }
    let forward = circumcenter_distances(&sides, CenterConvention::Unsigned)?;
    Ok(accept(sides, Some(r), forward, [u, v, w]).into_iter().collect())
}

/// The unique triangle of the requested branch; see
/// [`solve_from_circumcenter_distances_all`].
pub fn solve_from_circumcenter_distances(u: f64, v: f64, w: f64, branch: Branch) -> Result<Reconstruction> {
    let mut all = solve_from_circumcenter_distances_all(u, v, w, branch)?;
    all.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    all.into_iter()
        .next()
        .ok_or(Error::NoTriangle("no triangle on this branch reproduces the distances"))
}

/// `HA = 2R cos A`, so this is the circumcentre problem at half the input.
pub fn solve_from_orthocenter_distances(u: f64, v: f64, w: f64, branch: Branch) -> Result<Reconstruction> {
    let rec = solve_from_circumcenter_distances(u / 2.0, v / 2.0, w / 2.0, branch)?;
    let forward = elements::orthocenter_distances(&rec.sides, CenterConvention::Unsigned)?;
    accept(rec.sides, rec.auxiliary, forward, [u, v, w])
}

/// The inradius cubic `(2/(uvw)) r³ + (1/u² + 1/v² + 1/w²) r² − 1`.
pub fn inradius_cubic(u: f64, v: f64, w: f64) -> Cubic {
    Cubic::new(
        2.0 / (u * v * w),
        1.0 / (u * u) + 1.0 / (v * v) + 1.0 / (w * w),
        0.0,
        -1.0,
    )
}

/// [`inradius_cubic`] shifted to `r = m − δ`, `m = min(u, v, w)`, with
/// `p, q` the other two distances. The constant term is `m²(1/p + 1/q)²`
/// and every other coefficient a sum of positive terms, so a small `δ` (a
/// vertex angle near π) is found to full relative precision.
pub fn inradius_offset_cubic(u: f64, v: f64, w: f64) -> Cubic {
    let mut d = [u, v, w];
    d.sort_by(f64::total_cmp);
    let [m, p, q] = d;
    let k = 2.0 / (m * p * q);
    let sq = 1.0 / (m * m) + 1.0 / (p * p) + 1.0 / (q * q);
    let h = 1.0 / p + 1.0 / q;
    Cubic::new(
        -k,
        3.0 * k * m + sq,
        -(6.0 * m / (p * q) + 2.0 / m + 2.0 * m / (p * p) + 2.0 * m / (q * q)),
        m * m * h * h,
    )
}

/// Triangle with `AI = u`, `BI = v`, `CI = w`; always exists and is unique.
///
/// The inradius is the positive root of [`inradius_cubic`] below
/// `m = min(u, v, w)`, found as `m − δ` from [`inradius_offset_cubic`];
/// then `a = √(v² − r²) + √(w² − r²)` and cyclic.
pub fn solve_from_incenter_distances(u: f64, v: f64, w: f64) -> Result<Reconstruction> {
    positive(u, v, w)?;
    let m = u.min(v).min(w);
    let delta = inradius_offset_cubic(u, v, w).root_in(0.0, m)?.root;
    let r = m - delta;
    // d² − r² = (d − m + δ)(d + r)
    let leg = |d: f64| (((d - m) + delta) * (d + r)).max(0.0).sqrt();
    let (lu, lv, lw) = (leg(u), leg(v), leg(w));
    // the legs are the tangent lengths
    let sides = TriangleSides::from_tangent_lengths(lu, lv, lw)
        .map_err(|_| Error::NoTriangle("incentre sides degenerate"))?;
    accept(sides, Some(r), incenter_vertex_distances(&sides), [u, v, w])
}

/// Triangle whose altitude, bisector and median from vertex `A` are
/// `u < v < w`.
///
/// With `δ = √(w² − u²)` (foot of the altitude to midpoint) and
/// `ω = δ − √(v² − u²)` (bisector foot to midpoint), the half-base is
/// `t = √(ωδ + ωu²/(δ − ω))`; then `a = 2t`, `b² = u² + (t − δ)²` and
/// `c² = u² + (t + δ)²`.
pub fn solve_from_cevian_triple(u: f64, v: f64, w: f64) -> Result<Reconstruction> {
    positive(u, v, w)?;
    if !(u < v && v < w) {
        return Err(Error::NoUniqueConstruction("cevian triple needs altitude < bisector < median"));
    }
    let delta = ((w - u) * (w + u)).sqrt();
    let foot_to_bisector = ((v - u) * (v + u)).sqrt();
    let omega = delta - foot_to_bisector;
    let t = (omega * delta + omega * u * u / foot_to_bisector).sqrt();
    let (b, c) = (u.hypot(t - delta), u.hypot(t + delta));
    // b − |t − δ| and c − (t + δ) without cancellation, then the tangent
    // lengths; a flat triangle has s − a ≪ a.
    let eb = u * u / (b + (t - delta).abs());
    let ec = u * u / (c + t + delta);
    let x = 0.5 * (eb + ec) + (delta - t).max(0.0);
    let z = t * (eb + ec + 2.0 * (t - delta).max(0.0)) / (b + c);
    let sides = TriangleSides::from_tangent_lengths(x, 2.0 * t - z, z)
        .map_err(|_| Error::NoTriangle("cevian triangle degenerate"))?;
    let c = vertex_cevians(&sides, Vertex::A);
    accept(sides, Some(t), c.as_array(), [u, v, w])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn assert_sides(rec: &Reconstruction, expected: [f64; 3], tol: f64) {
        let got = rec.sides.as_array();
        for i in 0..3 {
            assert_relative_eq!(got[i], expected[i], max_relative = tol);
        }
    }

    #[test]
    fn medians_examples() {
        let rec = solve_from_medians(73f64.sqrt() / 2.0, 13f64.sqrt(), 2.5).unwrap();
        assert_sides(&rec, [3.0, 4.0, 5.0], 1e-14);
        let s = 2.0 / 3f64.sqrt();
        assert_sides(&solve_from_medians(1.0, 1.0, 1.0).unwrap(), [s, s, s], 1e-15);
        assert!(matches!(solve_from_medians(1.0, 1.0, 2.1), Err(Error::NoTriangle(_))));
        assert!(solve_from_medians(1.0, 1.0, 2.0).is_err());
        assert!(solve_from_medians(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn altitudes_examples() {
        let s = 2.0 / 3f64.sqrt();
        assert_sides(&solve_from_altitudes(1.0, 1.0, 1.0).unwrap(), [s, s, s], 1e-15);
        assert_sides(&solve_from_altitudes(4.0, 3.0, 2.4).unwrap(), [3.0, 4.0, 5.0], 1e-14);
        assert!(solve_from_altitudes(1.0, 1.0, 0.49).is_err());
        assert!(solve_from_altitudes(1.0, 1.0, 0.51).is_ok());
    }

    #[test]
    fn exradii_examples() {
        let s = 2.0 / 3f64.sqrt();
        assert_sides(&solve_from_exradii(1.0, 1.0, 1.0).unwrap(), [s, s, s], 1e-15);
        let rec = solve_from_exradii(2.0, 3.0, 6.0).unwrap();
        assert_sides(&rec, [3.0, 4.0, 5.0], 1e-15);
        assert_relative_eq!(rec.auxiliary.unwrap(), 6.0, max_relative = 1e-15);
        assert!(solve_from_exradii(1e-3, 1.0, 1e3).is_ok());
    }

    #[test]
    fn circumcenter_examples() {
        let rec = solve_from_circumcenter_distances(2.0, 7.0, 11.0, Branch::Acute).unwrap();
        assert_relative_eq!(rec.auxiliary.unwrap(), 14.0, max_relative = 1e-15);
        let r3 = 3f64.sqrt();
        assert_sides(&rec, [16.0 * r3, 14.0 * r3, 10.0 * r3], 1e-14);
        let rec = solve_from_circumcenter_distances(1.0, 1.0, 1.0, Branch::Acute).unwrap();
        assert_relative_eq!(rec.auxiliary.unwrap(), 2.0, max_relative = 1e-15);
        assert_sides(&rec, [2.0 * r3; 3], 1e-15);
        let rec = solve_from_circumcenter_distances(12.0, 22.0, 28.0, Branch::Acute).unwrap();
        assert_relative_eq!(rec.auxiliary.unwrap(), 42.0, max_relative = 1e-15);
    }

    #[test]
    fn circumradius_identity_holds_on_acute_branch() {
        for (u, v, w) in [(2.0, 7.0, 11.0), (0.3, 0.9, 0.5), (1.0, 1.0, 1.0)] {
            let r = circumradius_root(u, v, w, Branch::Acute).unwrap().root;
            assert!(circumradius_identity_gap(u, v, w, r).abs() < 1e-10);
        }
    }

    #[test]
    fn obtuse_branch_reproduces_distances() {
        let rec = solve_from_circumcenter_distances(0.3, 0.9, 0.5, Branch::Obtuse).unwrap();
        assert_eq!(elements::classify(&rec.sides).kind, ClassKind::Obtuse);
        let d = circumcenter_distances(&rec.sides, CenterConvention::Unsigned).unwrap();
        assert!(relative_residual(d, [0.3, 0.9, 0.5]) < 1e-12);
        // the smallest distance faces the obtuse angle
        let signed = circumcenter_distances(&rec.sides, CenterConvention::Signed).unwrap();
        assert!(signed[0] < 0.0);
        // two equal smaller distances: the obtuse triangle degenerates
        assert!(solve_from_circumcenter_distances(2.0, 1.0, 1.0, Branch::Obtuse).is_err());
        assert!(solve_from_circumcenter_distances_all(2.0, 1.0, 1.0, Branch::Obtuse)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn orthocenter_examples() {
        let a = solve_from_orthocenter_distances(4.0, 14.0, 22.0, Branch::Acute).unwrap();
        let b = solve_from_circumcenter_distances(2.0, 7.0, 11.0, Branch::Acute).unwrap();
        assert_eq!(a.sides, b.sides);
        let r3 = 3f64.sqrt();
        assert_sides(&solve_from_orthocenter_distances(2.0, 2.0, 2.0, Branch::Acute).unwrap(), [2.0 * r3; 3], 1e-15);
    }

    #[test]
    fn incenter_examples() {
        let rec = solve_from_incenter_distances(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(rec.auxiliary.unwrap(), 0.5, max_relative = 1e-15);
        assert_sides(&rec, [3f64.sqrt(); 3], 1e-15);
        let k = 3.7;
        let a = solve_from_incenter_distances(0.4, 0.9, 0.7).unwrap();
        let b = solve_from_incenter_distances(0.4 * k, 0.9 * k, 0.7 * k).unwrap();
        for i in 0..3 {
            assert_relative_eq!(b.sides.as_array()[i], k * a.sides.as_array()[i], max_relative = 1e-13);
        }
    }

    #[test]
    fn cevian_examples() {
        let rec = solve_from_cevian_triple(2.4, 12.0 * 2f64.sqrt() / 7.0, 2.5).unwrap();
        let mut got = rec.sides.as_array();
        got.sort_by(f64::total_cmp);
        for (g, e) in got.iter().zip([3.0, 4.0, 5.0]) {
            assert_relative_eq!(*g, e, max_relative = 1e-12);
        }
        let rec = solve_from_cevian_triple(1.0, 1.0001, 1.00015).unwrap();
        assert!(rec.residual < RESIDUAL_LIMIT);
        let rec = solve_from_cevian_triple(1.0, 2.0, 3.0).unwrap();
        assert_eq!(elements::classify(&rec.sides).kind, ClassKind::Obtuse);
        assert!(solve_from_cevian_triple(1.0, 1.0, 1.0).is_err());
        assert!(solve_from_cevian_triple(1.0, 3.0, 2.0).is_err());
    }
}
