//! The triangle circumscribing three mutually tangent circles.
//!
//! Each side of the triangle must be an external common tangent of two of
//! the circles with the third circle on the same side. We build the circles
//! explicitly, try every admissible choice of tangent lines and keep the
//! choices whose half-planes close up into a bounded triangle. This is a
//! direct geometric construction, independent of the radius inequalities
//! used by the predicates.

use crate::elements::TriangleSides;
use crate::error::{Error, Result};

use super::{Reconstruction, RESIDUAL_LIMIT};

type Point = (f64, f64);

#[derive(Debug, Clone, Copy)]
struct Line {
    /// unit normal pointing towards the circles
    normal: Point,
    offset: f64,
}

impl Line {
    fn signed_distance(&self, p: Point) -> f64 {
        self.normal.0 * p.0 + self.normal.1 * p.1 - self.offset
    }
}

fn cross(a: Point, b: Point) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn intersect(l: &Line, m: &Line) -> Point {
    let det = cross(l.normal, m.normal);
    (
        (l.offset * m.normal.1 - m.offset * l.normal.1) / det,
        (l.normal.0 * m.offset - m.normal.0 * l.offset) / det,
    )
}

fn centres(radii: [f64; 3]) -> [Point; 3] {
    let [r1, r2, r3] = radii;
    let (d12, d13, d23) = (r1 + r2, r1 + r3, r2 + r3);
    let x3 = (d13 * d13 - d23 * d23 + d12 * d12) / (2.0 * d12);
    let y3 = (d13 * d13 - x3 * x3).max(0.0).sqrt();
    [(0.0, 0.0), (d12, 0.0), (x3, y3)]
}

/// External tangents of circles `i` and `j` that keep circle `k` on their
/// inner side.
fn admissible_tangents(c: &[Point; 3], radii: [f64; 3], i: usize, j: usize, k: usize) -> Vec<Line> {
    let d = (c[i].0 - c[j].0, c[i].1 - c[j].1);
    let len = d.0.hypot(d.1);
    let e = (d.0 / len, d.1 / len);
    let perp = (-e.1, e.0);
    let cos = (radii[i] - radii[j]) / len;
    let sin = (1.0 - cos * cos).max(0.0).sqrt();
    [sin, -sin]
        .into_iter()
        .map(|s| {
            let normal = (cos * e.0 + s * perp.0, cos * e.1 + s * perp.1);
            let offset = normal.0 * c[i].0 + normal.1 * c[i].1 - radii[i];
            Line { normal, offset }
        })
        .filter(|l| l.signed_distance(c[k]) > radii[k])
        .collect()
}

/// A circumscribing triangle found by [`outer_triangles`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterTriangle {
    /// Side `a` is tangent to circles 2 and 3, `b` to 1 and 3, `c` to 1 and 2.
    pub sides: TriangleSides,
    /// Largest relative mismatch between a radius and the distance from its
    /// centre to the two sides it should touch.
    pub residual: f64,
}

/// Every triangle whose sides are external common tangents of pairs of the
/// circles of radii `r, s, t` (pairwise externally tangent) and whose
/// interior contains all three circles.
pub fn outer_triangles(r: f64, s: f64, t: f64) -> Vec<OuterTriangle> {
    let radii = [r, s, t];
    if !radii.iter().all(|x| x.is_finite() && *x > 0.0) {
        return Vec::new();
    }
    let c = centres(radii);
    // line k is tangent to the two circles other than k
    let l0 = admissible_tangents(&c, radii, 1, 2, 0);
    let l1 = admissible_tangents(&c, radii, 0, 2, 1);
    let l2 = admissible_tangents(&c, radii, 0, 1, 2);
    let mut found = Vec::new();
    for a in &l0 {
        for b in &l1 {
            for g in &l2 {
                let lines = [*a, *b, *g];
                let turns = [
                    cross(lines[0].normal, lines[1].normal),
                    cross(lines[1].normal, lines[2].normal),
                    cross(lines[2].normal, lines[0].normal),
                ];
                let bounded = turns.iter().all(|x| *x > 0.0) || turns.iter().all(|x| *x < 0.0);
                if !bounded {
                    continue;
                }
                // vertex k is opposite line k
                let v = [
                    intersect(&lines[1], &lines[2]),
                    intersect(&lines[0], &lines[2]),
                    intersect(&lines[0], &lines[1]),
                ];
                let dist = |p: Point, q: Point| (p.0 - q.0).hypot(p.1 - q.1);
                let Ok(sides) = TriangleSides::new(dist(v[1], v[2]), dist(v[0], v[2]), dist(v[0], v[1])) else {
                    continue;
                };
                // recompute tangency against the lines through the vertices
                let through = |p: Point, q: Point, x: Point| cross((q.0 - p.0, q.1 - p.1), (x.0 - p.0, x.1 - p.1)).abs() / dist(p, q);
                let side_ends = [(v[1], v[2]), (v[0], v[2]), (v[0], v[1])];
                let mut residual: f64 = 0.0;
                for (k, (p, q)) in side_ends.iter().enumerate() {
                    for i in (0..3).filter(|i| *i != k) {
                        let d = through(*p, *q, c[i]);
                        residual = residual.max(((d - radii[i]) / radii[i]).abs());
                    }
                }
                found.push(OuterTriangle { sides, residual });
            }
        }
    }
    found
}

/// The unique circumscribing triangle of [`outer_triangles`], if any.
pub fn solve_from_tangent_radii(r: f64, s: f64, t: f64) -> Result<Reconstruction> {
    let found = outer_triangles(r, s, t);
    match found.as_slice() {
        [] => Err(Error::NoTriangle("tangent lines do not close around the circles")),
        [one] if one.residual < RESIDUAL_LIMIT => Ok(Reconstruction {
            sides: one.sides,
            auxiliary: None,
            residual: one.residual,
        }),
        [one] => Err(Error::ResidualTooLarge { residual: one.residual }),
        _ => Err(Error::NoUniqueConstruction("several circumscribing triangles")),
    }
}
