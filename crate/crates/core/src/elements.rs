//! Forward formulas: the element triples of a triangle given by its sides.
//!
//! Side `a` is opposite vertex `A`, and so on. Each element triple is
//! returned in vertex order `(A, B, C)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for [`classify`].
pub const DEFAULT_CLASS_TOLERANCE: f64 = 1e-10;

/// Side lengths of a non-degenerate triangle.
///
/// Alongside the sides we keep the tangent lengths `x = s − a`, `y = s − b`,
/// `z = s − c` (distances from the vertices to the incircle contacts). For a
/// needle triangle the sides alone determine `s − a` only to `ε·a`, so the
/// elements that depend on it — area, angles, inradius, exradii, bisectors —
/// are computed from the tangent lengths instead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", try_from = "[f64; 3]")]
pub struct TriangleSides {
    a: f64,
    b: f64,
    c: f64,
    tangent: [f64; 3],
}

impl From<TriangleSides> for [f64; 3] {
    fn from(t: TriangleSides) -> Self {
        t.as_array()
    }
}

impl TryFrom<[f64; 3]> for TriangleSides {
    type Error = Error;

    fn try_from(s: [f64; 3]) -> Result<Self> {
        TriangleSides::new(s[0], s[1], s[2])
    }
}

impl TriangleSides {
    /// Checks positivity and the strict triangle inequality.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let finite = a.is_finite() && b.is_finite() && c.is_finite();
        if !(finite && a > 0.0 && b > 0.0 && c > 0.0 && a + b + c > 2.0 * a.max(b).max(c)) {
            return Err(Error::InvalidTriangle(a, b, c));
        }
        // Kahan's ordering: with p ≥ q ≥ r the differences p − q are exact
        // whenever they matter.
        let mut idx = [0usize, 1, 2];
        let sides = [a, b, c];
        idx.sort_by(|i, j| sides[*j].total_cmp(&sides[*i]));
        let [p, q, r] = idx.map(|i| sides[i]);
        let sorted_tangent = [0.5 * (r - (p - q)), 0.5 * (r + (p - q)), 0.5 * (p + (q - r))];
        let mut tangent = [0.0; 3];
        for (k, i) in idx.into_iter().enumerate() {
            tangent[i] = sorted_tangent[k];
        }
        if tangent.iter().any(|x| *x <= 0.0) {
            return Err(Error::InvalidTriangle(a, b, c));
        }
        Ok(Self { a, b, c, tangent })
    }

    /// The triangle with tangent lengths `(x, y, z)`: `a = y + z`,
    /// `b = x + z`, `c = x + y`.
    pub fn from_tangent_lengths(x: f64, y: f64, z: f64) -> Result<Self> {
        let ok = [x, y, z].iter().all(|v| v.is_finite() && *v > 0.0);
        if !ok {
            return Err(Error::InvalidTriangle(y + z, x + z, x + y));
        }
        Ok(Self {
            a: y + z,
            b: x + z,
            c: x + y,
            tangent: [x, y, z],
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// `(s − a, s − b, s − c)`.
    pub fn tangent_lengths(&self) -> [f64; 3] {
        self.tangent
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        let [x, y, z] = self.tangent;
        let t = Self::from_tangent_lengths(k * x, k * y, k * z)?;
        Ok(Self {
            a: k * self.a,
            b: k * self.b,
            c: k * self.c,
            ..t
        })
    }

    /// The same triangle with sides listed as `(x, y, z)` taken from the
    /// permutation `perm` of `(a, b, c)`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let s = self.as_array();
        Self {
            a: s[perm[0]],
            b: s[perm[1]],
            c: s[perm[2]],
            tangent: perm.map(|i| self.tangent[i]),
        }
    }

    pub fn semiperimeter(&self) -> f64 {
        let [x, y, z] = self.tangent;
        x + y + z
    }

    /// Heron's formula in tangent lengths, `S = √(xyz(x + y + z))`.
    pub fn area(&self) -> f64 {
        let [x, y, z] = self.tangent;
        (x * y * z).sqrt() * (x + y + z).sqrt()
    }

    /// Angles `(A, B, C)` in radians, via `tan(A/2) = r/(s − a)`.
    pub fn angles(&self) -> [f64; 3] {
        let r = self.inradius();
        self.tangent.map(|x| 2.0 * r.atan2(x))
    }

    pub fn circumradius(&self) -> f64 {
        self.a * self.b * self.c / (4.0 * self.area())
    }

    /// `r = √(xyz/(x + y + z))`.
    pub fn inradius(&self) -> f64 {
        let [x, y, z] = self.tangent;
        (x * y * z / (x + y + z)).sqrt()
    }
}

/// Places the triangle in the plane as `B = (0, 0)`, `C = (a, 0)` and `A`
/// above the x-axis; returns `[A, B, C]`.
pub fn embed(t: &TriangleSides) -> [(f64, f64); 3] {
    let [a, b, c] = t.as_array();
    let x = (a * a + c * c - b * b) / (2.0 * a);
    let y = 2.0 * t.area() / a;
    [(x, y), (0.0, 0.0), (a, 0.0)]
}

/// Distances from `p` to the lines `BC`, `CA` and `AB` of [`embed`]'s
/// placement, or `None` when `p` is not strictly inside the triangle.
pub fn distances_to_sides(t: &TriangleSides, p: (f64, f64)) -> Option<[f64; 3]> {
    let [va, vb, vc] = embed(t);
    let [a, b, c] = t.as_array();
    // signed twice-areas, positive inside for the counter-clockwise B, C, A
    let twice = |p0: (f64, f64), p1: (f64, f64)| (p1.0 - p0.0) * (p.1 - p0.1) - (p1.1 - p0.1) * (p.0 - p0.0);
    let d = [twice(vb, vc) / a, twice(vc, va) / b, twice(va, vb) / c];
    d.iter().all(|x| *x > 0.0).then_some(d)
}

/// One of the three vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    fn index(self) -> usize {
        match self {
            Vertex::A => 0,
            Vertex::B => 1,
            Vertex::C => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Acute,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleClass {
    pub kind: ClassKind,
    pub tolerance: f64,
}

impl TriangleClass {
    pub fn is_acute(&self) -> bool {
        self.kind == ClassKind::Acute
    }
}

/// Classifies with [`DEFAULT_CLASS_TOLERANCE`].
pub fn classify(t: &TriangleSides) -> TriangleClass {
    classify_with(t, DEFAULT_CLASS_TOLERANCE)
}

/// Acute when every `b² + c² − a²` exceeds `tolerance · max²`; right when the
/// smallest of them is within `± tolerance · max²`.
pub fn classify_with(t: &TriangleSides, tolerance: f64) -> TriangleClass {
    let [a, b, c] = t.as_array();
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let margin = (b2 + c2 - a2).min(a2 + c2 - b2).min(a2 + b2 - c2);
    let scale = tolerance * a2.max(b2).max(c2);
    let kind = if margin > scale {
        ClassKind::Acute
    } else if margin >= -scale {
        ClassKind::Right
    } else {
        ClassKind::Obtuse
    };
    TriangleClass { kind, tolerance }
}

/// `m_a = ½ √(2b² + 2c² − a²)`, evaluated as `½ √(4s(s − a) + (b − c)²)`.
pub fn medians(t: &TriangleSides) -> [f64; 3] {
    let [a, b, c] = t.as_array();
    let [x, y, z] = t.tangent_lengths();
    let s = t.semiperimeter();
    let m = |tx: f64, p: f64, q: f64| 0.5 * (4.0 * s * tx + (p - q) * (p - q)).sqrt();
    [m(x, b, c), m(y, a, c), m(z, a, b)]
}

/// `h_a = 2S / a`.
pub fn altitudes(t: &TriangleSides) -> [f64; 3] {
    let two_s = 2.0 * t.area();
    t.as_array().map(|side| two_s / side)
}

/// `r_a = S / (s − a)`, the same as `2S / (b + c − a)`.
pub fn exradii(t: &TriangleSides) -> [f64; 3] {
    let area = t.area();
    t.tangent_lengths().map(|x| area / x)
}

/// How distances from a centre to the sides are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterConvention {
    /// Plain distances, for any triangle.
    Unsigned,
    /// `R cos A` etc.; the side facing an obtuse angle gets a negative value.
    Signed,
    /// Plain distances, but only for acute triangles.
    AcuteOnly,
}

/// Distances from the circumcentre to the sides `(BC, CA, AB)`, i.e.
/// `R cos A = a (b² + c² − a²) / (8S)` and its cyclic images, evaluated as
/// `R (x² − r²)/(x² + r²)` with `x = s − a`.
pub fn circumcenter_distances(t: &TriangleSides, convention: CenterConvention) -> Result<[f64; 3]> {
    let big_r = t.circumradius();
    let r = t.inradius();
    let signed = t.tangent_lengths().map(|x| big_r * (x - r) * (x + r) / (x * x + r * r));
    match convention {
        CenterConvention::Signed => Ok(signed),
        CenterConvention::Unsigned => Ok(signed.map(f64::abs)),
        CenterConvention::AcuteOnly => {
            let class = classify(t);
            if class.is_acute() {
                Ok(signed)
            } else {
                Err(Error::NotAcute(class.kind))
            }
        }
    }
}

/// Distances from the orthocentre to the vertices, `HA = 2R cos A`.
pub fn orthocenter_distances(t: &TriangleSides, convention: CenterConvention) -> Result<[f64; 3]> {
    circumcenter_distances(t, convention).map(|d| d.map(|v| 2.0 * v))
}

/// Distances `(AI, BI, CI)` from the vertices to the incentre,
/// `AI² = r² + (s − a)²`.
pub fn incenter_vertex_distances(t: &TriangleSides) -> [f64; 3] {
    let r = t.inradius();
    t.tangent_lengths().map(|x| r.hypot(x))
}

/// Internal bisectors, `w_a = √(bc (b + c − a)(b + c + a)) / (b + c)`, with
/// `b + c − a = 2(s − a)`.
pub fn angle_bisectors(t: &TriangleSides) -> [f64; 3] {
    let [a, b, c] = t.as_array();
    let [x, y, z] = t.tangent_lengths();
    let s = t.semiperimeter();
    let w = |tx: f64, p: f64, q: f64| 2.0 * (p * q).sqrt() * (tx * s).sqrt() / (p + q);
    [w(x, b, c), w(y, a, c), w(z, a, b)]
}

/// Altitude, internal bisector and median issued from one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cevians {
    pub altitude: f64,
    pub bisector: f64,
    pub median: f64,
}

impl Cevians {
    pub fn as_array(&self) -> [f64; 3] {
        [self.altitude, self.bisector, self.median]
    }
}

pub fn vertex_cevians(t: &TriangleSides, vertex: Vertex) -> Cevians {
    let i = vertex.index();
    Cevians {
        altitude: altitudes(t)[i],
        bisector: angle_bisectors(t)[i],
        median: medians(t)[i],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tri(a: f64, b: f64, c: f64) -> TriangleSides {
        TriangleSides::new(a, b, c).unwrap()
    }

    #[test]
    fn rejects_degenerate_sides() {
        assert!(TriangleSides::new(1.0, 2.0, 3.0).is_err());
        assert!(TriangleSides::new(0.0, 1.0, 1.0).is_err());
        assert!(TriangleSides::new(-1.0, 1.0, 1.0).is_err());
        assert!(TriangleSides::new(f64::INFINITY, 1.0, 1.0).is_err());
    }

    #[test]
    fn medians_examples() {
        let m = medians(&tri(3.0, 4.0, 5.0));
        assert_relative_eq!(m[0], 73f64.sqrt() / 2.0, max_relative = 1e-15);
        assert_relative_eq!(m[1], 13f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(m[2], 2.5, max_relative = 1e-15);
        let s = 1.7;
        for v in medians(&tri(s, s, s)) {
            assert_relative_eq!(v, s * 3f64.sqrt() / 2.0, max_relative = 1e-15);
        }
        assert_relative_eq!(medians(&tri(2.0, 2.0, 3.0))[2], 7f64.sqrt() / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn altitudes_examples() {
        let h = altitudes(&tri(3.0, 4.0, 5.0));
        assert_relative_eq!(h[0], 4.0, max_relative = 1e-15);
        assert_relative_eq!(h[1], 3.0, max_relative = 1e-15);
        assert_relative_eq!(h[2], 2.4, max_relative = 1e-15);
        let h = altitudes(&tri(2.0, 2.0, 3.0));
        assert_relative_eq!(h[2], 2.0 * 0.75 * 7f64.sqrt() / 3.0, max_relative = 1e-15);
        for v in altitudes(&tri(2.0, 2.0, 2.0)) {
            assert_relative_eq!(v, 3f64.sqrt(), max_relative = 1e-15);
        }
    }

    #[test]
    fn exradii_examples() {
        let s = 2.0 / 3f64.sqrt();
        for v in exradii(&tri(s, s, s)) {
            assert_relative_eq!(v, 1.0, max_relative = 1e-15);
        }
        let r = exradii(&tri(3.0, 4.0, 5.0));
        assert_relative_eq!(r[0], 2.0, max_relative = 1e-15);
        assert_relative_eq!(r[1], 3.0, max_relative = 1e-15);
        assert_relative_eq!(r[2], 6.0, max_relative = 1e-15);
    }

    #[test]
    fn circumcenter_examples() {
        let d = circumcenter_distances(&tri(2.0, 2.0, 2.0), CenterConvention::AcuteOnly).unwrap();
        for v in d {
            assert_relative_eq!(v, 1.0 / 3f64.sqrt(), max_relative = 1e-15);
        }
        let right = tri(3.0, 4.0, 5.0);
        let d = circumcenter_distances(&right, CenterConvention::Unsigned).unwrap();
        assert!(d[2].abs() < 1e-15);
        assert_relative_eq!(d[0], 2.0, max_relative = 1e-15);
        assert_relative_eq!(d[1], 1.5, max_relative = 1e-15);
        assert_eq!(
            circumcenter_distances(&right, CenterConvention::AcuteOnly),
            Err(Error::NotAcute(ClassKind::Right))
        );
        let obtuse = tri(2.0, 2.0, 3.0);
        let signed = circumcenter_distances(&obtuse, CenterConvention::Signed).unwrap();
        assert!(signed[2] < 0.0 && signed[0] > 0.0 && signed[1] > 0.0);
        let plain = circumcenter_distances(&obtuse, CenterConvention::Unsigned).unwrap();
        assert_eq!(plain, signed.map(f64::abs));
    }

    #[test]
    fn orthocenter_doubles_circumcenter() {
        let t = tri(5.0, 6.0, 7.0);
        let o = circumcenter_distances(&t, CenterConvention::AcuteOnly).unwrap();
        let h = orthocenter_distances(&t, CenterConvention::AcuteOnly).unwrap();
        for i in 0..3 {
            assert_eq!(h[i], 2.0 * o[i]);
        }
        for v in orthocenter_distances(&tri(2.0, 2.0, 2.0), CenterConvention::AcuteOnly).unwrap() {
            assert_relative_eq!(v, 2.0 / 3f64.sqrt(), max_relative = 1e-15);
        }
    }

    #[test]
    fn incenter_examples() {
        let s = 1.3;
        for v in incenter_vertex_distances(&tri(s * 3f64.sqrt(), s * 3f64.sqrt(), s * 3f64.sqrt())) {
            assert_relative_eq!(v, s, max_relative = 1e-15);
        }
        let t = tri(3.0, 4.0, 5.0);
        assert_relative_eq!(t.inradius(), 1.0, max_relative = 1e-15);
        let d = incenter_vertex_distances(&t);
        let half = t.angles().map(|x| (x / 2.0).sin());
        for i in 0..3 {
            assert_relative_eq!(d[i], 1.0 / half[i], max_relative = 1e-14);
        }
    }

    #[test]
    fn bisector_examples() {
        let w = angle_bisectors(&tri(3.0, 4.0, 5.0));
        assert_relative_eq!(w[2], 12.0 * 2f64.sqrt() / 7.0, max_relative = 1e-15);
        let iso = tri(2.0, 2.0, 3.0);
        assert_relative_eq!(angle_bisectors(&iso)[2], altitudes(&iso)[2], max_relative = 1e-15);
    }

    #[test]
    fn cevian_examples() {
        let c = vertex_cevians(&tri(3.0, 4.0, 5.0), Vertex::C);
        assert_relative_eq!(c.altitude, 2.4, max_relative = 1e-15);
        assert_relative_eq!(c.bisector, 12.0 * 2f64.sqrt() / 7.0, max_relative = 1e-15);
        assert_relative_eq!(c.median, 2.5, max_relative = 1e-15);
        let c = vertex_cevians(&tri(3.0, 2.0, 2.0), Vertex::A);
        assert_relative_eq!(c.altitude, 7f64.sqrt() / 2.0, max_relative = 1e-15);
        assert_relative_eq!(c.bisector, 7f64.sqrt() / 2.0, max_relative = 1e-15);
        assert_relative_eq!(c.median, 7f64.sqrt() / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&tri(3.0, 4.0, 5.0)).kind, ClassKind::Right);
        assert_eq!(classify(&tri(2.0, 2.0, 2.0)).kind, ClassKind::Acute);
        assert_eq!(classify(&tri(2.0, 2.0, 3.0)).kind, ClassKind::Obtuse);
        assert_eq!(classify_with(&tri(3.0, 4.0, 5.0001), 1e-3).kind, ClassKind::Right);
    }

    #[test]
    fn angles_sum_to_pi() {
        for t in [tri(3.0, 4.0, 5.0), tri(1.0, 1.0, 1.999_999), tri(2.0, 3.0, 4.0)] {
            let s: f64 = t.angles().iter().sum();
            assert_relative_eq!(s, std::f64::consts::PI, max_relative = 1e-14);
        }
    }
}
