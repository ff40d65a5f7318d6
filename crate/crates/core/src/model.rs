//! The sampling model.
//!
//! A stick of length √3 is broken into three parts `(α, β, γ)`. The parts are
//! the distances from a point `O` of the equilateral triangle with vertices
//! `A = (1, 0)`, `B = (−1, 0)` and `C = (0, √3)` to its three sides, so a
//! uniformly distributed point gives a uniformly distributed break:
//!
//! ```text
//! α = y,   β = (√3(1 + x) − y) / 2,   γ = (√3(1 − x) − y) / 2
//! ```
//!
//! The probability of an event is the area of its region divided by √3, the
//! area of the model triangle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// √3 rounded to the nearest `f64`; the length of the stick.
pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Area of the model triangle.
pub const MODEL_AREA: f64 = SQRT_3;

/// Slack used when validating points and triples that come out of floating
/// point arithmetic.
pub const MODEL_TOLERANCE: f64 = 1e-12;

/// Vertex `A` of the model triangle.
pub const VERTEX_A: (f64, f64) = (1.0, 0.0);
/// Vertex `B` of the model triangle.
pub const VERTEX_B: (f64, f64) = (-1.0, 0.0);
/// Vertex `C` of the model triangle.
pub const VERTEX_C: (f64, f64) = (0.0, SQRT_3);

/// A point of the closed model triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelPoint {
    x: f64,
    y: f64,
}

impl ModelPoint {
    /// Validates that `(x, y)` lies in the closed model triangle.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if Self::contains(x, y) {
            Ok(Self { x, y })
        } else {
            Err(Error::OutsideModel { x, y })
        }
    }

    /// Membership test for the closed triangle, with [`MODEL_TOLERANCE`] slack.
    pub fn contains(x: f64, y: f64) -> bool {
        x.is_finite()
            && y.is_finite()
            && y >= -MODEL_TOLERANCE
            && y <= SQRT_3 * (1.0 + x) + MODEL_TOLERANCE
            && y <= SQRT_3 * (1.0 - x) + MODEL_TOLERANCE
    }

    // Samplers only produce points of the triangle up to rounding.
    pub(crate) fn from_sampler(x: f64, y: f64) -> Self {
        debug_assert!(Self::contains(x, y), "sampler left the triangle: ({x}, {y})");
        Self { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn triple(&self) -> StickTriple {
        point_to_triple(*self)
    }
}

/// Three non-negative parts of a stick of length √3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StickTriple {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl StickTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let ok = [alpha, beta, gamma].iter().all(|v| v.is_finite() && *v >= 0.0)
            && (alpha + beta + gamma - SQRT_3).abs() <= MODEL_TOLERANCE;
        if ok {
            Ok(Self { alpha, beta, gamma })
        } else {
            Err(Error::InvalidTriple(alpha, beta, gamma))
        }
    }

    /// Rescales arbitrary non-negative proportions so that they sum to √3.
    ///
    /// ```
    /// use broken_stick::model::{StickTriple, SQRT_3};
    ///
    /// let t = StickTriple::from_proportions(1.0, 1.0, 2.0).unwrap();
    /// assert!((t.gamma() - SQRT_3 / 2.0).abs() < 1e-15);
    /// ```
    pub fn from_proportions(a: f64, b: f64, c: f64) -> Result<Self> {
        let sum = a + b + c;
        if !(sum > 0.0) || a < 0.0 || b < 0.0 || c < 0.0 || !sum.is_finite() {
            return Err(Error::InvalidTriple(a, b, c));
        }
        let k = SQRT_3 / sum;
        Ok(Self {
            alpha: a * k,
            beta: b * k,
            gamma: c * k,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// Components in ascending order.
    pub fn sorted(&self) -> [f64; 3] {
        let mut v = self.as_array();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }
}

/// Maps a model point to the distances from it to the three sides.
pub fn point_to_triple(p: ModelPoint) -> StickTriple {
    let (x, y) = (p.x, p.y);
    // Points validated with slack may produce components of order -1e-16.
    StickTriple {
        alpha: y.max(0.0),
        beta: ((SQRT_3 * (1.0 + x) - y) / 2.0).max(0.0),
        gamma: ((SQRT_3 * (1.0 - x) - y) / 2.0).max(0.0),
    }
}

/// Inverse of [`point_to_triple`]: `x = (β − γ)/√3`, `y = α`.
pub fn triple_to_point(t: StickTriple) -> ModelPoint {
    ModelPoint::from_sampler((t.beta - t.gamma) / SQRT_3, t.alpha)
}

/// Which construction turns a pair of uniforms into a model point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplerKind {
    /// Two uniforms on the parallelogram spanned from `B`, folded across
    /// its diagonal.
    DirectUniform,
    /// `CO = CR + CS` with `R` on `CB`, `S` on `CA`, reflected through the
    /// origin when `O` leaves the triangle.
    Parallelogram,
}

impl SamplerKind {
    fn domain_tag(self) -> u64 {
        match self {
            SamplerKind::DirectUniform => 0x6469_7265_6374_0001,
            SamplerKind::Parallelogram => 0x7061_7261_6c6c_0002,
        }
    }
}

/// A counter-addressed stream of model points.
///
/// The point at index `i` is a pure function of `(seed, i, kind)`: the
/// ChaCha8 key comes from the seed and the sampler kind, and the index
/// selects the ChaCha stream. Any subset of indices can be evaluated in any
/// order, on any thread, with identical results.
#[derive(Debug, Clone)]
pub struct SampleStream {
    seed: u64,
    kind: SamplerKind,
    base: ChaCha8Rng,
}

impl SampleStream {
    pub fn new(seed: u64, kind: SamplerKind) -> Self {
        let base = ChaCha8Rng::seed_from_u64(seed ^ kind.domain_tag());
        Self { seed, kind, base }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn kind(&self) -> SamplerKind {
        self.kind
    }

    /// The two uniforms in `[0, 1)` assigned to `counter`.
    pub fn uniforms(&self, counter: u64) -> (f64, f64) {
        let mut rng = self.base.clone();
        rng.set_stream(counter);
        (rng.gen::<f64>(), rng.gen::<f64>())
    }

    /// The model point at `counter`, using this stream's sampler.
    pub fn point(&self, counter: u64) -> ModelPoint {
        let (u1, u2) = self.uniforms(counter);
        match self.kind {
            SamplerKind::DirectUniform => direct_point(u1, u2),
            SamplerKind::Parallelogram => parallelogram_point(u1, u2),
        }
    }

    pub fn triple(&self, counter: u64) -> StickTriple {
        point_to_triple(self.point(counter))
    }
}

/// Uniform point of the model triangle at `counter`.
///
/// Fails when the stream was built for the parallelogram sampler, so that a
/// stream is never silently reinterpreted.
pub fn sample_direct(stream: &SampleStream, counter: u64) -> Result<ModelPoint> {
    match stream.kind {
        SamplerKind::DirectUniform => Ok(stream.point(counter)),
        SamplerKind::Parallelogram => Err(Error::NoUniqueConstruction(
            "stream is configured for the parallelogram sampler",
        )),
    }
}

/// Point of the model triangle at `counter` via the parallelogram rule.
pub fn sample_parallelogram(stream: &SampleStream, counter: u64) -> Result<ModelPoint> {
    match stream.kind {
        SamplerKind::Parallelogram => Ok(stream.point(counter)),
        SamplerKind::DirectUniform => Err(Error::NoUniqueConstruction(
            "stream is configured for the direct sampler",
        )),
    }
}

/// `P = B + u₁(A − B) + u₂(C − B)`, with `(u₁, u₂) ↦ (1 − u₁, 1 − u₂)` when
/// `u₁ + u₂ > 1`.
pub fn direct_point(u1: f64, u2: f64) -> ModelPoint {
    let (u1, u2) = if u1 + u2 > 1.0 {
        (1.0 - u1, 1.0 - u2)
    } else {
        (u1, u2)
    };
    let x = VERTEX_B.0 + 2.0 * u1 + u2;
    let y = SQRT_3 * u2;
    ModelPoint::from_sampler(x.clamp(-1.0, 1.0), y)
}

/// Parallelogram construction from the positions of `R` on `CB` and `S` on
/// `CA`, given as fractions of the side measured from `C`.
///
/// `O = C + r(B − C) + s(A − C)`; when `O` is outside the triangle (which
/// happens exactly when `r + s > 1`) it is replaced by `−O`.
pub fn parallelogram_point(r: f64, s: f64) -> ModelPoint {
    let ox = VERTEX_C.0 + r * (VERTEX_B.0 - VERTEX_C.0) + s * (VERTEX_A.0 - VERTEX_C.0);
    let oy = VERTEX_C.1 + r * (VERTEX_B.1 - VERTEX_C.1) + s * (VERTEX_A.1 - VERTEX_C.1);
    let (x, y) = if r + s > 1.0 { (-ox, -oy) } else { (ox, oy) };
    ModelPoint::from_sampler(x, y.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn point_to_triple_examples() {
        let t = point_to_triple(ModelPoint::new(0.0, SQRT_3 / 3.0).unwrap());
        for v in t.as_array() {
            assert_abs_diff_eq!(v, SQRT_3 / 3.0, epsilon = 1e-15);
        }
        let t = point_to_triple(ModelPoint::new(0.0, SQRT_3 / 2.0).unwrap());
        assert_abs_diff_eq!(t.alpha(), SQRT_3 / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.beta(), SQRT_3 / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.gamma(), SQRT_3 / 4.0, epsilon = 1e-15);
        let t = point_to_triple(ModelPoint::new(1.0, 0.0).unwrap());
        assert_eq!(t.as_array(), [0.0, SQRT_3, 0.0]);
    }

    #[test]
    fn triple_to_point_examples() {
        let s = SQRT_3 / 3.0;
        let p = triple_to_point(StickTriple::new(s, s, s).unwrap());
        assert_abs_diff_eq!(p.x(), 0.0);
        assert_abs_diff_eq!(p.y(), s);
        let p = triple_to_point(StickTriple::new(SQRT_3 / 2.0, SQRT_3 / 4.0, SQRT_3 / 4.0).unwrap());
        assert_abs_diff_eq!(p.x(), 0.0);
        assert_abs_diff_eq!(p.y(), SQRT_3 / 2.0);
        let p = triple_to_point(StickTriple::new(0.0, SQRT_3, 0.0).unwrap());
        assert_abs_diff_eq!(p.x(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y(), 0.0);
    }

    #[test]
    fn rejects_points_outside() {
        assert!(ModelPoint::new(0.0, -0.1).is_err());
        assert!(ModelPoint::new(0.9, 0.5).is_err());
        assert!(ModelPoint::new(-1.0001, 0.0).is_err());
        assert!(ModelPoint::new(f64::NAN, 0.0).is_err());
        assert!(ModelPoint::new(-1.0, 0.0).is_ok());
        assert!(ModelPoint::new(0.0, SQRT_3).is_ok());
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(StickTriple::new(1.0, 1.0, 1.0).is_err());
        assert!(StickTriple::new(-0.1, SQRT_3, 0.1).is_err());
        assert!(StickTriple::from_proportions(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn parallelogram_examples() {
        let p = parallelogram_point(0.5, 0.5);
        assert_abs_diff_eq!(p.x(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y(), 0.0, epsilon = 1e-15);
        let p = parallelogram_point(0.0, 0.0);
        let t = p.triple();
        assert_abs_diff_eq!(t.alpha(), SQRT_3);
        assert_abs_diff_eq!(t.beta(), 0.0);
        assert_abs_diff_eq!(t.gamma(), 0.0);
        // r + s > 1 reflects through the origin back inside
        let p = parallelogram_point(0.9, 0.8);
        assert!(ModelPoint::contains(p.x(), p.y()));
        assert_abs_diff_eq!(p.x(), 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y(), SQRT_3 * 0.7, epsilon = 1e-15);
    }

    #[test]
    fn stream_is_counter_addressed() {
        let s = SampleStream::new(0, SamplerKind::DirectUniform);
        let a = s.point(0);
        let b = SampleStream::new(0, SamplerKind::DirectUniform).point(0);
        assert_eq!(a, b);
        assert!(ModelPoint::contains(a.x(), a.y()));
        // evaluating other counters first does not disturb a given index
        let _ = s.point(17);
        assert_eq!(s.point(0), a);
        assert_ne!(s.point(1), a);
        let other = SampleStream::new(0, SamplerKind::Parallelogram);
        assert_ne!(other.uniforms(0), s.uniforms(0));
    }

    #[test]
    fn sampler_kind_is_enforced() {
        let s = SampleStream::new(3, SamplerKind::DirectUniform);
        assert!(sample_direct(&s, 0).is_ok());
        assert!(sample_parallelogram(&s, 0).is_err());
    }
}
