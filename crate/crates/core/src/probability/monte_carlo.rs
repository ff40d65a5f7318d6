//! Seeded, scheduling-independent Monte Carlo over the model.
//!
//! The index range is cut into fixed chunks of [`CHUNK`] samples; chunks run
//! in parallel and their tallies are combined in index order, so the result
//! depends only on `(seed, n, sampler)`.

use rayon::prelude::*;

use crate::elements::{embed, TriangleSides};
use crate::error::{Error, Result};
use crate::model::SampleStream;
use crate::predicates::{self, EventDescriptor, Predicate};

use super::{Method, ProbabilityEstimate};

pub const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    hits: u64,
    failures: u64,
}

fn chunks(n: u64) -> impl IndexedParallelIterator<Item = (u64, u64)> {
    let count = n.div_ceil(CHUNK) as usize;
    (0..count).into_par_iter().map(move |k| {
        let k = k as u64;
        (k * CHUNK, ((k + 1) * CHUNK).min(n))
    })
}

fn combine(per_chunk: Vec<Vec<Tally>>, width: usize) -> Vec<Tally> {
    let mut total = vec![Tally::default(); width];
    for chunk in per_chunk {
        for (t, c) in total.iter_mut().zip(chunk) {
            t.hits += c.hits;
            t.failures += c.failures;
        }
    }
    total
}

fn estimate(event: EventDescriptor, tally: Tally, n: u64, seed: u64) -> ProbabilityEstimate {
    // failed reconstructions are excluded from the denominator and reported
    let valid = n - tally.failures;
    let p = if valid == 0 { 0.0 } else { tally.hits as f64 / valid as f64 };
    let stderr = if valid == 0 { 0.0 } else { (p * (1.0 - p) / valid as f64).sqrt() };
    ProbabilityEstimate {
        event,
        method: Method::MonteCarlo,
        value: p,
        uncertainty: stderr,
        n: Some(n),
        seed: Some(seed),
        failures: tally.failures,
    }
}

/// Estimates several events from the same `n` model samples.
pub fn monte_carlo_many(
    events: &[EventDescriptor],
    n: u64,
    stream: &SampleStream,
) -> Result<Vec<ProbabilityEstimate>> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let per_chunk: Vec<Vec<Tally>> = chunks(n)
        .map(|(lo, hi)| {
            let mut tally = vec![Tally::default(); events.len()];
            for i in lo..hi {
                let t = stream.triple(i);
                for (e, slot) in events.iter().zip(tally.iter_mut()) {
                    match e.holds(&t) {
                        Ok(true) => slot.hits += 1,
                        Ok(false) => {}
                        Err(_) => slot.failures += 1,
                    }
                }
            }
            tally
        })
        .collect();
    let total = combine(per_chunk, events.len());
    Ok(events
        .iter()
        .zip(total)
        .map(|(e, t)| estimate(*e, t, n, stream.seed()))
        .collect())
}

/// Frequency of `event` over `n` model samples, with standard error
/// `√(p̂(1 − p̂)/n)`.
///
/// ```
/// use broken_stick::model::{SampleStream, SamplerKind};
/// use broken_stick::predicates::Interpretation;
/// use broken_stick::probability::monte_carlo;
///
/// let stream = SampleStream::new(7, SamplerKind::DirectUniform);
/// let p = monte_carlo(Interpretation::Exradii.exists(), 1000, &stream).unwrap();
/// assert_eq!(p.value, 1.0);
/// ```
pub fn monte_carlo(event: EventDescriptor, n: u64, stream: &SampleStream) -> Result<ProbabilityEstimate> {
    Ok(monte_carlo_many(&[event], n, stream)?.remove(0))
}

/// Uniform interior point of `t` (placed by [`embed`]) from two uniforms.
pub fn triangle_point(t: &TriangleSides, u1: f64, u2: f64) -> (f64, f64) {
    let [a, b, c] = embed(t);
    let (u1, u2) = if u1 + u2 > 1.0 { (1.0 - u1, 1.0 - u2) } else { (u1, u2) };
    (
        b.0 + u1 * (c.0 - b.0) + u2 * (a.0 - b.0),
        b.1 + u1 * (c.1 - b.1) + u2 * (a.1 - b.1),
    )
}

/// Monte Carlo counterpart of the general-triangle closed forms: the
/// distances from uniform interior points of `t` to its sides, read as
/// sides (`Exists`) or as sides of an acute triangle (`Acute`).
pub fn general_triangle_monte_carlo(
    t: &TriangleSides,
    predicate: Predicate,
    n: u64,
    stream: &SampleStream,
) -> Result<ProbabilityEstimate> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let check = match predicate {
        Predicate::Exists => predicates::general_triangle_sides_exists,
        Predicate::Acute => predicates::general_triangle_sides_acute,
    };
    let per_chunk: Vec<Vec<Tally>> = chunks(n)
        .map(|(lo, hi)| {
            let mut tally = Tally::default();
            for i in lo..hi {
                let (u1, u2) = stream.uniforms(i);
                match check(triangle_point(t, u1, u2), t) {
                    Some(true) => tally.hits += 1,
                    Some(false) => {}
                    // on the boundary: not an interior point
                    None => tally.failures += 1,
                }
            }
            vec![tally]
        })
        .collect();
    let event = EventDescriptor::new(crate::predicates::Interpretation::Sides, predicate);
    Ok(estimate(event, combine(per_chunk, 1)[0], n, stream.seed()))
}
