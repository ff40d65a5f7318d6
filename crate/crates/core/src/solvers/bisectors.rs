//! Triangle from its three internal angle bisectors.
//!
//! Existence and uniqueness for every positive triple is a theorem
//! (Mironescu–Panaitopol); there is no closed form, so the triangle is found
//! numerically. With circumradius 1 the bisector from `A` is
//! `w_a = 2 sin B sin C / cos((B − C)/2)`, so the ratios of the bisectors
//! depend on the angles only. We solve the two log-ratio equations
//!
//! ```text
//! ln w_a − ln w_c = ln(u/w),   ln w_b − ln w_c = ln(v/w)
//! ```
//!
//! for `(A, B)` by damped Newton from the equilateral triangle, and scale at
//! the end. If the line search stalls, a continuation in the target ratios
//! takes over.

use std::f64::consts::PI;

use crate::elements::TriangleSides;
use crate::error::{Error, Result};

use super::{relative_residual, Reconstruction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorOptions {
    /// Stop once the relative mismatch of the recomputed bisectors is below
    /// this.
    pub tolerance: f64,
    /// Budget of Newton iterations, shared by the direct attempt and the
    /// continuation fallback.
    pub max_iterations: usize,
}

impl Default for BisectorOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Angles {
    a: f64,
    b: f64,
}

impl Angles {
    const EQUILATERAL: Angles = Angles {
        a: PI / 3.0,
        b: PI / 3.0,
    };

    fn c(self) -> f64 {
        PI - self.a - self.b
    }

    fn feasible(self) -> bool {
        self.a > 0.0 && self.b > 0.0 && self.c() > 0.0
    }

    /// `sin` of each angle, evaluating an obtuse angle as the sine of the sum
    /// of the other two so that needle triangles keep relative accuracy.
    fn sines(self) -> [f64; 3] {
        let (a, b, c) = (self.a, self.b, self.c());
        let s = |x: f64, y: f64, z: f64| if x > 0.5 * PI { (y + z).sin() } else { x.sin() };
        [s(a, b, c), s(b, a, c), s(c, a, b)]
    }
}

/// `ln w` of the three bisectors of the triangle with circumradius 1.
///
/// `cos((B − C)/2) = sin(B + A/2)` and `cos((A − C)/2) = sin(A + B/2)` keep
/// the derived angle `C` out of the denominators.
fn log_bisectors(t: Angles) -> [f64; 3] {
    let [sa, sb, sc] = t.sines();
    let (a, b) = (t.a, t.b);
    [
        (2.0 * sb * sc).ln() - (b + 0.5 * a).sin().ln(),
        (2.0 * sa * sc).ln() - (a + 0.5 * b).sin().ln(),
        (2.0 * sa * sb).ln() - (0.5 * (a - b)).cos().ln(),
    ]
}

/// Derivatives of the log-bisectors with respect to `(A, B)`, `C = π − A − B`.
fn jacobian_rows(t: Angles) -> [[f64; 2]; 3] {
    let (a, b, c) = (t.a, t.b, t.c());
    let cot = |x: f64| x.cos() / x.sin();
    // ∂/∂y and ∂/∂z of ln sin y + ln sin z − ln cos((y − z)/2)
    let partial = |y: f64, z: f64| {
        let h = 0.5 * (0.5 * (y - z)).tan();
        (cot(y) + h, cot(z) - h)
    };
    let (la_b, la_c) = partial(b, c);
    let (lb_a, lb_c) = partial(a, c);
    let (lc_a, lc_b) = partial(a, b);
    [
        [-la_c, la_b - la_c],
        [lb_a - lb_c, -lb_c],
        [lc_a, lc_b],
    ]
}

fn equations(t: Angles, target: [f64; 2]) -> [f64; 2] {
    let l = log_bisectors(t);
    [l[0] - l[2] - target[0], l[1] - l[2] - target[1]]
}

fn norm(f: [f64; 2]) -> f64 {
    f[0].abs().max(f[1].abs())
}

enum Outcome {
    Converged(Angles),
    Stalled,
}

/// Damped Newton from `start`; consumes iterations from `budget`.
fn newton(start: Angles, target: [f64; 2], budget: &mut usize) -> Outcome {
    let mut t = start;
    let mut f = equations(t, target);
    while *budget > 0 {
        if norm(f) < 1e-14 {
            return Outcome::Converged(t);
        }
        *budget -= 1;
        let rows = jacobian_rows(t);
        let j = [
            [rows[0][0] - rows[2][0], rows[0][1] - rows[2][1]],
            [rows[1][0] - rows[2][0], rows[1][1] - rows[2][1]],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if !det.is_finite() || det == 0.0 {
            return Outcome::Stalled;
        }
        let da = -(f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let db = -(j[0][0] * f[1] - j[1][0] * f[0]) / det;
        let mut lambda = 1.0;
        let current = norm(f);
        loop {
            let trial = Angles {
                a: t.a + lambda * da,
                b: t.b + lambda * db,
            };
            if trial.feasible() {
                let ft = equations(trial, target);
                if norm(ft) < (1.0 - 1e-4 * lambda) * current {
                    let moved = (trial.a - t.a).abs().max((trial.b - t.b).abs());
                    t = trial;
                    f = ft;
                    if moved <= 4.0 * f64::EPSILON {
                        return Outcome::Converged(t);
                    }
                    break;
                }
            }
            lambda *= 0.5;
            if lambda < 1e-12 {
                // No descent left: either converged to rounding or stuck.
                return if current < 1e-11 {
                    Outcome::Converged(t)
                } else {
                    Outcome::Stalled
                };
            }
        }
    }
    if norm(f) < 1e-11 {
        Outcome::Converged(t)
    } else {
        Outcome::Stalled
    }
}

/// Walks the target ratios from the equilateral triangle (`τ = 0`) to the
/// requested ones, re-solving at each step.
fn continuation(target: [f64; 2], budget: &mut usize) -> Option<Angles> {
    let mut t = Angles::EQUILATERAL;
    let mut lambda: f64 = 0.0;
    let mut step: f64 = 0.125;
    while lambda < 1.0 && *budget > 0 {
        let next = (lambda + step).min(1.0);
        let sub = [next * target[0], next * target[1]];
        match newton(t, sub, budget) {
            Outcome::Converged(found) => {
                t = found;
                lambda = next;
                step = (step * 2.0).min(0.5);
            }
            Outcome::Stalled => {
                step *= 0.5;
                if step < 1e-9 {
                    return None;
                }
            }
        }
    }
    (lambda >= 1.0).then_some(t)
}

fn sides_from_angles(t: Angles, bisector_c: f64) -> Option<TriangleSides> {
    let log_c = log_bisectors(t)[2];
    let radius = bisector_c / log_c.exp();
    let [sa, sb, sc] = t.sines();
    TriangleSides::new(2.0 * radius * sa, 2.0 * radius * sb, 2.0 * radius * sc).ok()
}

/// Triangle with bisectors `w_a = u`, `w_b = v`, `w_c = w`.
///
/// ```
/// use broken_stick::elements::{angle_bisectors, TriangleSides};
/// use broken_stick::solvers::{solve_from_angle_bisectors, BisectorOptions};
///
/// let source = TriangleSides::new(3.0, 4.0, 5.0).unwrap();
/// let [u, v, w] = angle_bisectors(&source);
/// let rec = solve_from_angle_bisectors(u, v, w, BisectorOptions::default()).unwrap();
/// assert!((rec.sides.c() - 5.0).abs() < 1e-9);
/// ```
pub fn solve_from_angle_bisectors(u: f64, v: f64, w: f64, options: BisectorOptions) -> Result<Reconstruction> {
    if ![u, v, w].iter().all(|x| x.is_finite() && *x > 0.0) {
        return Err(Error::NoTriangle("bisector lengths must be positive"));
    }
    // The smallest bisector issues from the largest angle; make that the
    // derived angle `C = π − A − B`, so the two unknowns are the small angles
    // of a needle triangle and keep full relative precision.
    let input = [u, v, w];
    let last = (0..3).min_by(|i, j| input[*i].total_cmp(&input[*j])).unwrap_or(2);
    let order = [(last + 1) % 3, (last + 2) % 3, last];
    let [pu, pv, pw] = order.map(|i| input[i]);
    let target = [(pu / pw).ln(), (pv / pw).ln()];
    let mut budget = options.max_iterations;
    let solved = match newton(Angles::EQUILATERAL, target, &mut budget) {
        Outcome::Converged(t) => Some(t),
        Outcome::Stalled => continuation(target, &mut budget),
    };
    let used = options.max_iterations - budget;
    let Some(angles) = solved else {
        return Err(Error::NoConvergence {
            iterations: used,
            residual: f64::NAN,
        });
    };
    let Some(permuted) = sides_from_angles(angles, pw) else {
        return Err(Error::NoConvergence {
            iterations: used,
            residual: f64::INFINITY,
        });
    };
    let mut side = [0.0; 3];
    for (k, i) in order.into_iter().enumerate() {
        side[i] = permuted.as_array()[k];
    }
    let Ok(sides) = TriangleSides::new(side[0], side[1], side[2]) else {
        return Err(Error::NoConvergence {
            iterations: used,
            residual: f64::INFINITY,
        });
    };
    // Measured in angle space: for a needle triangle the side-based bisector
    // formula needs `b + c − a`, which the stored sides only carry to
    // `ε·a/(b + c − a)` relative precision, far above the solver's accuracy.
    let scale = pw / log_bisectors(angles)[2].exp();
    let recomputed = log_bisectors(angles).map(|l| scale * l.exp());
    let residual = relative_residual(recomputed, [pu, pv, pw]);
    if residual < options.tolerance {
        Ok(Reconstruction {
            sides,
            auxiliary: None,
            residual,
        })
    } else {
        Err(Error::NoConvergence {
            iterations: used,
            residual,
        })
    }
}
