//! Safeguarded Newton iteration for real cubics on a sign-changing bracket.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 200;

/// `c₃x³ + c₂x² + c₁x + c₀`, stored as `[c₃, c₂, c₁, c₀]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cubic {
    pub coefficients: [f64; 4],
}

impl Cubic {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        Self {
            coefficients: [c3, c2, c1, c0],
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let [c3, c2, c1, c0] = self.coefficients;
        ((c3 * x + c2) * x + c1) * x + c0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let [c3, c2, c1, _] = self.coefficients;
        (3.0 * c3 * x + 2.0 * c2) * x + c1
    }

    /// Largest monomial magnitude at `x`; the yardstick for "zero".
    pub fn magnitude(&self, x: f64) -> f64 {
        let [c3, c2, c1, c0] = self.coefficients;
        (c3 * x * x * x)
            .abs()
            .max((c2 * x * x).abs())
            .max((c1 * x).abs())
            .max(c0.abs())
    }

    /// The root in `[lo, hi]`, which must carry a sign change.
    pub fn root_in(&self, lo: f64, hi: f64) -> Result<CubicRoot> {
        bracketed_root(self, lo, hi)
    }
}

/// A root together with the bracket it was found in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicRoot {
    pub coefficients: [f64; 4],
    pub root: f64,
    pub bracket: (f64, f64),
}

impl CubicRoot {
    /// `|p(root)|` relative to the largest monomial at the root.
    pub fn relative_residual(&self) -> f64 {
        let p = Cubic {
            coefficients: self.coefficients,
        };
        let m = p.magnitude(self.root);
        if m == 0.0 {
            0.0
        } else {
            p.eval(self.root).abs() / m
        }
    }
}

/// Newton steps that fall outside the current bracket, or fail to halve
/// `|p|`, are replaced by bisection.
pub fn bracketed_root(p: &Cubic, lo: f64, hi: f64) -> Result<CubicRoot> {
    let fail = || Error::RootBracket {
        coefficients: p.coefficients,
    };
    if !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(fail());
    }
    let done = |root: f64| CubicRoot {
        coefficients: p.coefficients,
        root,
        bracket: (lo, hi),
    };
    let (flo, fhi) = (p.eval(lo), p.eval(hi));
    if flo == 0.0 {
        return Ok(done(lo));
    }
    if fhi == 0.0 {
        return Ok(done(hi));
    }
    if flo.signum() == fhi.signum() {
        return Err(fail());
    }
    // keep `a` on the negative side
    let (mut a, mut b) = if flo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    let mut fx = p.eval(x);
    let mut last_step = (hi - lo).abs();
    for _ in 0..MAX_ITERATIONS {
        if fx == 0.0 || fx.abs() <= 1e-16 * p.magnitude(x) {
            return Ok(done(x));
        }
        if fx < 0.0 {
            a = x;
        } else {
            b = x;
        }
        let width = (b - a).abs();
        if width <= 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return Ok(done(x));
        }
        let d = p.derivative(x);
        let newton = if d != 0.0 { x - fx / d } else { f64::NAN };
        let (left, right) = (a.min(b), a.max(b));
        let step_ok = newton > left && newton < right && (newton - x).abs() < 0.5 * last_step;
        let next = if step_ok { newton } else { 0.5 * (a + b) };
        last_step = (next - x).abs();
        if next == x {
            return Ok(done(x));
        }
        x = next;
        fx = p.eval(x);
    }
    // The bracket has shrunk geometrically; the midpoint is as good as it gets.
    Ok(done(x))
}
