//! Integer solutions of `R³ − (u² + v² + w²)R − 2uvw = 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntegerSolution {
    pub u: u64,
    pub v: u64,
    pub w: u64,
    pub r: u64,
}

impl IntegerSolution {
    /// Evaluates the acute circumradius cubic exactly.
    pub fn satisfies_cubic(&self) -> bool {
        let (u, v, w, r) = (self.u as i128, self.v as i128, self.w as i128, self.r as i128);
        r * r * r - (u * u + v * v + w * w) * r - 2 * u * v * w == 0
    }
}

fn exact_sqrt(n: u128) -> Option<u128> {
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    (x * x == n).then_some(x)
}

/// All `(u, v, w, R)` with `1 ≤ u ≤ v ≤ w < R ≤ limit` solving the acute
/// circumradius cubic, sorted by `(R, u, v, w)`.
///
/// For fixed `R, u, v` the cubic is a quadratic in `w`,
/// `R w² + 2uv w − R(R² − u² − v²) = 0`, whose positive root is integral
/// only if `u²v² + R²(R² − u² − v²)` is a perfect square; the search is
/// therefore cubic in `limit`.
pub fn find_integer_circum_solutions(limit: u64) -> Vec<IntegerSolution> {
    let mut out: Vec<IntegerSolution> = (2..=limit)
        .into_par_iter()
        .flat_map_iter(|r| {
            let mut found = Vec::new();
            let rr = r as u128 * r as u128;
            for u in 1..r {
                let uu = u as u128 * u as u128;
                for v in u..r {
                    let vv = v as u128 * v as u128;
                    if uu + vv >= rr {
                        break;
                    }
                    let disc = uu * vv + rr * (rr - uu - vv);
                    let Some(root) = exact_sqrt(disc) else { continue };
                    let uv = u as u128 * v as u128;
                    if root <= uv || (root - uv) % r as u128 != 0 {
                        continue;
                    }
                    let w = ((root - uv) / r as u128) as u64;
                    let s = IntegerSolution { u, v, w, r };
                    if w >= v && w < r && s.satisfies_cubic() {
                        found.push(s);
                    }
                }
            }
            found
        })
        .collect();
    out.sort_by_key(|s| (s.r, s.u, s.v, s.w));
    out
}

/// Solutions of the form `R = uv` with `(u² − 1)(v² − 1) = (w + 1)²`, within
/// the same ordering and bound as [`find_integer_circum_solutions`].
pub fn pell_family(limit: u64) -> Vec<IntegerSolution> {
    let mut out = Vec::new();
    for u in 2..=limit {
        for v in u..=limit / u {
            let p = (u as u128 * u as u128 - 1) * (v as u128 * v as u128 - 1);
            let Some(root) = exact_sqrt(p) else { continue };
            if root == 0 {
                continue;
            }
            let w = (root - 1) as u64;
            let s = IntegerSolution { u, v, w, r: u * v };
            if w >= v && w < s.r {
                out.push(s);
            }
        }
    }
    out
}
