//! Integer circumcentre distances: search and the published examples.

use std::io::Write;

use broken_stick::solvers::{find_integer_circum_solutions, IntegerSolution};

/// The twelve `(u, v, w, R)` examples of the original table.
pub const TABULATED: [(u64, u64, u64, u64); 12] = [
    (1, 13, 22, 26),
    (2, 7, 11, 14),
    (2, 9, 12, 16),
    (3, 14, 25, 30),
    (4, 14, 22, 28),
    (4, 18, 24, 32),
    (6, 11, 14, 21),
    (7, 19, 25, 35),
    (8, 17, 22, 32),
    (11, 17, 21, 33),
    (11, 19, 26, 38),
    (12, 22, 28, 42),
];

/// Tabulated quadruples absent from `found` (only those with `R ≤ limit`
/// can be expected).
pub fn missing(found: &[IntegerSolution], limit: u64) -> Vec<(u64, u64, u64, u64)> {
    TABULATED
        .iter()
        .copied()
        .filter(|(_, _, _, r)| *r <= limit)
        .filter(|(u, v, w, r)| !found.contains(&IntegerSolution { u: *u, v: *v, w: *w, r: *r }))
        .collect()
}

/// Prints the search result; returns whether verification (if requested)
/// passed.
pub fn integer_solutions(limit: u64, verify: bool, out: &mut dyn Write) -> std::io::Result<bool> {
    let found = find_integer_circum_solutions(limit);
    writeln!(out, "{:>6} {:>6} {:>6} {:>6}", "u", "v", "w", "R")?;
    for s in &found {
        writeln!(out, "{:>6} {:>6} {:>6} {:>6}", s.u, s.v, s.w, s.r)?;
    }
    writeln!(out, "{} solutions with R <= {limit}", found.len())?;
    if !verify {
        return Ok(true);
    }
    let lost = missing(&found, limit);
    let bad: Vec<&IntegerSolution> = found.iter().filter(|s| !s.satisfies_cubic()).collect();
    let complete = limit >= 42;
    if !complete {
        writeln!(out, "verify: limit {limit} < 42 covers only part of the table")?;
    }
    for q in &lost {
        writeln!(out, "verify: missing tabulated solution {q:?}")?;
    }
    for s in &bad {
        writeln!(out, "verify: {s:?} does not satisfy the cubic")?;
    }
    let ok = complete && lost.is_empty() && bad.is_empty();
    writeln!(out, "verify: {}", if ok { "pass" } else { "FAIL" })?;
    Ok(ok)
}
