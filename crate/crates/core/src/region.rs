//! Rasterised event regions over the model triangle.

use crate::model::{ModelPoint, SQRT_3};
use crate::predicates::EventDescriptor;

/// Pixel coverage of an event region on a square grid over the bounding box
/// `[-1, 1] × [0, √3]` of the model triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub event: EventDescriptor,
    pub columns: usize,
    pub rows: usize,
    /// Side length of a pixel in model units.
    pub pixel: f64,
    /// Covered fraction of each pixel, row-major, row 0 at `y = 0`.
    pub coverage: Vec<f64>,
    /// Sample points whose predicate could not be decided; counted as
    /// outside the region.
    pub failures: u64,
}

impl Raster {
    pub fn at(&self, row: usize, column: usize) -> f64 {
        self.coverage[row * self.columns + column]
    }

    /// Lower-left corner of pixel `(row, column)`.
    pub fn origin(&self, row: usize, column: usize) -> (f64, f64) {
        (-1.0 + column as f64 * self.pixel, row as f64 * self.pixel)
    }

    /// Region area divided by the model area √3.
    pub fn area_ratio(&self) -> f64 {
        self.coverage.iter().sum::<f64>() * self.pixel * self.pixel / SQRT_3
    }
}

fn member(event: EventDescriptor, x: f64, y: f64, failures: &mut u64) -> bool {
    if !ModelPoint::contains(x, y) {
        return false;
    }
    let Ok(p) = ModelPoint::new(x, y) else { return false };
    match event.holds(&p.triple()) {
        Ok(v) => v,
        Err(_) => {
            *failures += 1;
            false
        }
    }
}

/// Evaluates `event` at every pixel centre of a grid `resolution` pixels
/// wide. Pixels on an edge of the region or of the model triangle are
/// resampled on a 2×2 sub-grid.
///
/// ```
/// use broken_stick::predicates::Interpretation;
/// use broken_stick::region::rasterize;
///
/// let r = rasterize(Interpretation::Sides.exists(), 128);
/// assert!((r.area_ratio() - 0.25).abs() < 0.01);
/// ```
pub fn rasterize(event: EventDescriptor, resolution: usize) -> Raster {
    let columns = resolution.max(1);
    let pixel = 2.0 / columns as f64;
    let rows = (SQRT_3 / pixel).ceil() as usize;
    let mut failures = 0;
    let mut centre = vec![false; rows * columns];
    for r in 0..rows {
        for c in 0..columns {
            let x = -1.0 + (c as f64 + 0.5) * pixel;
            let y = (r as f64 + 0.5) * pixel;
            centre[r * columns + c] = member(event, x, y, &mut failures);
        }
    }
    let mut coverage = vec![0.0; rows * columns];
    for r in 0..rows {
        for c in 0..columns {
            let here = centre[r * columns + c];
            let (x0, y0) = (-1.0 + c as f64 * pixel, r as f64 * pixel);
            let corners_inside = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
                .iter()
                .filter(|(dx, dy)| ModelPoint::contains(x0 + dx * pixel, y0 + dy * pixel))
                .count();
            let neighbour_differs = [(-1, 0), (1, 0), (0, -1), (0, 1)].iter().any(|(dr, dc)| {
                let (nr, nc) = (r as isize + dr, c as isize + dc);
                nr >= 0
                    && nc >= 0
                    && (nr as usize) < rows
                    && (nc as usize) < columns
                    && centre[nr as usize * columns + nc as usize] != here
            });
            let on_edge = neighbour_differs || (corners_inside != 0 && corners_inside != 4) || (here && corners_inside < 4);
            coverage[r * columns + c] = if on_edge {
                let mut hit = 0;
                for (dx, dy) in [(0.25, 0.25), (0.75, 0.25), (0.25, 0.75), (0.75, 0.75)] {
                    if member(event, x0 + dx * pixel, y0 + dy * pixel, &mut failures) {
                        hit += 1;
                    }
                }
                hit as f64 / 4.0
            } else if here {
                1.0
            } else {
                0.0
            };
        }
    }
    Raster {
        event,
        columns,
        rows,
        pixel,
        coverage,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::Interpretation;

    #[test]
    fn certain_event_covers_the_model() {
        let r = rasterize(Interpretation::Exradii.exists(), 256);
        assert!((r.area_ratio() - 1.0).abs() < 0.01);
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn tangent_region_area() {
        let r = rasterize(Interpretation::TangentCircles.exists(), 256);
        assert!((r.area_ratio() - 5.0 / 27.0).abs() < 0.01);
    }
}
