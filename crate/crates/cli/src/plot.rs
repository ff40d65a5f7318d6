//! SVG rendering of a rasterised event region.

use std::fmt::Write as _;
use std::path::Path;

use broken_stick::model::SQRT_3;
use broken_stick::region::{rasterize, Raster};
use broken_stick::predicates::EventDescriptor;

const FILL: &str = "#2a6fb0";

/// One `<rect>` per horizontal run of pixels with equal non-zero coverage;
/// partial coverage becomes `fill-opacity`. The model triangle is drawn on
/// top as an outline. SVG `y` grows downwards, so rows are flipped.
pub fn svg(raster: &Raster) -> String {
    let (w, h) = (raster.columns, raster.rows);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", raster.event);
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(s, r#"<g fill="{FILL}" stroke="none">"#);
    for row in 0..h {
        let y = h - 1 - row;
        let mut c = 0;
        while c < w {
            let v = raster.at(row, c);
            let start = c;
            while c < w && raster.at(row, c) == v {
                c += 1;
            }
            if v > 0.0 {
                let len = c - start;
                if v < 1.0 {
                    let _ = writeln!(s, r#"<rect x="{start}" y="{y}" width="{len}" height="1" fill-opacity="{v}"/>"#);
                } else {
                    let _ = writeln!(s, r#"<rect x="{start}" y="{y}" width="{len}" height="1"/>"#);
                }
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let px = |x: f64, y: f64| ((x + 1.0) / raster.pixel, h as f64 - y / raster.pixel);
    let corners = [(-1.0, 0.0), (1.0, 0.0), (0.0, SQRT_3)].map(|(x, y)| px(x, y));
    let points: Vec<String> = corners.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        points.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

/// Rasterises `event`, writes the SVG to `path` and returns the region
/// area divided by the model area.
pub fn plot_region(event: EventDescriptor, resolution: usize, path: &Path) -> std::io::Result<f64> {
    let raster = rasterize(event, resolution);
    std::fs::write(path, svg(&raster))?;
    Ok(raster.area_ratio())
}

#[cfg(test)]
mod tests {
    use super::*;
    use broken_stick::predicates::Interpretation;

    #[test]
    fn svg_encodes_the_raster_area() {
        let r = rasterize(Interpretation::Sides.exists(), 64);
        let doc = svg(&r);
        assert!(doc.starts_with("<svg") && doc.trim_end().ends_with("</svg>"));
        // sum of width × opacity over the rects equals the covered pixel count
        let mut total = 0.0;
        for line in doc.lines().filter(|l| l.starts_with("<rect x=")) {
            let attr = |name: &str| {
                line.split(&format!(" {name}=\"")).nth(1).map(|rest| rest.split('"').next().unwrap().parse::<f64>().unwrap())
            };
            total += attr("width").unwrap() * attr("fill-opacity").unwrap_or(1.0);
        }
        let covered: f64 = r.coverage.iter().sum();
        assert!((total - covered).abs() < 1e-9);
    }
}
