//! Minimal SVG rendering: the input curve dashed, sample markers as dots,
//! and the extracted implicit contour solid. One `<path>` per contour
//! component plus one for the input curve.

use implicitize_core::Point64;
use std::fmt::Write;

pub struct Scene {
    /// World-space bounding box (already padded by the caller).
    pub bbox: (Point64, Point64),
    /// Dense polyline tracing the input curve.
    pub input_curve: Vec<Point64>,
    /// Sample markers (discrete fits only).
    pub samples: Vec<Point64>,
    /// Contour polylines, one per component.
    pub contours: Vec<Vec<Point64>>,
}

const CANVAS: f64 = 720.0;

impl Scene {
    pub fn to_svg(&self) -> String {
        let (lo, hi) = self.bbox;
        let w = hi.x - lo.x;
        let h = hi.y - lo.y;
        let scale = CANVAS / w.max(h);
        let width = w * scale;
        let height = h * scale;
        // world -> svg, flipping y so the world's up is the screen's up
        let map = |p: Point64| -> (f64, f64) { ((p.x - lo.x) * scale, (hi.y - p.y) * scale) };
        let path_d = |points: &[Point64]| -> String {
            let mut d = String::new();
            for (i, &p) in points.iter().enumerate() {
                let (x, y) = map(p);
                let _ = write!(d, "{}{x:.3} {y:.3}", if i == 0 { "M" } else { " L" });
            }
            d
        };

        let mut svg = String::new();
        let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
        );
        for contour in &self.contours {
            let _ = writeln!(
                svg,
                r##"  <path d="{}" fill="none" stroke="#d62728" stroke-width="2"/>"##,
                path_d(contour)
            );
        }
        if !self.input_curve.is_empty() {
            let _ = writeln!(
                svg,
                r##"  <path d="{}" fill="none" stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="7 5"/>"##,
                path_d(&self.input_curve)
            );
        }
        for &p in &self.samples {
            let (x, y) = map(p);
            let _ = writeln!(
                svg,
                r##"  <circle cx="{x:.3}" cy="{y:.3}" r="4" fill="#1f77b4"/>"##
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// Pad a bounding box by `fraction` of its extent on every side.
pub fn pad_bbox(bbox: (Point64, Point64), fraction: f64) -> (Point64, Point64) {
    let (lo, hi) = bbox;
    let px = (hi.x - lo.x) * fraction;
    let py = (hi.y - lo.y) * fraction;
    (
        Point64::new(lo.x - px, lo.y - py),
        Point64::new(hi.x + px, hi.y + py),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emits_one_path_per_component_plus_input() {
        let scene = Scene {
            bbox: (Point64::new(-1.0, -1.0), Point64::new(1.0, 1.0)),
            input_curve: vec![Point64::new(0.0, 0.0), Point64::new(1.0, 1.0)],
            samples: vec![Point64::new(0.5, 0.5)],
            contours: vec![
                vec![Point64::new(0.0, 0.0), Point64::new(0.5, 0.0)],
                vec![Point64::new(0.0, 0.5), Point64::new(0.5, 0.5)],
            ],
        };
        let svg = scene.to_svg();
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
