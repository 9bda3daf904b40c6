//! CSV and SVG emission for net images and polar-disk boundaries. SVG
//! output is a fixed 1000×1000 viewport with the data bounding box
//! auto-scaled into it.

use std::fmt::Write;

use crate::expr::PolarPoint;
use crate::geometry::NetImage;

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 40.0;

/// (id, stroke color, points) of one polyline.
type SvgPolyline = (String, &'static str, Vec<(f64, f64)>);

/// One row per sample: curve-id, parameter, Re w, Im w.
pub fn net_to_csv(net: &NetImage) -> String {
    let mut out = String::from("curve,t,re,im\n");
    for curve in &net.curves {
        for s in &curve.samples {
            let _ = writeln!(out, "{},{},{},{}", curve.id, s.t, s.w.re, s.w.im);
        }
    }
    out
}

/// Image-plane polylines: r-lines in blue, θ-lines in red.
pub fn net_to_svg(net: &NetImage) -> String {
    let polylines: Vec<SvgPolyline> = net
        .curves
        .iter()
        .map(|curve| {
            let color = if curve.is_r_line { "#1f77b4" } else { "#d62728" };
            let points = curve.samples.iter().map(|s| (s.w.re, s.w.im)).collect();
            (curve.id.clone(), color, points)
        })
        .collect();
    svg_document(&polylines)
}

/// One row per boundary sample: index, r, theta.
pub fn disk_boundary_to_csv(points: &[PolarPoint]) -> String {
    let mut out = String::from("index,r,theta\n");
    for (i, p) in points.iter().enumerate() {
        let _ = writeln!(out, "{},{},{}", i, p.r, p.theta);
    }
    out
}

/// The boundary drawn in the (r, θ) plane, closed.
pub fn disk_boundary_to_svg(points: &[PolarPoint]) -> String {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p.r, p.theta)).collect();
    if let Some(&first) = pts.first() {
        pts.push(first);
    }
    svg_document(&[("boundary".to_string(), "#1f77b4", pts)])
}

fn svg_document(polylines: &[SvgPolyline]) -> String {
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for (_, _, points) in polylines {
        for &(x, y) in points {
            if x.is_finite() && y.is_finite() {
                x_min = x_min.min(x);
                x_max = x_max.max(x);
                y_min = y_min.min(y);
                y_max = y_max.max(y);
            }
        }
    }
    if !(x_min.is_finite() && y_min.is_finite()) {
        x_min = -1.0;
        x_max = 1.0;
        y_min = -1.0;
        y_max = 1.0;
    }
    // Uniform scale, so shapes keep their aspect ratio.
    let span = (x_max - x_min).max(y_max - y_min).max(1e-30);
    let scale = (VIEW - 2.0 * MARGIN) / span;
    let x_mid = 0.5 * (x_min + x_max);
    let y_mid = 0.5 * (y_min + y_max);
    let tx = |x: f64| VIEW / 2.0 + (x - x_mid) * scale;
    // SVG y grows downward; flip so the plot reads like a plane.
    let ty = |y: f64| VIEW / 2.0 - (y - y_mid) * scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW}\" height=\"{VIEW}\" viewBox=\"0 0 {VIEW} {VIEW}\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{VIEW}\" height=\"{VIEW}\" fill=\"white\" stroke=\"#999\"/>"
    );
    // Coordinate axes where they fall inside the window.
    if x_min <= 0.0 && 0.0 <= x_max {
        let _ = writeln!(
            out,
            "  <line x1=\"{0:.2}\" y1=\"0\" x2=\"{0:.2}\" y2=\"{VIEW}\" stroke=\"#ccc\"/>",
            tx(0.0)
        );
    }
    if y_min <= 0.0 && 0.0 <= y_max {
        let _ = writeln!(
            out,
            "  <line x1=\"0\" y1=\"{0:.2}\" x2=\"{VIEW}\" y2=\"{0:.2}\" stroke=\"#ccc\"/>",
            ty(0.0)
        );
    }
    for (id, color, points) in polylines {
        if points.is_empty() {
            continue;
        }
        let mut path = String::new();
        for &(x, y) in points {
            let _ = write!(path, "{:.3},{:.3} ", tx(x), ty(y));
        }
        let _ = writeln!(
            out,
            "  <polyline id=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>",
            xml_escape(id),
            path.trim_end(),
            color
        );
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
