//! SVG drawings of dissections.
//!
//! Vertices sit on the unit circle with vertex 0 at the top and labels
//! increasing clockwise. Coordinates are printed with four decimals so the
//! output is byte-identical for identical input.

use std::fmt::Write;

use crate::polygon::{CentralComponent, Dissection};

const CANVAS: u32 = 480;
const RADIUS: f64 = 1.0;
const MARGIN: f64 = 0.22;

fn vertex_position(v: usize, n: usize) -> (f64, f64) {
    let angle = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * v as f64 / n as f64;
    // SVG y grows downward
    (RADIUS * angle.cos(), -RADIUS * angle.sin())
}

fn coord(x: f64) -> String {
    let s = format!("{x:.4}");
    // avoid "-0.0000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".to_string()
    } else {
        s
    }
}

fn line(out: &mut String, class: &str, a: (f64, f64), b: (f64, f64)) {
    writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        coord(a.0),
        coord(a.1),
        coord(b.0),
        coord(b.1)
    )
    .unwrap();
}

/// Renders `d` as an SVG 1.1 document. With `highlight_central`, the central
/// component is drawn as the single element of class `central`: a filled
/// polygon for a cell, a heavy segment for a diameter.
pub fn render_svg(d: &Dissection, highlight_central: bool) -> String {
    let n = d.n();
    let pos: Vec<(f64, f64)> = (0..n).map(|v| vertex_position(v, n)).collect();
    let central = highlight_central.then(|| d.central_component());
    let extent = RADIUS + MARGIN;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="{} {} {} {}">"#,
        coord(-extent),
        coord(-extent),
        coord(2.0 * extent),
        coord(2.0 * extent)
    )
    .unwrap();
    writeln!(out, "  <title>{n}-gon, {}-angulation, {} diagonals</title>", d.k(), d.diagonals().len()).unwrap();
    out.push_str(
        "  <style>\
.side{stroke:#222;stroke-width:0.012}\
.diagonal{stroke:#555;stroke-width:0.008}\
.central{stroke:#b3261e;stroke-width:0.02;fill:#f4b400;fill-opacity:0.45}\
.vertex{fill:#222}\
.label{font-family:sans-serif;font-size:0.09px;text-anchor:middle;dominant-baseline:middle;fill:#222}\
</style>\n",
    );

    if let Some(CentralComponent::Cell(face)) = &central {
        let points: Vec<String> = face
            .vertices
            .iter()
            .map(|&v| format!("{},{}", coord(pos[v].0), coord(pos[v].1)))
            .collect();
        writeln!(out, r#"  <polygon class="central" points="{}"/>"#, points.join(" ")).unwrap();
    }

    for v in 0..n {
        line(&mut out, "side", pos[v], pos[(v + 1) % n]);
    }
    for diag in d.diagonals() {
        let class = match &central {
            Some(CentralComponent::Diameter(c)) if c == diag => "central",
            _ => "diagonal",
        };
        line(&mut out, class, pos[diag.x], pos[diag.y]);
    }

    for (v, &(x, y)) in pos.iter().enumerate() {
        writeln!(
            out,
            r#"  <circle class="vertex" cx="{}" cy="{}" r="0.025"/>"#,
            coord(x),
            coord(y)
        )
        .unwrap();
        let scale = (RADIUS + 0.12) / RADIUS;
        writeln!(
            out,
            r#"  <text class="label" x="{}" y="{}">{v}</text>"#,
            coord(x * scale),
            coord(y * scale)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
