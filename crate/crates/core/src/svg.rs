//! Standalone SVG rendering of a pitch-class set as an inscribed polygon of
//! the regular `c`-gon.
//!
//! Coordinates are deterministic: vertex `k` sits at angle `90 - 360*k/c`
//! degrees (index 0 at the top, indices clockwise), printed with three
//! decimals so identical inputs yield byte-identical documents.

use std::fmt::Write;

use crate::pcs::PitchClassSet;

/// Rendering options for [`polygon_svg`].
#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Width and height of the square canvas, in pixels.
    pub size: u32,
    /// Label every vertex of the `c`-gon with its index.
    pub labels: bool,
    /// Optional caption drawn under the figure.
    pub title: Option<String>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size: 360,
            labels: true,
            title: None,
        }
    }
}

fn vertex(k: u32, c: u32, center: f64, radius: f64) -> (f64, f64) {
    let theta = std::f64::consts::PI * (0.5 - 2.0 * f64::from(k) / f64::from(c));
    // SVG y grows downward.
    (center + radius * theta.cos(), center - radius * theta.sin())
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the set as a standalone SVG document: the `c` vertices on a
/// circle, the members highlighted and connected as an inscribed polygon.
pub fn polygon_svg(set: &PitchClassSet, options: &SvgOptions) -> String {
    let c = set.modulus();
    let size = f64::from(options.size);
    let center = size / 2.0;
    let radius = size * 0.38;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"##,
        options.size
    );
    let _ = writeln!(
        svg,
        r##"  <circle cx="{center:.3}" cy="{center:.3}" r="{radius:.3}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##
    );

    if set.cardinality() >= 2 {
        let points: Vec<String> = set
            .members()
            .iter()
            .map(|&k| {
                let (x, y) = vertex(k, c, center, radius);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r##"  <polygon points="{}" fill="#4477aa" fill-opacity="0.15" stroke="#4477aa" stroke-width="2"/>"##,
            points.join(" ")
        );
    }

    for k in 0..c {
        let (x, y) = vertex(k, c, center, radius);
        if set.contains(k) {
            let _ = writeln!(
                svg,
                r##"  <circle cx="{x:.3}" cy="{y:.3}" r="6" fill="#4477aa"/>"##
            );
        } else {
            let _ = writeln!(
                svg,
                r##"  <circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="#888888"/>"##
            );
        }
    }

    if options.labels {
        let label_radius = radius + size * 0.07;
        for k in 0..c {
            let (x, y) = vertex(k, c, center, label_radius);
            let _ = writeln!(
                svg,
                r##"  <text x="{x:.3}" y="{y:.3}" font-family="monospace" font-size="{:.1}" text-anchor="middle" dominant-baseline="middle" fill="#333333">{k}</text>"##,
                size * 0.035
            );
        }
    }

    if let Some(title) = &options.title {
        let _ = writeln!(
            svg,
            r##"  <text x="{center:.3}" y="{:.3}" font-family="monospace" font-size="{:.1}" text-anchor="middle" fill="#333333">{}</text>"##,
            size - size * 0.03,
            size * 0.04,
            xml_escape(title)
        );
    }

    svg.push_str("</svg>\n");
    svg
}
