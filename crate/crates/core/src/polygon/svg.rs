//! Minimal SVG rendering of polygon dissections.

use std::f64::consts::PI;
use std::fmt::Write;

use super::Diagonal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Solid,
    Dashed,
    Gray,
}

const VIEW: f64 = 400.0;
const RADIUS: f64 = 170.0;

fn corner(size: usize, v: usize) -> (f64, f64) {
    // P_1 sits at the top; labels increase clockwise.
    let t = -PI / 2.0 - 2.0 * PI * v as f64 / size as f64 + PI;
    let c = VIEW / 2.0;
    (c + RADIUS * t.cos(), c - RADIUS * t.sin())
}

/// Render a `size`-gon with labelled corners and the given chords.
pub fn render(size: usize, chords: &[(Diagonal, Stroke)]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}" width="{VIEW}" height="{VIEW}">"#
    );
    let points: Vec<String> = (0..size)
        .map(|v| {
            let (x, y) = corner(size, v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        points.join(" ")
    );
    for (d, stroke) in chords {
        let (x1, y1) = corner(size, d.i);
        let (x2, y2) = corner(size, d.j);
        let style = match stroke {
            Stroke::Solid => r#"stroke="black" stroke-width="2""#,
            Stroke::Dashed => r#"stroke="black" stroke-width="2" stroke-dasharray="8 5""#,
            Stroke::Gray => r##"stroke="#999" stroke-width="5""##,
        };
        let _ = writeln!(
            s,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {style}/>"#
        );
    }
    for v in 0..size {
        let (x, y) = corner(size, v);
        let c = VIEW / 2.0;
        let (lx, ly) = (c + (x - c) * 1.1, c + (y - c) * 1.1);
        let _ = writeln!(
            s,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-size="11" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            v + 1
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_lines_and_labels() {
        let out = render(6, &[(Diagonal::new(0, 3, 6), Stroke::Dashed)]);
        assert!(out.starts_with("<svg"));
        assert_eq!(out.matches("<line").count(), 1);
        assert_eq!(out.matches("<text").count(), 6);
        assert!(out.contains("stroke-dasharray"));
    }
}
