use std::fmt::Write;

use super::ProjectedRoot;
use crate::format::sig12;

/// Drawing parameters for [`emit_svg`].
#[derive(Clone, Debug)]
pub struct SvgStyle {
    /// Width and height of the square canvas, in user units.
    pub canvas: f64,
    /// Radius the outermost circle is scaled to.
    pub outer_radius: f64,
    pub point_radius: f64,
    pub background: String,
    /// Orbit colors; orbits past the end get evenly spaced HSL hues.
    pub palette: Vec<String>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            canvas: 1000.0,
            outer_radius: 450.0,
            point_radius: 5.0,
            background: "#ffffff".into(),
            palette: [
                "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
                "#17becf",
            ]
            .map(String::from)
            .to_vec(),
        }
    }
}

impl SvgStyle {
    fn color(&self, orbit: usize, orbit_count: usize) -> String {
        match self.palette.get(orbit) {
            Some(c) => c.clone(),
            None => format!("hsl({},70%,45%)", orbit * 360 / orbit_count.max(1)),
        }
    }
}

fn sorted_points(points: &[ProjectedRoot]) -> Vec<&ProjectedRoot> {
    let mut p: Vec<&ProjectedRoot> = points.iter().collect();
    p.sort_by(|a, b| a.orbit.cmp(&b.orbit).then(a.angle().total_cmp(&b.angle())));
    p
}

/// `x,y,orbit` rows sorted by orbit then polar angle.
pub fn emit_csv(points: &[ProjectedRoot]) -> String {
    let mut out = String::from("x,y,orbit\n");
    for p in sorted_points(points) {
        writeln!(out, "{},{},{}", sig12(p.x), sig12(p.y), p.orbit).unwrap();
    }
    out
}

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// One `<circle class="root">` per projected root, colored by orbit.
pub fn emit_svg(points: &[ProjectedRoot], style: &SvgStyle) -> String {
    let max_r = points.iter().map(ProjectedRoot::radius).fold(0.0, f64::max);
    let scale = if max_r > 0.0 {
        style.outer_radius / max_r
    } else {
        1.0
    };
    let center = style.canvas / 2.0;
    let orbit_count = points.iter().map(|p| p.orbit + 1).max().unwrap_or(0);
    let size = coord(style.canvas);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    )
    .unwrap();
    writeln!(
        out,
        "<rect width=\"{size}\" height=\"{size}\" fill=\"{}\"/>",
        style.background
    )
    .unwrap();
    for p in sorted_points(points) {
        writeln!(
            out,
            "<circle class=\"root\" data-orbit=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>",
            p.orbit,
            coord(center + p.x * scale),
            coord(center - p.y * scale),
            coord(style.point_radius),
            style.color(p.orbit, orbit_count),
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Root;

    fn pt(x: f64, y: f64, orbit: usize) -> ProjectedRoot {
        ProjectedRoot {
            x,
            y,
            orbit,
            root: Root::from_integers(&[0]),
        }
    }

    #[test]
    fn csv_rows_sorted_by_orbit_then_angle() {
        let pts = [
            pt(0.0, -1.0, 1),
            pt(-1.0, 0.0, 0),
            pt(1.0, 0.0, 1),
            pt(0.0, 1.0, 0),
        ];
        assert_eq!(emit_csv(&pts), "x,y,orbit\n0,1,0\n-1,0,0\n1,0,1\n0,-1,1\n");
    }

    #[test]
    fn svg_scales_outermost_point_to_outer_radius() {
        let pts = [pt(2.0, 0.0, 0), pt(0.0, 1.0, 1)];
        let svg = emit_svg(&pts, &SvgStyle::default());
        assert!(svg.contains("cx=\"950.000\" cy=\"500.000\""));
        assert!(svg.contains("cx=\"500.000\" cy=\"275.000\""));
        assert_eq!(svg.matches("<circle").count(), 2);
    }

    #[test]
    fn palette_overflow_uses_hues() {
        let style = SvgStyle {
            palette: vec!["#000".into()],
            ..SvgStyle::default()
        };
        assert_eq!(style.color(0, 4), "#000");
        assert_eq!(style.color(2, 4), "hsl(180,70%,45%)");
    }
}
