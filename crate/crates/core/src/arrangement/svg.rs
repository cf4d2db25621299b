use std::fmt::Write;

use super::{Arrangement, CellSet, OUTER_FACE};
use crate::geom::Point;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Width of the image in pixels; the height follows the box aspect ratio.
    pub width: u32,
    /// Fractional decimal digits of emitted coordinates.
    pub precision: usize,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 800,
            precision: 3,
        }
    }
}

/// Draws the boxed arrangement with the selected faces filled and selected
/// edges and vertices highlighted. Output depends only on the inputs.
pub fn render_svg(arr: &Arrangement, selected: &CellSet, opts: &SvgOptions) -> String {
    let b = arr.bbox();
    let w = &b.xmax - &b.xmin;
    let h = &b.ymax - &b.ymin;
    let scale = &Rational::from_integer(opts.width as i64) / &w;
    let height = &h * &scale;
    let fmt = |r: &Rational| r.to_decimal(opts.precision);
    let map = |p: &Point| {
        let x = &(&p.x - &b.xmin) * &scale;
        let y = &(&b.ymax - &p.y) * &scale;
        format!("{},{}", fmt(&x), fmt(&y))
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        opts.width,
        fmt(&height),
        opts.width,
        fmt(&height)
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for &f in &selected.faces {
        if f == OUTER_FACE {
            continue;
        }
        let pts: Vec<String> = arr
            .boundary(f)
            .map(|e| map(&arr.vertices()[arr.half_edges()[e].target].point))
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#9ecae1" stroke="none"/>"##,
            pts.join(" ")
        );
    }
    for e in 0..arr.num_edges() {
        let (p, q) = arr.edge_endpoints(e);
        let chosen = selected.edges.binary_search(&e).is_ok();
        let (color, width) = match (arr.edge_line(e), chosen) {
            (None, _) => ("#bbbbbb", 1),
            (Some(_), true) => ("#08519c", 3),
            (Some(_), false) => ("#444444", 1),
        };
        let (p, q) = (map(p), map(q));
        let (x1, y1) = p.split_once(',').unwrap();
        let (x2, y2) = q.split_once(',').unwrap();
        let _ = writeln!(
            s,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{width}"/>"#
        );
    }
    for &v in &selected.vertices {
        let p = map(&arr.vertices()[v].point);
        let (x, y) = p.split_once(',').unwrap();
        let _ = writeln!(s, r##"<circle cx="{x}" cy="{y}" r="3" fill="#08519c"/>"##);
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Line;

    #[test]
    fn renders_deterministically() {
        let arr = Arrangement::build(&[Line::new(1, 0), Line::new(-1, 0)]);
        let sel = CellSet {
            faces: vec![1],
            ..Default::default()
        };
        let a = render_svg(&arr, &sel, &SvgOptions::default());
        assert_eq!(a, render_svg(&arr, &sel, &SvgOptions::default()));
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<polygon").count(), 1);
        assert_eq!(a.matches("<line").count(), arr.num_edges());
    }
}
