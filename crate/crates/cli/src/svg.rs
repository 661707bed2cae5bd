//! SVG 1.1 rendering of a curve and optional disks, one user unit per length unit.

use std::f64::consts::PI;
use std::fmt::Write;

use bccurve::{Disk, JordanCurve, Piece, Point};

const STROKE: f64 = 0.01;

fn arc_command(out: &mut String, a: &bccurve::Arc, to: Point) {
    let sweep = a.sweep();
    let large = u8::from(sweep > PI);
    let dir = u8::from(a.ccw);
    let _ = write!(out, " A {} {} 0 {large} {dir} {} {}", a.radius, a.radius, to.x, to.y);
}

/// Path data in curve coordinates; the caller flips the y axis.
pub fn path_data(curve: &JordanCurve) -> String {
    let mut d = String::new();
    let Some(first) = curve.pieces().first() else {
        return d;
    };
    let start = first.start();
    let _ = write!(d, "M {} {}", start.x, start.y);
    for piece in curve.pieces() {
        match piece {
            Piece::Segment(s) => {
                let _ = write!(d, " L {} {}", s.to.x, s.to.y);
            }
            Piece::Arc(a) => {
                // An SVG arc cannot close on itself, so long arcs go in two halves.
                if a.sweep() > PI {
                    let half = piece.sub(0.0, 0.5);
                    let Piece::Arc(h) = half else { unreachable!() };
                    arc_command(&mut d, &h, h.point_at(1.0));
                    let Piece::Arc(rest) = piece.sub(0.5, 1.0) else { unreachable!() };
                    arc_command(&mut d, &rest, rest.point_at(1.0));
                } else {
                    arc_command(&mut d, a, a.point_at(1.0));
                }
            }
        }
    }
    d.push_str(" Z");
    d
}

pub fn render(curve: &JordanCurve, disks: &[Disk]) -> String {
    let (mut lo, mut hi) = curve.bbox();
    for d in disks {
        lo = Point::new(lo.x.min(d.center.x - d.radius), lo.y.min(d.center.y - d.radius));
        hi = Point::new(hi.x.max(d.center.x + d.radius), hi.y.max(d.center.y + d.radius));
    }
    let margin = 0.05 * (hi.x - lo.x).max(hi.y - lo.y) + 2.0 * STROKE;
    let (x0, y0) = (lo.x - margin, lo.y - margin);
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"{x0} {} {w} {h}\">",
        -(y0 + h)
    );
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(
        s,
        "<path d=\"{}\" fill=\"#dddddd\" fill-rule=\"evenodd\" stroke=\"black\" stroke-width=\"{STROKE}\"/>",
        path_data(curve)
    );
    for d in disks {
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{STROKE}\" stroke-dasharray=\"{} {}\"/>",
            d.center.x,
            d.center.y,
            d.radius,
            4.0 * STROKE,
            3.0 * STROKE
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use bccurve::shapes;

    #[test]
    fn full_circle_is_split_and_closed() {
        let c = shapes::circle(Point::new(0.0, 0.0), 1.0);
        let d = path_data(&c);
        assert_eq!(d.matches(" A ").count(), 2);
        assert!(d.starts_with("M ") && d.ends_with(" Z"));
    }

    #[test]
    fn document_has_disks_and_even_odd_fill() {
        let c = shapes::stadium();
        let svg = render(&c, &[Disk::new(Point::new(0.0, 0.0), 1.0).unwrap()]);
        assert!(svg.contains("version=\"1.1\""));
        assert!(svg.contains("fill-rule=\"evenodd\""));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("stroke-width=\"0.01\""));
    }
}
