//! Ready-made curves used by tests, examples and the CLI.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::curve::JordanCurve;
use crate::error::Result;
use crate::kernel::{Arc, Piece, Point};

/// Positively oriented circle, stored as a single full-turn arc.
pub fn circle(center: Point, radius: f64) -> JordanCurve {
    JordanCurve::new(vec![Piece::Arc(Arc::new(center, radius, 0.0, TAU, true))])
        .expect("a circle with positive radius is a Jordan curve")
}

/// Two unit half-circles centered at `(±1, 0)` joined by the segments `y = ±1`.
pub fn stadium() -> JordanCurve {
    stadium_with(1.0, 1.0)
}

/// Stadium with straight part `[-half_len, half_len]` and cap radius `r`.
pub fn stadium_with(half_len: f64, r: f64) -> JordanCurve {
    let pieces = vec![
        Piece::segment(Point::new(-half_len, -r), Point::new(half_len, -r)),
        Piece::Arc(Arc::new(Point::new(half_len, 0.0), r, -FRAC_PI_2, FRAC_PI_2, true)),
        Piece::segment(Point::new(half_len, r), Point::new(-half_len, r)),
        Piece::Arc(Arc::new(Point::new(-half_len, 0.0), r, FRAC_PI_2, 1.5 * PI, true)),
    ];
    JordanCurve::new(pieces).expect("stadium is a Jordan curve")
}

/// Axis-aligned `w × h` rectangle centered at the origin with corner radius `r`.
pub fn rounded_rectangle(w: f64, h: f64, r: f64) -> Result<JordanCurve> {
    let (x, y) = (0.5 * w - r, 0.5 * h - r);
    let corner = |cx: f64, cy: f64, a0: f64| {
        Piece::Arc(Arc::new(Point::new(cx, cy), r, a0, a0 + FRAC_PI_2, true))
    };
    let pieces = vec![
        Piece::segment(Point::new(-x, -y - r), Point::new(x, -y - r)),
        corner(x, -y, -FRAC_PI_2),
        Piece::segment(Point::new(x + r, -y), Point::new(x + r, y)),
        corner(x, y, 0.0),
        Piece::segment(Point::new(x, y + r), Point::new(-x, y + r)),
        corner(-x, y, FRAC_PI_2),
        Piece::segment(Point::new(-x - r, y), Point::new(-x - r, -y)),
        corner(-x, -y, PI),
    ];
    JordanCurve::new(pieces)
}

/// Closed polygon through `vertices` in the given order.
pub fn polygon(vertices: &[Point]) -> Result<JordanCurve> {
    let n = vertices.len();
    let pieces = (0..n)
        .map(|i| Piece::segment(vertices[i], vertices[(i + 1) % n]))
        .collect();
    JordanCurve::new(pieces)
}

/// Star polygon with alternating radii, counterclockwise.
pub fn star(points: usize, outer: f64, inner: f64) -> Result<JordanCurve> {
    let verts: Vec<Point> = (0..2 * points)
        .map(|k| {
            let r = if k % 2 == 0 { outer } else { inner };
            Point::polar(PI * k as f64 / points as f64) * r
        })
        .collect();
    polygon(&verts)
}

/// L-shaped pocket: a 4 × 4 square with the upper-right 2 × 2 quadrant removed.
pub fn l_pocket() -> JordanCurve {
    polygon(&[
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
        Point::new(4.0, 2.0),
        Point::new(2.0, 2.0),
        Point::new(2.0, 4.0),
        Point::new(0.0, 4.0),
    ])
    .expect("L-pocket is a Jordan curve")
}

/// Boundary of the union of two unit disks centered at `(±d/2, 0)`, `0 < d < 2`.
///
/// The two reflex corners sit where the circles cross.
pub fn two_disks(d: f64) -> JordanCurve {
    let h = (1.0 - 0.25 * d * d).sqrt();
    let phi = h.atan2(0.5 * d);
    let right = Point::new(0.5 * d, 0.0);
    let left = Point::new(-0.5 * d, 0.0);
    let pieces = vec![
        Piece::Arc(Arc::new(right, 1.0, -(PI - phi), PI - phi, true)),
        Piece::Arc(Arc::new(left, 1.0, phi, TAU - phi, true)),
    ];
    JordanCurve::new(pieces).expect("union of two overlapping disks is a Jordan curve")
}
