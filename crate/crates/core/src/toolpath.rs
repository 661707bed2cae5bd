//! Offsetting and corner treatment for pocket toolpaths.
//!
//! `offset` moves every piece a signed distance along its left normal
//! (inward for positive `d`). Offset pieces either overlap at a junction,
//! where both are trimmed to the crossing of their supporting lines or
//! circles, or leave a gap, which is bridged by an arc of radius `|d|`
//! centered at the original vertex. `round_corners` replaces left-turning
//! corners by tangent arcs of the requested radius.

use std::f64::consts::PI;

use crate::curvature::{junction_turn, SMOOTH_TURN_TOL};
use crate::curve::{JordanCurve, Orientation};
use crate::error::{GeomError, Result};
use crate::kernel::{circle_circle_intersection, piece_piece_distance, Arc, Disk, Piece, Point, EPS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConcaveMode {
    /// Keep the arc the tool rolls along at concave corners.
    Roll,
    /// Replace that arc by its two tangent extensions.
    Miter,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToolpathSpec {
    pub tool_radius: f64,
    pub round_radius: f64,
    pub concave_mode: ConcaveMode,
}

/// Line or circle carrying a piece.
#[derive(Clone, Copy, Debug)]
enum Support {
    Line { p: Point, dir: Point },
    Circle { c: Point, r: f64 },
}

fn support(piece: &Piece) -> Support {
    match piece {
        Piece::Segment(s) => Support::Line {
            p: s.from,
            dir: s.direction(),
        },
        Piece::Arc(a) => Support::Circle {
            c: a.center,
            r: a.radius,
        },
    }
}

/// The support of `piece` moved by `d` along the piece's left normal.
fn shifted_support(piece: &Piece, d: f64) -> Support {
    match piece {
        Piece::Segment(s) => {
            let dir = s.direction();
            Support::Line {
                p: s.from + dir.perp() * d,
                dir,
            }
        }
        Piece::Arc(a) => Support::Circle {
            c: a.center,
            r: if a.ccw { a.radius - d } else { a.radius + d },
        },
    }
}

fn line_circle(p: Point, dir: Point, c: Point, r: f64) -> Vec<Point> {
    let s0 = (c - p).dot(dir);
    let foot = p + dir * s0;
    let h2 = r * r - foot.dist(c).powi(2);
    if h2 < -EPS * r.max(1.0) {
        return Vec::new();
    }
    let w = h2.max(0.0).sqrt();
    vec![foot - dir * w, foot + dir * w]
}

fn support_crossings(a: Support, b: Support) -> Vec<Point> {
    match (a, b) {
        (Support::Line { p, dir }, Support::Line { p: q, dir: e }) => {
            let den = dir.cross(e);
            if den.abs() < 1e-14 {
                return Vec::new();
            }
            let s = (q - p).cross(e) / den;
            vec![p + dir * s]
        }
        (Support::Line { p, dir }, Support::Circle { c, r })
        | (Support::Circle { c, r }, Support::Line { p, dir }) => {
            if r <= 0.0 {
                return Vec::new();
            }
            line_circle(p, dir, c, r)
        }
        (Support::Circle { c, r }, Support::Circle { c: c2, r: r2 }) => {
            let (Ok(d1), Ok(d2)) = (Disk::new(c, r), Disk::new(c2, r2)) else {
                return Vec::new();
            };
            circle_circle_intersection(&d1, &d2, EPS).unwrap_or_default()
        }
    }
}

fn nearest(points: Vec<Point>, to: Point) -> Option<Point> {
    points
        .into_iter()
        .min_by(|a, b| a.dist(to).total_cmp(&b.dist(to)))
}

/// An angle wrapped to `(-π, π]`.
fn wrap_angle(x: f64) -> f64 {
    let y = (x + PI).rem_euclid(2.0 * PI) - PI;
    if y <= -PI {
        y + 2.0 * PI
    } else {
        y
    }
}

/// Moves the start of `piece` to the point `x` on its support.
fn with_start(piece: &Piece, x: Point) -> Option<Piece> {
    match piece {
        Piece::Segment(s) => {
            let p = Piece::segment(x, s.to);
            (p.length() > EPS && (s.to - x).dot(s.direction()) > 0.0).then_some(p)
        }
        Piece::Arc(a) => {
            let th = (x - a.center).angle();
            let sign = if a.ccw { 1.0 } else { -1.0 };
            let moved = sign * wrap_angle(th - a.start_angle);
            let sweep = a.sweep() - moved;
            (sweep > EPS / a.radius && sweep < 2.0 * PI)
                .then(|| Piece::Arc(Arc::with_sweep(a.center, a.radius, th, sweep, a.ccw)))
        }
    }
}

/// Moves the end of `piece` to the point `x` on its support.
fn with_end(piece: &Piece, x: Point) -> Option<Piece> {
    with_start(&piece.reversed(), x).map(|p| p.reversed())
}

/// Moves `piece` by `d` along its left normal; `None` when an arc collapses.
fn shift_piece(piece: &Piece, d: f64) -> Option<Piece> {
    match piece {
        Piece::Segment(s) => {
            let n = s.direction().perp() * d;
            Some(Piece::segment(s.from + n, s.to + n))
        }
        Piece::Arc(a) => {
            let r = if a.ccw { a.radius - d } else { a.radius + d };
            (r > EPS).then(|| Piece::Arc(Arc::new(a.center, r, a.start_angle, a.end_angle, a.ccw)))
        }
    }
}

fn turn_between(a: &Piece, b: &Piece) -> f64 {
    let (u, v) = (a.tangent_at(1.0), b.tangent_at(0.0));
    u.cross(v).atan2(u.dot(v))
}

/// The curve at signed distance `d` (positive: inward).
///
/// Fails with `FeatureTooNarrow` if some part of the result comes closer
/// than `|d|` to the input, or if the result is not a simple curve.
pub fn offset(curve: &JordanCurve, d: f64) -> Result<JordanCurve> {
    if !d.is_finite() {
        return Err(GeomError::InvalidInput(format!("offset distance must be finite, got {d}")));
    }
    curve.require_positive()?;
    if d == 0.0 {
        return Ok(curve.clone());
    }
    let src = curve.pieces();
    let moved: Vec<(usize, Piece)> = src
        .iter()
        .enumerate()
        .filter_map(|(i, p)| shift_piece(p, d).map(|q| (i, q)))
        .collect();
    if moved.is_empty() {
        return Err(GeomError::FeatureTooNarrow(0, 0));
    }
    let m = moved.len();
    // For each moved piece: new start, new end, and a bridging arc after it.
    let mut starts: Vec<Option<Point>> = vec![None; m];
    let mut ends: Vec<Option<Point>> = vec![None; m];
    let mut bridges: Vec<Option<Piece>> = vec![None; m];
    for k in 0..m {
        let (ia, a) = moved[k];
        let (ib, b) = moved[(k + 1) % m];
        if m == 1 && a.end().dist(b.start()) <= EPS {
            break;
        }
        let turn = turn_between(&a, &b);
        if turn.abs() <= SMOOTH_TURN_TOL && a.end().dist(b.start()) <= 1e3 * EPS {
            continue;
        }
        if turn * d > 0.0 {
            let guess = a.end().lerp(b.start(), 0.5);
            let x = nearest(support_crossings(support(&a), support(&b)), guess)
                .ok_or(GeomError::FeatureTooNarrow(ia, ib))?;
            ends[k] = Some(x);
            starts[(k + 1) % m] = Some(x);
        } else {
            let v = src[ib].start();
            let (t0, t1) = ((a.end() - v).angle(), (b.start() - v).angle());
            bridges[k] = Some(Piece::Arc(Arc::new(v, d.abs(), t0, t1, turn > 0.0)));
        }
    }
    let mut pieces = Vec::new();
    let mut origin = Vec::new();
    for k in 0..m {
        let (i, mut p) = moved[k];
        if let Some(x) = starts[k] {
            p = with_start(&p, x).ok_or(GeomError::FeatureTooNarrow(i, i))?;
        }
        if let Some(x) = ends[k] {
            p = with_end(&p, x).ok_or(GeomError::FeatureTooNarrow(i, i))?;
        }
        pieces.push(p);
        origin.push(i);
        if let Some(b) = bridges[k] {
            pieces.push(b);
            origin.push(moved[(k + 1) % m].0);
        }
    }
    let tol = 1e-7 * (1.0 + d.abs());
    for (p, &i) in pieces.iter().zip(&origin) {
        for (j, q) in src.iter().enumerate() {
            if piece_piece_distance(p, q, EPS) < d.abs() - tol {
                return Err(GeomError::FeatureTooNarrow(i, j));
            }
        }
    }
    let out = JordanCurve::with_tolerance(pieces, curve.eps()).map_err(|e| match e {
        GeomError::InvalidCurve(rep) => {
            let (a, b) = rep
                .self_intersections
                .first()
                .map(|c| (origin[c.pieces.0], origin[c.pieces.1]))
                .unwrap_or((0, 0));
            GeomError::FeatureTooNarrow(a, b)
        }
        other => other,
    })?;
    if out.orientation() != Orientation::Positive {
        return Err(GeomError::FeatureTooNarrow(0, 0));
    }
    Ok(out)
}

/// Foot of the perpendicular from `x` onto the support of `piece`, as a
/// parameter of the piece (possibly outside `[0, 1]`, `None` if off an arc).
fn foot_param(piece: &Piece, x: Point) -> Option<(f64, Point)> {
    match piece {
        Piece::Segment(s) => {
            let t = (x - s.from).dot(s.direction()) / s.length();
            Some((t, s.point_at(t)))
        }
        Piece::Arc(a) => {
            let off = x - a.center;
            if off.norm() <= EPS {
                return Some((1.0, a.point_at(1.0)));
            }
            let th = off.angle();
            let tol = EPS / a.radius;
            a.param_of_angle(th, tol).map(|t| (t, a.point_at(t)))
        }
    }
}

/// Replaces clockwise arcs of radius `r` (the arcs an offset rolls around
/// concave corners) by the two tangent segments through their corner point.
fn miter(pieces: &[Piece], r: f64) -> Vec<Piece> {
    let mut out = Vec::with_capacity(pieces.len() + 4);
    for p in pieces {
        match p {
            Piece::Arc(a)
                if !a.ccw
                    && (a.radius - r).abs() <= 1e-6 * r.max(1.0)
                    && a.sweep() < PI - 1e-6 =>
            {
                let reach = a.radius * (0.5 * a.sweep()).tan();
                let (s, e) = (p.start(), p.end());
                let corner = s + p.tangent_at(0.0) * reach;
                out.push(Piece::segment(s, corner));
                out.push(Piece::segment(corner, e));
            }
            _ => out.push(*p),
        }
    }
    out
}

/// Replaces every left-turning corner by a tangent arc of radius
/// `spec.round_radius`; concave corners follow `spec.concave_mode`.
pub fn round_corners(curve: &JordanCurve, spec: &ToolpathSpec) -> Result<JordanCurve> {
    let rho = spec.round_radius;
    if !(rho > 0.0 && rho.is_finite() && spec.tool_radius > 0.0 && spec.tool_radius.is_finite()) {
        return Err(GeomError::InvalidInput("tool and round radii must be positive".into()));
    }
    curve.require_positive()?;
    let base: Vec<Piece> = match spec.concave_mode {
        ConcaveMode::Roll => curve.pieces().to_vec(),
        ConcaveMode::Miter => miter(curve.pieces(), spec.tool_radius),
    };
    let base = JordanCurve::with_tolerance(base, curve.eps())?;
    let pieces = base.pieces();
    let n = pieces.len();
    for (i, p) in pieces.iter().enumerate() {
        if let Piece::Arc(a) = p {
            if a.ccw && a.radius < rho * (1.0 - 1e-9) {
                return Err(GeomError::CornerTooTight(i));
            }
        }
    }
    // Fillet after piece k: (param on k where it starts, param on k+1 where it ends, arc).
    let mut fillets: Vec<Option<(f64, f64, Piece)>> = vec![None; n];
    for k in 0..n {
        if junction_turn(&base, k) <= SMOOTH_TURN_TOL {
            continue;
        }
        let vertex = (k + 1) % n;
        let (a, b) = (&pieces[k], &pieces[vertex]);
        let v = b.start();
        let c = nearest(
            support_crossings(shifted_support(a, rho), shifted_support(b, rho)),
            v,
        )
        .ok_or(GeomError::CornerTooTight(vertex))?;
        let ptol = 1e-9;
        let (ta, pa) = foot_param(a, c).ok_or(GeomError::CornerTooTight(vertex))?;
        let (tb, pb) = foot_param(b, c).ok_or(GeomError::CornerTooTight(vertex))?;
        if !(-ptol..=1.0 + ptol).contains(&ta) || !(-ptol..=1.0 + ptol).contains(&tb) {
            return Err(GeomError::CornerTooTight(vertex));
        }
        let arc = Piece::Arc(Arc::new(c, rho, (pa - c).angle(), (pb - c).angle(), true));
        fillets[k] = Some((ta.clamp(0.0, 1.0), tb.clamp(0.0, 1.0), arc));
    }
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let s = fillets[(i + n - 1) % n].map_or(0.0, |f| f.1);
        let e = fillets[i].map_or(1.0, |f| f.0);
        let tol = pieces[i].param_tol(EPS);
        if e - s < -tol {
            return Err(GeomError::CornerTooTight(i));
        }
        if e - s > tol {
            out.push(if s == 0.0 && e == 1.0 { pieces[i] } else { pieces[i].sub(s, e) });
        }
        if let Some((_, _, arc)) = fillets[i] {
            out.push(arc);
        }
    }
    JordanCurve::with_tolerance(out, curve.eps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::check_bounded_convex_curvature;
    use crate::shapes;

    fn square(side: f64) -> JordanCurve {
        shapes::polygon(&[
            Point::new(0.0, 0.0),
            Point::new(side, 0.0),
            Point::new(side, side),
            Point::new(0.0, side),
        ])
        .unwrap()
    }

    fn spec(round: f64, mode: ConcaveMode) -> ToolpathSpec {
        ToolpathSpec {
            tool_radius: 1.0,
            round_radius: round,
            concave_mode: mode,
        }
    }

    #[test]
    fn offset_circle() {
        let c = shapes::circle(Point::ORIGIN, 3.0);
        let o = offset(&c, 1.0).unwrap();
        for k in 0..1000 {
            let p = o.point_at_param(k as f64 / 1000.0 * o.len() as f64).coords;
            assert!((p.norm() - 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn offset_square_stays_square() {
        let o = offset(&square(4.0), 1.0).unwrap();
        assert_eq!(o.len(), 4);
        assert!((o.signed_area() - 4.0).abs() < 1e-9);
        let sq = square(4.0);
        for k in 0..1000 {
            let p = o.point_at_param(k as f64 / 1000.0 * 4.0).coords;
            assert!((sq.distance(p) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn offset_rolls_around_reflex_corner() {
        let l = shapes::l_pocket();
        let o = offset(&l, 0.5).unwrap();
        let arcs: Vec<&Piece> = o.pieces().iter().filter(|p| matches!(p, Piece::Arc(_))).collect();
        assert_eq!(arcs.len(), 1);
        let Piece::Arc(a) = arcs[0] else { unreachable!() };
        assert!(!a.ccw && (a.radius - 0.5).abs() < 1e-12);
        assert!(a.center.dist(Point::new(2.0, 2.0)) < 1e-12);
    }

    #[test]
    fn narrow_neck_is_rejected() {
        let pocket = shapes::polygon(&[
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(4.0, 1.6),
            Point::new(6.0, 1.6),
            Point::new(6.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(10.0, 4.0),
            Point::new(6.0, 4.0),
            Point::new(6.0, 2.4),
            Point::new(4.0, 2.4),
            Point::new(4.0, 4.0),
            Point::new(0.0, 4.0),
        ])
        .unwrap();
        assert!(matches!(offset(&pocket, 1.0), Err(GeomError::FeatureTooNarrow(..))));
        assert!(offset(&pocket, 0.3).is_ok());
    }

    #[test]
    fn round_square() {
        let r = round_corners(&square(2.0), &spec(0.5, ConcaveMode::Roll)).unwrap();
        assert_eq!(r.len(), 8);
        assert!(check_bounded_convex_curvature(&r, 0.5).unwrap().ok);
        let full = round_corners(&square(2.0), &spec(1.0, ConcaveMode::Roll)).unwrap();
        assert!((full.signed_area() - std::f64::consts::PI).abs() < 1e-9);
        assert!(matches!(
            round_corners(&square(0.5), &spec(1.0, ConcaveMode::Roll)),
            Err(GeomError::CornerTooTight(_))
        ));
    }

    #[test]
    fn miter_on_l_path() {
        let path = offset(&shapes::l_pocket(), 0.5).unwrap();
        let s = ToolpathSpec {
            tool_radius: 0.5,
            round_radius: 0.25,
            concave_mode: ConcaveMode::Miter,
        };
        let m = round_corners(&path, &s).unwrap();
        assert!(m.pieces().iter().all(|p| !matches!(p, Piece::Arc(a) if !a.ccw)));
        assert!(check_bounded_convex_curvature(&m, 0.25).unwrap().ok);
        let roll = round_corners(&path, &ToolpathSpec { concave_mode: ConcaveMode::Roll, ..s }).unwrap();
        assert!(roll.signed_area() > m.signed_area());
    }
}
