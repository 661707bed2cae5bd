//! Closed-form primitives on points, disks, segments and circular arcs.
//!
//! Every boundary in this crate is a chain of [`Piece`]s, each of which is a
//! directed [`Segment`] or a directed [`Arc`]. Pieces are parameterized by
//! `t ∈ [0, 1]`; for arcs the parameter is proportional to the swept angle.
//!
//! Angles are stored exactly as given. Any membership test on an arc's angle
//! range normalizes relative to the start angle in the traversal direction,
//! so nothing here depends on where the `±π` seam falls.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::GeomError;

/// Default absolute tolerance for coincidence and tangency predicates.
pub const EPS: f64 = 1e-9;

/// Tolerance for contacts between disks and curves found by bisection.
pub const CONTACT_EPS: f64 = 1e-7;

/// Sweeps (after normalization) below this are read as a full turn.
const FULL_TURN_SLACK: f64 = 1e-12;

const MAX_ARG_DEPTH: u32 = 96;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    #[inline]
    pub fn polar(theta: f64) -> Self {
        Point::new(theta.cos(), theta.sin())
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Rotated a quarter turn counterclockwise.
    #[inline]
    pub fn perp(self) -> Self {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            self
        } else {
            self / n
        }
    }

    #[inline]
    pub fn lerp(self, o: Point, t: f64) -> Self {
        self + (o - self) * t
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    #[inline]
    fn div(self, s: f64) -> Point {
        Point::new(self.x / s, self.y / s)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point::new(a[0], a[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// An open disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Result<Self, GeomError> {
        if !center.is_finite() || !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::InvalidInput(format!(
                "disk needs a finite center and positive radius, got {center:?}, {radius}"
            )));
        }
        Ok(Disk { center, radius })
    }

    /// Strict membership in the open disk.
    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        p.dist(self.center) < self.radius
    }

    #[inline]
    pub fn boundary_point(&self, theta: f64) -> Point {
        self.center + Point::polar(theta) * self.radius
    }

    /// Signed distance from `p` to the circle: negative inside.
    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        p.dist(self.center) - self.radius
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    /// The disk of radius `radius` tangent to this one at `at` from inside,
    /// i.e. whose center lies on the segment from `at` to this disk's center.
    pub fn cotangent_at(&self, at: Point, radius: f64) -> Disk {
        let n = (self.center - at).normalized();
        Disk {
            center: at + n * radius,
            radius,
        }
    }

    /// The whole boundary circle as one counterclockwise arc starting at angle 0.
    pub fn circle(&self) -> Arc {
        Arc {
            center: self.center,
            radius: self.radius,
            start_angle: 0.0,
            end_angle: TAU,
            ccw: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
}

impl Segment {
    pub const fn new(from: Point, to: Point) -> Self {
        Segment { from, to }
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.from.dist(self.to)
    }

    #[inline]
    pub fn point_at(&self, t: f64) -> Point {
        self.from.lerp(self.to, t)
    }

    #[inline]
    pub fn direction(&self) -> Point {
        (self.to - self.from).normalized()
    }
}

/// A directed circular arc. The point at angle `θ` is `center + radius·(cos θ, sin θ)`;
/// traversal runs from `start_angle` toward `end_angle` in the direction given by `ccw`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub center: Point,
    pub radius: f64,
    pub start_angle: f64,
    pub end_angle: f64,
    pub ccw: bool,
}

impl Arc {
    pub fn new(center: Point, radius: f64, start_angle: f64, end_angle: f64, ccw: bool) -> Self {
        Arc {
            center,
            radius,
            start_angle,
            end_angle,
            ccw,
        }
    }

    /// Arc with explicit positive sweep from `start_angle`.
    pub fn with_sweep(center: Point, radius: f64, start_angle: f64, sweep: f64, ccw: bool) -> Self {
        let end_angle = if ccw {
            start_angle + sweep
        } else {
            start_angle - sweep
        };
        Arc::new(center, radius, start_angle, end_angle, ccw)
    }

    /// Traversed angle, in `(0, 2π]`. Coinciding start and end angles denote a full circle.
    pub fn sweep(&self) -> f64 {
        let d = if self.ccw {
            self.end_angle - self.start_angle
        } else {
            self.start_angle - self.end_angle
        };
        let s = d.rem_euclid(TAU);
        if !(FULL_TURN_SLACK..=TAU - FULL_TURN_SLACK).contains(&s) {
            TAU
        } else {
            s
        }
    }

    #[inline]
    pub fn signed_sweep(&self) -> f64 {
        if self.ccw {
            self.sweep()
        } else {
            -self.sweep()
        }
    }

    #[inline]
    pub fn angle_at(&self, t: f64) -> f64 {
        self.start_angle + t * self.signed_sweep()
    }

    #[inline]
    pub fn point_at(&self, t: f64) -> Point {
        self.center + Point::polar(self.angle_at(t)) * self.radius
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.radius * self.sweep()
    }

    pub fn is_full_circle(&self) -> bool {
        self.sweep() >= TAU - FULL_TURN_SLACK
    }

    /// Parameter of the point at angle `theta`, if it lies on the arc within
    /// `tol` radians of the angle range. Results are clamped into `[0, 1]`.
    pub fn param_of_angle(&self, theta: f64, tol: f64) -> Option<f64> {
        let sweep = self.sweep();
        let off = if self.ccw {
            theta - self.start_angle
        } else {
            self.start_angle - theta
        }
        .rem_euclid(TAU);
        if off <= sweep {
            return Some(off / sweep);
        }
        if off <= sweep + tol {
            return Some(1.0);
        }
        if TAU - off <= tol {
            return Some(0.0);
        }
        None
    }

    pub fn disk(&self) -> Disk {
        Disk {
            center: self.center,
            radius: self.radius,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Segment(Segment),
    Arc(Arc),
}

impl From<Segment> for Piece {
    fn from(s: Segment) -> Self {
        Piece::Segment(s)
    }
}

impl From<Arc> for Piece {
    fn from(a: Arc) -> Self {
        Piece::Arc(a)
    }
}

/// A point on a single piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PiecePoint {
    pub t: f64,
    pub point: Point,
}

impl Piece {
    pub fn segment(from: Point, to: Point) -> Self {
        Piece::Segment(Segment::new(from, to))
    }

    pub fn point_at(&self, t: f64) -> Point {
        match self {
            Piece::Segment(s) => s.point_at(t),
            Piece::Arc(a) => a.point_at(t),
        }
    }

    pub fn start(&self) -> Point {
        match self {
            Piece::Segment(s) => s.from,
            Piece::Arc(a) => a.point_at(0.0),
        }
    }

    pub fn end(&self) -> Point {
        match self {
            Piece::Segment(s) => s.to,
            Piece::Arc(a) => a.point_at(1.0),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            Piece::Segment(s) => s.length(),
            Piece::Arc(a) => a.length(),
        }
    }

    /// Unit tangent in the traversal direction.
    pub fn tangent_at(&self, t: f64) -> Point {
        match self {
            Piece::Segment(s) => s.direction(),
            Piece::Arc(a) => {
                let r = Point::polar(a.angle_at(t)).perp();
                if a.ccw {
                    r
                } else {
                    -r
                }
            }
        }
    }

    /// Unit normal on the left of the traversal direction.
    pub fn left_normal_at(&self, t: f64) -> Point {
        self.tangent_at(t).perp()
    }

    /// Signed curvature: positive when turning left.
    pub fn curvature(&self) -> f64 {
        match self {
            Piece::Segment(_) => 0.0,
            Piece::Arc(a) if a.ccw => 1.0 / a.radius,
            Piece::Arc(a) => -1.0 / a.radius,
        }
    }

    pub fn reversed(&self) -> Piece {
        match *self {
            Piece::Segment(s) => Piece::segment(s.to, s.from),
            Piece::Arc(a) => Piece::Arc(Arc {
                center: a.center,
                radius: a.radius,
                start_angle: a.end_angle,
                end_angle: a.start_angle,
                ccw: !a.ccw,
            }),
        }
    }

    /// The sub-piece between parameters `t0 < t1`.
    pub fn sub(&self, t0: f64, t1: f64) -> Piece {
        match *self {
            Piece::Segment(s) => Piece::segment(s.point_at(t0), s.point_at(t1)),
            Piece::Arc(a) => {
                let sw = a.signed_sweep();
                let start = a.start_angle + t0 * sw;
                let span = (t1 - t0) * a.sweep();
                Piece::Arc(Arc::with_sweep(a.center, a.radius, start, span, a.ccw))
            }
        }
    }

    pub fn midpoint(&self) -> Point {
        self.point_at(0.5)
    }

    /// Parameter tolerance that corresponds to an arc-length of `eps`.
    pub fn param_tol(&self, eps: f64) -> f64 {
        let l = self.length();
        if l > 0.0 {
            eps / l
        } else {
            0.0
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Piece::Segment(s) => s.from.is_finite() && s.to.is_finite(),
            Piece::Arc(a) => {
                a.center.is_finite()
                    && a.radius.is_finite()
                    && a.start_angle.is_finite()
                    && a.end_angle.is_finite()
            }
        }
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        let (s, e) = (self.start(), self.end());
        let mut lo = Point::new(s.x.min(e.x), s.y.min(e.y));
        let mut hi = Point::new(s.x.max(e.x), s.y.max(e.y));
        if let Piece::Arc(a) = self {
            for k in 0..4 {
                let th = k as f64 * FRAC_PI_2;
                if a.param_of_angle(th, 0.0).is_some() {
                    let p = a.center + Point::polar(th) * a.radius;
                    lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                    hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
                }
            }
        }
        (lo, hi)
    }

    /// Applies a similarity `p ↦ s·p + offset` (with `s > 0`).
    pub fn scaled(&self, s: f64, offset: Point) -> Piece {
        match *self {
            Piece::Segment(g) => Piece::segment(g.from * s + offset, g.to * s + offset),
            Piece::Arc(a) => Piece::Arc(Arc {
                center: a.center * s + offset,
                radius: a.radius * s,
                ..a
            }),
        }
    }

    /// Mirror image across the y-axis (`x ↦ −x`); reverses turning direction.
    pub fn mirrored_x(&self) -> Piece {
        match *self {
            Piece::Segment(g) => Piece::segment(
                Point::new(-g.from.x, g.from.y),
                Point::new(-g.to.x, g.to.y),
            ),
            Piece::Arc(a) => Piece::Arc(Arc {
                center: Point::new(-a.center.x, a.center.y),
                radius: a.radius,
                start_angle: PI - a.start_angle,
                end_angle: PI - a.end_angle,
                ccw: !a.ccw,
            }),
        }
    }
}

/// Closest point of `piece` to `p`. Ties go to the smaller parameter.
pub fn closest_point(p: Point, piece: &Piece) -> (PiecePoint, f64) {
    match piece {
        Piece::Segment(s) => {
            let d = s.to - s.from;
            let l2 = d.dot(d);
            let t = if l2 > 0.0 {
                ((p - s.from).dot(d) / l2).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let q = s.point_at(t);
            (PiecePoint { t, point: q }, p.dist(q))
        }
        Piece::Arc(a) => {
            let v = p - a.center;
            if v.norm() > 0.0 {
                if let Some(t) = a.param_of_angle(v.angle(), 0.0) {
                    let q = a.point_at(t);
                    return (PiecePoint { t, point: q }, (v.norm() - a.radius).abs());
                }
            }
            endpoint_extreme(p, a, false)
        }
    }
}

fn endpoint_extreme(p: Point, a: &Arc, farthest: bool) -> (PiecePoint, f64) {
    let s = a.point_at(0.0);
    let e = a.point_at(1.0);
    let (ds, de) = (p.dist(s), p.dist(e));
    let pick_end = if farthest { de > ds } else { de < ds };
    if pick_end {
        (PiecePoint { t: 1.0, point: e }, de)
    } else {
        (PiecePoint { t: 0.0, point: s }, ds)
    }
}

/// Euclidean distance from `p` to the point set of `piece`.
pub fn point_piece_distance(p: Point, piece: &Piece) -> f64 {
    closest_point(p, piece).1
}

/// Point of `piece` farthest from `p`, with that distance. Ties go to the smaller parameter.
pub fn piece_farthest_point(p: Point, piece: &Piece) -> (PiecePoint, f64) {
    match piece {
        Piece::Segment(s) => {
            let (ds, de) = (p.dist(s.from), p.dist(s.to));
            if de > ds {
                (PiecePoint { t: 1.0, point: s.to }, de)
            } else {
                (PiecePoint { t: 0.0, point: s.from }, ds)
            }
        }
        Piece::Arc(a) => {
            let v = a.center - p;
            if v.norm() == 0.0 {
                return (
                    PiecePoint {
                        t: 0.0,
                        point: a.point_at(0.0),
                    },
                    a.radius,
                );
            }
            let (ep, de) = endpoint_extreme(p, a, true);
            if let Some(t) = a.param_of_angle(v.angle(), 0.0) {
                let q = a.point_at(t);
                let d = v.norm() + a.radius;
                // An endpoint can only tie with the antipode when the antipode is that endpoint.
                if d > de || (d == de && t < ep.t) {
                    return (PiecePoint { t, point: q }, d);
                }
            }
            (ep, de)
        }
    }
}

/// Intersection points of two circles (given as disk boundaries).
///
/// Tangency within `eps` yields exactly one point.
pub fn circle_circle_intersection(d1: &Disk, d2: &Disk, eps: f64) -> Result<Vec<Point>, GeomError> {
    let delta = d2.center - d1.center;
    let d = delta.norm();
    let (r1, r2) = (d1.radius, d2.radius);
    if d <= eps && (r1 - r2).abs() <= eps {
        return Err(GeomError::CoincidentCircles);
    }
    if d > r1 + r2 + eps || d < (r1 - r2).abs() - eps || d == 0.0 {
        return Ok(Vec::new());
    }
    let u = delta / d;
    if (d - (r1 + r2)).abs() <= eps {
        return Ok(vec![d1.center + u * r1]);
    }
    if (d - (r1 - r2).abs()).abs() <= eps {
        let dir = if r1 >= r2 { u } else { -u };
        return Ok(vec![d1.center + dir * r1]);
    }
    let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    let h = (r1 * r1 - a * a).max(0.0).sqrt();
    let mid = d1.center + u * a;
    let n = u.perp();
    Ok(vec![mid + n * h, mid - n * h])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleHit {
    pub t: f64,
    pub point: Point,
    /// The piece touches the circle without crossing it.
    pub tangential: bool,
}

/// Result of intersecting a piece with a circle.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CircleHits {
    /// Isolated points, sorted by parameter.
    pub points: Vec<CircleHit>,
    /// Parameter ranges where an arc lies on the circle (flagged overlap).
    pub overlaps: Vec<(f64, f64)>,
}

/// All points of `piece` on the boundary of `circle`, sorted by parameter.
pub fn piece_circle_intersection(piece: &Piece, circle: &Disk, eps: f64) -> CircleHits {
    let mut out = CircleHits::default();
    match piece {
        Piece::Segment(s) => {
            let len = s.length();
            let u = s.direction();
            let s0 = (circle.center - s.from).dot(u);
            let h = u.cross(circle.center - s.from).abs();
            let r = circle.radius;
            let tol = eps / len;
            let mut push = |sv: f64, tangential: bool| {
                let t = sv / len;
                if t >= -tol && t <= 1.0 + tol {
                    let t = t.clamp(0.0, 1.0);
                    out.points.push(CircleHit {
                        t,
                        point: s.point_at(t),
                        tangential,
                    });
                }
            };
            if (h - r).abs() <= eps {
                push(s0, true);
            } else if h < r {
                let w = (r * r - h * h).sqrt();
                push(s0 - w, false);
                push(s0 + w, false);
            }
        }
        Piece::Arc(a) => match circle_circle_intersection(&a.disk(), circle, eps) {
            Err(_) => out.overlaps.push((0.0, 1.0)),
            Ok(pts) => {
                let tangential = pts.len() == 1;
                let tol = eps / a.radius;
                for p in pts {
                    if let Some(t) = a.param_of_angle((p - a.center).angle(), tol) {
                        out.points.push(CircleHit {
                            t,
                            point: a.point_at(t),
                            tangential,
                        });
                    }
                }
            }
        },
    }
    out.points.sort_by(|x, y| x.t.total_cmp(&y.t));
    out.points.dedup_by(|x, y| x.point.dist(y.point) <= eps);
    out
}

/// Continuous change of the argument of `(q − p)` as `q` runs along `piece`.
///
/// Segments are handled in one step. Arcs are cut into quarter-turn pieces and
/// then bisected until every sub-chord subtends less than a right angle as seen
/// from `p`; the principal-value increments are summed.
pub fn arg_variation(piece: &Piece, p: Point, eps: f64) -> Result<f64, GeomError> {
    if point_piece_distance(p, piece) <= eps {
        return Err(GeomError::PointOnCurve);
    }
    match piece {
        Piece::Segment(s) => Ok(chord_angle(s.from - p, s.to - p)),
        Piece::Arc(a) => {
            let k = (a.sweep() / FRAC_PI_2).ceil().max(1.0) as usize;
            let mut total = 0.0;
            for i in 0..k {
                let t0 = i as f64 / k as f64;
                let t1 = (i + 1) as f64 / k as f64;
                total += arc_arg(a, p, t0, t1, 0)?;
            }
            Ok(total)
        }
    }
}

#[inline]
fn chord_angle(u: Point, v: Point) -> f64 {
    u.cross(v).atan2(u.dot(v))
}

fn arc_arg(a: &Arc, p: Point, t0: f64, t1: f64, depth: u32) -> Result<f64, GeomError> {
    let th = chord_angle(a.point_at(t0) - p, a.point_at(t1) - p);
    if th.abs() < FRAC_PI_2 {
        return Ok(th);
    }
    if depth >= MAX_ARG_DEPTH {
        return Err(GeomError::NumericalInconsistency(
            "argument variation did not resolve".into(),
        ));
    }
    let tm = 0.5 * (t0 + t1);
    Ok(arc_arg(a, p, t0, tm, depth + 1)? + arc_arg(a, p, tm, t1, depth + 1)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairHit {
    pub ta: f64,
    pub tb: f64,
    pub point: Point,
    pub tangential: bool,
}

/// Intersections of two pieces.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PieceHits {
    pub hits: Vec<PairHit>,
    /// The pieces share a sub-piece of positive length.
    pub overlap: bool,
}

/// Computes all intersection points of two pieces in closed form.
pub fn piece_intersections(a: &Piece, b: &Piece, eps: f64) -> PieceHits {
    let mut out = match (a, b) {
        (Piece::Segment(s), Piece::Segment(t)) => seg_seg(s, t, eps),
        (Piece::Segment(_), Piece::Arc(arc)) => seg_arc(a, arc, eps, false),
        (Piece::Arc(arc), Piece::Segment(_)) => seg_arc(b, arc, eps, true),
        (Piece::Arc(x), Piece::Arc(y)) => arc_arc(x, y, eps),
    };
    out.hits.sort_by(|x, y| x.ta.total_cmp(&y.ta));
    out.hits.dedup_by(|x, y| x.point.dist(y.point) <= eps);
    out
}

fn seg_seg(s: &Segment, t: &Segment, eps: f64) -> PieceHits {
    let mut out = PieceHits::default();
    let d1 = s.to - s.from;
    let d2 = t.to - t.from;
    let (l1, l2) = (d1.norm(), d2.norm());
    let denom = d1.cross(d2);
    let w = t.from - s.from;
    if denom.abs() <= 1e-14 * l1 * l2 {
        // Parallel: only collinear pieces can meet.
        if (d1.cross(w) / l1).abs() > eps {
            return out;
        }
        let pa = w.dot(d1) / (l1 * l1);
        let pb = (t.to - s.from).dot(d1) / (l1 * l1);
        let lo = pa.min(pb).max(0.0);
        let hi = pa.max(pb).min(1.0);
        if (hi - lo) * l1 > eps {
            out.overlap = true;
        } else if hi - lo >= -eps / l1 {
            let ta = (0.5 * (lo + hi)).clamp(0.0, 1.0);
            let point = s.point_at(ta);
            let (pp, _) = closest_point(point, &Piece::Segment(*t));
            out.hits.push(PairHit {
                ta,
                tb: pp.t,
                point,
                tangential: false,
            });
        }
        return out;
    }
    let ta = w.cross(d2) / denom;
    let tb = w.cross(d1) / denom;
    let (tol1, tol2) = (eps / l1, eps / l2);
    if ta >= -tol1 && ta <= 1.0 + tol1 && tb >= -tol2 && tb <= 1.0 + tol2 {
        let ta = ta.clamp(0.0, 1.0);
        out.hits.push(PairHit {
            ta,
            tb: tb.clamp(0.0, 1.0),
            point: s.point_at(ta),
            tangential: false,
        });
    }
    out
}

fn seg_arc(seg: &Piece, arc: &Arc, eps: f64, swapped: bool) -> PieceHits {
    let mut out = PieceHits::default();
    let tol = eps / arc.radius;
    for h in piece_circle_intersection(seg, &arc.disk(), eps).points {
        if let Some(tb) = arc.param_of_angle((h.point - arc.center).angle(), tol) {
            let (ta, tb) = if swapped { (tb, h.t) } else { (h.t, tb) };
            out.hits.push(PairHit {
                ta,
                tb,
                point: h.point,
                tangential: h.tangential,
            });
        }
    }
    out
}

fn arc_arc(x: &Arc, y: &Arc, eps: f64) -> PieceHits {
    let mut out = PieceHits::default();
    match circle_circle_intersection(&x.disk(), &y.disk(), eps) {
        Ok(pts) => {
            let tangential = pts.len() == 1;
            for p in pts {
                let ta = x.param_of_angle((p - x.center).angle(), eps / x.radius);
                let tb = y.param_of_angle((p - y.center).angle(), eps / y.radius);
                if let (Some(ta), Some(tb)) = (ta, tb) {
                    out.hits.push(PairHit {
                        ta,
                        tb,
                        point: x.point_at(ta),
                        tangential,
                    });
                }
            }
        }
        Err(_) => {
            // Same circle: compare angle ranges.
            let r = x.radius;
            let tol = eps / r;
            let strictly_inside = |arc: &Arc, th: f64| {
                let d = eps / arc.length();
                matches!(arc.param_of_angle(th, 0.0), Some(t) if t > d && t < 1.0 - d)
            };
            let ang = |arc: &Arc, t: f64| arc.angle_at(t);
            let probes_x = [ang(x, 0.0), ang(x, 0.5), ang(x, 1.0)];
            let probes_y = [ang(y, 0.0), ang(y, 0.5), ang(y, 1.0)];
            if probes_x.iter().any(|&th| strictly_inside(y, th))
                || probes_y.iter().any(|&th| strictly_inside(x, th))
            {
                out.overlap = true;
                return out;
            }
            for tx in [0.0, 1.0] {
                if let Some(ty) = y.param_of_angle(ang(x, tx), tol) {
                    out.hits.push(PairHit {
                        ta: tx,
                        tb: ty,
                        point: x.point_at(tx),
                        tangential: true,
                    });
                }
            }
            for ty in [0.0, 1.0] {
                if let Some(tx) = x.param_of_angle(ang(y, ty), tol) {
                    out.hits.push(PairHit {
                        ta: tx,
                        tb: ty,
                        point: y.point_at(ty),
                        tangential: true,
                    });
                }
            }
        }
    }
    out
}

/// Minimum distance between the point sets of two pieces.
pub fn piece_piece_distance(a: &Piece, b: &Piece, eps: f64) -> f64 {
    let hits = piece_intersections(a, b, eps);
    if hits.overlap || !hits.hits.is_empty() {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for p in [a.start(), a.end()] {
        best = best.min(point_piece_distance(p, b));
    }
    for p in [b.start(), b.end()] {
        best = best.min(point_piece_distance(p, a));
    }
    // Interior–interior critical pairs.
    match (a, b) {
        (Piece::Segment(_), Piece::Segment(_)) => {}
        (Piece::Segment(s), Piece::Arc(c)) | (Piece::Arc(c), Piece::Segment(s)) => {
            let n = s.direction().perp();
            for dir in [n, -n] {
                if let Some(t) = c.param_of_angle(dir.angle(), 0.0) {
                    best = best.min(point_piece_distance(c.point_at(t), &Piece::Segment(*s)));
                }
            }
        }
        (Piece::Arc(x), Piece::Arc(y)) => {
            let v = y.center - x.center;
            if v.norm() > 0.0 {
                for th in [v.angle(), v.angle() + PI] {
                    if let Some(t) = x.param_of_angle(th, 0.0) {
                        best = best.min(point_piece_distance(x.point_at(t), b));
                    }
                    if let Some(t) = y.param_of_angle(th, 0.0) {
                        best = best.min(point_piece_distance(y.point_at(t), a));
                    }
                }
            }
        }
    }
    best
}
