//! Bounded convex and concave curvature for arc/segment chains.
//!
//! For piecewise curves the pointwise disk condition reduces to a finite
//! local test. On a positively oriented curve a point fails only if it lies
//! on a counterclockwise (left-turning) arc of radius below `R`, or at a
//! junction where the tangent turns left. Everywhere else an explicit disk
//! of radius `R` can be placed tangent to the curve on the interior side:
//!
//! * on a segment or a clockwise arc the tangent line (or the arc's circle)
//!   separates the disk from the nearby curve;
//! * on a counterclockwise arc of radius `r ≥ R` the disk sits inside the
//!   osculating disk, touching it at the point;
//! * at a junction that turns right, the interior wedge is wider than a
//!   half-plane, so a disk whose center lies on the wedge bisector fits.
//!
//! Conversely a too-sharp convex arc or a left-turning corner yields a disk
//! satisfying both conditions of [`verify_lemma3`], so no unit disk works there.
//!
//! The concave check is the mirror image, with the interior replaced by the
//! exterior: clockwise arcs need radius `≥ R` and right-turning corners fail.

use crate::curve::{CurveInterval, CurvePoint, JordanCurve, Location, Orientation};
use crate::error::{GeomError, Result};
use crate::kernel::{closest_point, piece_circle_intersection, Arc, Disk, Piece, Point, CONTACT_EPS};

/// Junction turns below this (radians) are treated as tangent-continuous.
pub const SMOOTH_TURN_TOL: f64 = 1e-8;

/// Relative slack when comparing an arc radius with the bound.
const RADIUS_REL_TOL: f64 = 1e-9;

const HALVINGS: usize = 40;

/// The disk certifying the curvature condition at one boundary point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WitnessDisk {
    pub at: CurvePoint,
    pub disk: Disk,
    /// Radius of the verified neighborhood around `at`.
    pub epsilon: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    ConvexArcTooSharp,
    ConvexCorner,
    ConcaveArcTooSharp,
    ReflexCorner,
    CoveringConstruction,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::ConvexArcTooSharp => "ConvexArcTooSharp",
            ViolationKind::ConvexCorner => "ConvexCorner",
            ViolationKind::ConcaveArcTooSharp => "ConcaveArcTooSharp",
            ViolationKind::ReflexCorner => "ReflexCorner",
            ViolationKind::CoveringConstruction => "CoveringConstruction",
        }
    }
}

/// A point `q` and a disk of radius `R` with `q` on its boundary such that
/// the curve's interior near `q` lies in the disk while the curve itself
/// enters the disk arbitrarily close to `q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViolationWitness {
    pub q: CurvePoint,
    pub disk: Disk,
    /// Probe-verified neighborhood radius; `0.0` if the probes never agreed.
    pub epsilon: f64,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureReport {
    pub ok: bool,
    pub radius_bound: f64,
    pub violations: Vec<ViolationWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Interior,
    Exterior,
}

impl Side {
    fn location(self) -> Location {
        match self {
            Side::Interior => Location::Interior,
            Side::Exterior => Location::Exterior,
        }
    }
}

/// Signed turn from the end of piece `i` into piece `i + 1`.
pub fn junction_turn(curve: &JordanCurve, i: usize) -> f64 {
    let n = curve.len();
    let tin = curve.pieces()[i].tangent_at(1.0);
    let tout = curve.pieces()[(i + 1) % n].tangent_at(0.0);
    tin.cross(tout).atan2(tin.dot(tout))
}

fn too_sharp(radius: f64, bound: f64) -> bool {
    radius < bound * (1.0 - RADIUS_REL_TOL)
}

fn check_bound(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeomError::InvalidInput(format!("radius bound must be positive, got {r}")));
    }
    Ok(())
}

/// Decides bounded convex curvature with radius bound `r`.
pub fn check_bounded_convex_curvature(curve: &JordanCurve, r: f64) -> Result<CurvatureReport> {
    check_side(curve, r, Side::Interior)
}

/// Decides bounded concave curvature with radius bound `r`.
pub fn check_bounded_concave_curvature(curve: &JordanCurve, r: f64) -> Result<CurvatureReport> {
    check_side(curve, r, Side::Exterior)
}

fn check_side(curve: &JordanCurve, bound: f64, side: Side) -> Result<CurvatureReport> {
    check_bound(bound)?;
    curve.require_positive()?;
    // Arcs turning toward the tested side must be wide enough.
    let bad_ccw = side == Side::Interior;
    let mut violations = Vec::new();
    for (i, piece) in curve.pieces().iter().enumerate() {
        if let Piece::Arc(a) = piece {
            if a.ccw == bad_ccw && too_sharp(a.radius, bound) {
                let q = curve.point(i, 0.5);
                let toward = (a.center - q.coords).normalized();
                let disk = Disk::new(q.coords + toward * bound, bound)?;
                let kind = if bad_ccw {
                    ViolationKind::ConvexArcTooSharp
                } else {
                    ViolationKind::ConcaveArcTooSharp
                };
                violations.push(witness(curve, q, disk, kind, side));
            }
        }
    }
    let n = curve.len();
    for i in 0..n {
        let turn = junction_turn(curve, i);
        let bad = match side {
            Side::Interior => turn > SMOOTH_TURN_TOL,
            Side::Exterior => turn < -SMOOTH_TURN_TOL,
        };
        if !bad {
            continue;
        }
        let j = (i + 1) % n;
        let q = curve.point(j, 0.0);
        let bis = corner_bisector(curve, i);
        let dir = if side == Side::Interior { bis } else { -bis };
        let disk = Disk::new(q.coords + dir * bound, bound)?;
        let kind = if side == Side::Interior {
            ViolationKind::ConvexCorner
        } else {
            ViolationKind::ReflexCorner
        };
        violations.push(witness(curve, q, disk, kind, side));
    }
    Ok(CurvatureReport {
        ok: violations.is_empty(),
        radius_bound: bound,
        violations,
    })
}

fn witness(
    curve: &JordanCurve,
    q: CurvePoint,
    disk: Disk,
    kind: ViolationKind,
    side: Side,
) -> ViolationWitness {
    let start = start_scale(curve, disk.radius);
    let epsilon = inclusion_epsilon(curve, q.coords, &disk, side, start).unwrap_or(0.0);
    ViolationWitness {
        q,
        disk,
        epsilon,
        kind,
    }
}

/// Unit bisector of the left normals at the junction after piece `i`.
fn corner_bisector(curve: &JordanCurve, i: usize) -> Point {
    let n = curve.len();
    let nin = curve.pieces()[i].left_normal_at(1.0);
    let nout = curve.pieces()[(i + 1) % n].left_normal_at(0.0);
    let s = nin + nout;
    if s.norm() > 1e-12 {
        s.normalized()
    } else {
        // A cusp: the two normals cancel, so point along the incoming tangent.
        -curve.pieces()[i].tangent_at(1.0)
    }
}

fn start_scale(curve: &JordanCurve, bound: f64) -> f64 {
    let shortest = curve
        .pieces()
        .iter()
        .map(Piece::length)
        .fold(f64::INFINITY, f64::min);
    (0.25 * shortest).min(bound)
}

/// Probe points filling `B(center, radius)`: concentric rings, centre excluded.
pub(crate) fn probes(center: Point, radius: f64) -> impl Iterator<Item = Point> {
    const RINGS: usize = 8;
    const SPOKES: usize = 48;
    (1..=RINGS).flat_map(move |k| {
        let rho = radius * k as f64 / RINGS as f64;
        let phase = if k % 2 == 0 { 0.5 } else { 0.0 };
        (0..SPOKES).map(move |j| {
            let th = std::f64::consts::TAU * (j as f64 + phase) / SPOKES as f64;
            center + Point::polar(th) * rho
        })
    })
}

/// Largest `ε = start·2^-k` such that probes of `B(q, ε)` lying on `side`
/// of the curve are all inside `disk` (up to the curve tolerance).
fn inclusion_epsilon(
    curve: &JordanCurve,
    q: Point,
    disk: &Disk,
    side: Side,
    start: f64,
) -> Option<f64> {
    let loc = side.location();
    let mut eps = start;
    for _ in 0..=HALVINGS {
        let ok = probes(q, eps).all(|p| {
            p.dist(disk.center) < disk.radius + curve.eps() || curve.point_location(p) != loc
        });
        if ok {
            return Some(eps);
        }
        eps *= 0.5;
    }
    None
}

/// The explicit disk of radius `r` tangent at `x` on the interior side.
pub fn unit_disk_at(curve: &JordanCurve, x: CurvePoint, r: f64) -> Result<WitnessDisk> {
    check_bound(r)?;
    curve.require_positive()?;
    let x = curve.normalize(x);
    let n = curve.len();
    let piece = &curve.pieces()[x.piece_index];
    let mut touching = vec![x.piece_index];
    let at_junction = x.t == 0.0;
    let prev = (x.piece_index + n - 1) % n;
    let dir = if at_junction {
        touching.push(prev);
        let turn = junction_turn(curve, prev);
        if turn > SMOOTH_TURN_TOL {
            return Err(GeomError::LocalViolation);
        }
        for idx in [prev, x.piece_index] {
            if let Piece::Arc(a) = &curve.pieces()[idx] {
                if a.ccw && too_sharp(a.radius, r) && turn >= -SMOOTH_TURN_TOL {
                    return Err(GeomError::LocalViolation);
                }
            }
        }
        corner_bisector(curve, prev)
    } else {
        if let Piece::Arc(a) = piece {
            if a.ccw && too_sharp(a.radius, r) {
                return Err(GeomError::LocalViolation);
            }
        }
        piece.left_normal_at(x.t)
    };
    let disk = Disk::new(x.coords + dir * r, r)?;
    let clearance = curve
        .pieces()
        .iter()
        .enumerate()
        .filter(|(i, _)| !touching.contains(i))
        .map(|(_, p)| closest_point(x.coords, p).1)
        .fold(f64::INFINITY, f64::min);
    let mut eps = (0.5 * clearance).min(r);
    for _ in 0..=HALVINGS {
        let ok = probes(x.coords, eps)
            .filter(|p| disk.contains(*p))
            .all(|p| curve.point_location(p) != Location::Exterior);
        if ok {
            return Ok(WitnessDisk {
                at: x,
                disk,
                epsilon: eps,
            });
        }
        eps *= 0.5;
    }
    Err(GeomError::NumericalInconsistency(
        "tangent disk probes never confirmed interior inclusion".into(),
    ))
}

/// Checks both conditions of the non-curvature lemma for `(q, disk)`.
///
/// Condition (i) is probed on shrinking neighborhoods of `q`. Condition (ii)
/// asks for a curve point strictly inside `disk` within `η` of `q`, for
/// `η = 1e-2, …, 1e-6`.
pub fn verify_lemma3(curve: &JordanCurve, q: CurvePoint, disk: &Disk) -> bool {
    if (q.coords.dist(disk.center) - disk.radius).abs() > CONTACT_EPS {
        return false;
    }
    let start = start_scale(curve, disk.radius);
    if inclusion_epsilon(curve, q.coords, disk, Side::Interior, start).is_none() {
        return false;
    }
    [1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
        .iter()
        .all(|&eta| enters_near(curve, q.coords, disk, eta))
}

/// Whether some curve point within `eta` of `q` lies strictly inside `disk`.
fn enters_near(curve: &JordanCurve, q: Point, disk: &Disk, eta: f64) -> bool {
    let ball = Disk {
        center: q,
        radius: eta,
    };
    let margin = 64.0 * f64::EPSILON * (1.0f64).max(disk.radius + disk.center.norm());
    for piece in curve.pieces() {
        let mut ts = vec![0.0, 1.0];
        ts.extend(piece_circle_intersection(piece, &ball, 0.0).points.iter().map(|h| h.t));
        ts.sort_by(f64::total_cmp);
        for w in ts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if t1 - t0 <= 0.0 || piece.point_at(0.5 * (t0 + t1)).dist(q) >= eta {
                continue;
            }
            let (_, d) = closest_point(disk.center, &piece.sub(t0, t1));
            if d < disk.radius - margin {
                return true;
            }
        }
    }
    false
}

fn on_circle(p: Point, d: &Disk, tol: f64) -> bool {
    (p.dist(d.center) - d.radius).abs() <= tol
}

/// Checks that `γ[a,b]` meets the closed disk only at its endpoints.
fn touches_only_at_ends(iv: &CurveInterval, d: &Disk, tol: f64) -> bool {
    let (a, b) = (iv.start.coords, iv.end.coords);
    for piece in &iv.pieces {
        let hits = piece_circle_intersection(piece, d, tol);
        if !hits.overlaps.is_empty() {
            return false;
        }
        if hits
            .points
            .iter()
            .any(|h| h.point.dist(a) > tol && h.point.dist(b) > tol)
        {
            return false;
        }
    }
    // With no interior crossing the open interval is entirely in or out.
    let mid = &iv.pieces[iv.pieces.len() / 2];
    let probe = if iv.pieces.len() == 1 { mid.point_at(0.5) } else { mid.midpoint() };
    probe.dist(d.center) > d.radius
}

/// Whether the closed curve `γ[a,b] ∪ ∂D[a,b]` leaves `D` outside.
pub fn winds_positively(curve: &JordanCurve, a: CurvePoint, b: CurvePoint, d: &Disk) -> Result<bool> {
    if !on_circle(a.coords, d, CONTACT_EPS) || !on_circle(b.coords, d, CONTACT_EPS) {
        return Err(GeomError::PreconditionFailed("a and b must lie on the disk boundary".into()));
    }
    let iv = curve.subcurve(a, b)?;
    if !touches_only_at_ends(&iv, d, CONTACT_EPS) {
        return Err(GeomError::PreconditionFailed(
            "interval must meet the closed disk only at its endpoints".into(),
        ));
    }
    let ta = (iv.start.coords - d.center).angle();
    let tb = (iv.end.coords - d.center).angle();
    let cap = Arc::new(d.center, d.radius, tb, ta, false);
    let j = crate::curve::splice_with_tolerance(&iv, cap, CONTACT_EPS)?;
    Ok(j.winding_number(d.center)? == 0)
}

fn farthest_on(iv: &CurveInterval, c: Point) -> f64 {
    iv.farthest_point(c).1
}

/// Runs the covering-disk construction on an interval that wraps positively
/// around `small` while staying inside `containing`, producing a witness
/// against bounded convex curvature (with `R = radius(containing)`).
pub fn find_violation_witness(
    curve: &JordanCurve,
    a: CurvePoint,
    b: CurvePoint,
    small: &Disk,
    containing: &Disk,
) -> Result<ViolationWitness> {
    let fail = |s: &str| Err(GeomError::PreconditionFailed(s.to_string()));
    if curve.orientation() != Orientation::Positive {
        return fail("curve must be positively oriented");
    }
    if a.coords.dist(b.coords) <= curve.eps() {
        return fail("a and b must be distinct");
    }
    let big_r = containing.radius;
    if small.radius > big_r * (1.0 + RADIUS_REL_TOL) {
        return fail("radius of the small disk must not exceed the containing radius");
    }
    let iv = curve.subcurve(a, b)?;
    if farthest_on(&iv, containing.center) >= big_r {
        return fail("interval must lie inside the containing disk");
    }
    if !on_circle(a.coords, small, CONTACT_EPS)
        || !on_circle(b.coords, small, CONTACT_EPS)
        || !touches_only_at_ends(&iv, small, CONTACT_EPS)
    {
        return fail("interval must meet the closed small disk exactly at a and b");
    }
    if !winds_positively(curve, a, b, small)? {
        return fail("curve must wind positively around the small disk from a to b");
    }

    let origin = small.center;
    let e1 = (a.coords - b.coords).normalized();
    let e2 = e1.perp();
    let rel = containing.center - origin;
    let (s1, t1) = (rel.dot(e1), rel.dot(e2));
    let scale = 1.0 + origin.norm() + big_r;
    let tol = 1e-12 * scale;
    // The slack only admits the starting disk; the bisection itself is exact
    // so that the final disk does not overshoot the curve by the slack.
    let covers_loose = |c: Point| farthest_on(&iv, c) <= big_r + tol;
    let covers = |c: Point| farthest_on(&iv, c) <= big_r;
    let t0 = (a.coords - origin).dot(e2);

    let at = |s: f64, t: f64| origin + e1 * s + e2 * t;
    let center = if covers_loose(at(0.0, t1)) {
        // Slide down the symmetry axis to the lowest covering position.
        let (mut lo, mut hi) = (t0 - big_r - small.radius, t1);
        if covers(at(0.0, lo)) {
            return Err(GeomError::CoverageInfeasible);
        }
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if covers(at(0.0, mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        at(0.0, hi)
    } else {
        // Slide sideways toward the axis, staying on the far side.
        if !covers_loose(at(s1, t1)) {
            return Err(GeomError::CoverageInfeasible);
        }
        let (mut lo, mut hi) = (0.0, s1);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if covers(at(mid, t1)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        at(hi, t1)
    };
    let disk = Disk::new(center, big_r)?;
    let q = touching_point(curve, &iv, &disk)?;
    let start = start_scale(curve, big_r);
    let epsilon = inclusion_epsilon(curve, q.coords, &disk, Side::Interior, start).unwrap_or(0.0);
    Ok(ViolationWitness {
        q,
        disk,
        epsilon,
        kind: ViolationKind::CoveringConstruction,
    })
}

/// Smallest-parameter point of the open interval on the boundary of `disk`.
fn touching_point(curve: &JordanCurve, iv: &CurveInterval, disk: &Disk) -> Result<CurvePoint> {
    let (a, b) = (iv.start, iv.end);
    let mut cands: Vec<(f64, CurvePoint, f64)> = Vec::new();
    for (piece, &(i, t0, t1)) in iv.pieces.iter().zip(&iv.sources) {
        let (pp, d) = crate::kernel::piece_farthest_point(disk.center, piece);
        let cp = CurvePoint {
            piece_index: i,
            t: t0 + pp.t * (t1 - t0),
            coords: pp.point,
        };
        cands.push((curve.param_offset(a.param(), cp.param()), cp, d));
    }
    let dmax = cands.iter().map(|c| c.2).fold(f64::NEG_INFINITY, f64::max);
    let tol = 1e-9 * (1.0 + disk.radius);
    cands
        .into_iter()
        .filter(|c| c.2 >= dmax - tol)
        .filter(|c| c.1.coords.dist(a.coords) > CONTACT_EPS && c.1.coords.dist(b.coords) > CONTACT_EPS)
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .map(|c| c.1)
        .ok_or_else(|| {
            GeomError::NumericalInconsistency("covering disk touches only the interval ends".into())
        })
}
