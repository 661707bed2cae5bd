//! Clearance, largest inscribed disks and largest disks tangent at a boundary point.

use crate::curve::{CurvePoint, JordanCurve, Location};
use crate::error::{GeomError, Result};
use crate::kernel::{closest_point, Disk, Piece, Point, CONTACT_EPS};

const BISECTION_STEPS: usize = 80;

/// A disk together with the boundary points it touches.
#[derive(Clone, Debug, PartialEq)]
pub struct TouchingDisk {
    pub disk: Disk,
    pub contacts: Vec<CurvePoint>,
}

/// Radius of the largest open disk centered at `x` inside the curve; zero outside.
pub fn clearance(curve: &JordanCurve, x: Point) -> f64 {
    match curve.point_location(x) {
        Location::Interior => curve.distance(x),
        _ => 0.0,
    }
}

/// Area enclosed by the curve (negative for clockwise curves).
pub fn interior_area(curve: &JordanCurve) -> f64 {
    curve.signed_area()
}

/// Points of the curve within `tol` of the circle `∂disk`, one per touching
/// stretch, in parameter order.
pub fn contact_points(curve: &JordanCurve, disk: &Disk, tol: f64) -> Vec<CurvePoint> {
    contact_spans(curve, disk, tol, None)
        .into_iter()
        .map(|s| s.first)
        .collect()
}

/// A maximal run of contact: a single point, or a stretch of an arc lying on the circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct ContactSpan {
    pub first: CurvePoint,
    pub last: CurvePoint,
}

/// Contact spans sorted by parameter, with neighbors that coincide merged.
///
/// On an arc concentric with the disk the whole arc is in contact; such an
/// arc is reported as one span (and as its point farthest from `anchor`, if
/// given, by [`contact_points`]).
pub(crate) fn contact_spans(
    curve: &JordanCurve,
    disk: &Disk,
    tol: f64,
    anchor: Option<Point>,
) -> Vec<ContactSpan> {
    let c = disk.center;
    let mut spans: Vec<ContactSpan> = Vec::new();
    for (i, piece) in curve.pieces().iter().enumerate() {
        if let Piece::Arc(a) = piece {
            if a.center.dist(c) <= tol && (a.radius - disk.radius).abs() <= tol {
                let first = curve.point(i, 0.0);
                let last = curve.point(i, 1.0);
                let mut s = ContactSpan { first, last };
                if let Some(z) = anchor {
                    let (pp, _) = crate::kernel::piece_farthest_point(z, piece);
                    s.first = curve.point(i, pp.t);
                    s.last = s.first;
                }
                spans.push(s);
                continue;
            }
        }
        let (pp, d) = closest_point(c, piece);
        let mut ts = vec![(pp.t, d)];
        for t in [0.0, 1.0] {
            let p = piece.point_at(t);
            ts.push((t, p.dist(c)));
        }
        for (t, d) in ts {
            if (d - disk.radius).abs() <= tol {
                let cp = curve.normalize(curve.point(i, t));
                spans.push(ContactSpan { first: cp, last: cp });
            }
        }
    }
    spans.sort_by(|a, b| a.first.param().total_cmp(&b.first.param()));
    let merge_tol = 1e-6 * disk.radius.max(1.0);
    let mut out: Vec<ContactSpan> = Vec::new();
    for s in spans {
        match out.last_mut() {
            Some(prev) if prev.last.coords.dist(s.first.coords) <= merge_tol => {
                if s.last.param() > prev.last.param() {
                    prev.last = s.last;
                }
            }
            _ => out.push(s),
        }
    }
    if out.len() > 1 {
        let (head, tail) = (out[0], out[out.len() - 1]);
        if tail.last.coords.dist(head.first.coords) <= merge_tol {
            out[0].first = tail.first;
            out.pop();
        }
    }
    out
}

/// Largest disk tangent to `witness` at the boundary point `z` (center on the
/// normal ray toward `witness`'s center) that fits inside `region`.
///
/// Cotangent disks at `z` are nested, so the feasible radii form an interval
/// and bisection applies.
pub fn max_tangent_disk(region: &JordanCurve, z: CurvePoint, witness: &Disk) -> Result<TouchingDisk> {
    let zc = z.coords;
    if region.distance(zc) > region.eps().max(CONTACT_EPS) {
        return Err(GeomError::BadTangentData("z is not on the boundary".into()));
    }
    if (zc.dist(witness.center) - witness.radius).abs() > CONTACT_EPS * witness.radius.max(1.0) {
        return Err(GeomError::BadTangentData("z is not on the boundary of the tangent disk".into()));
    }
    let n = (witness.center - zc).normalized();
    let (lo_corner, hi_corner) = region.bbox();
    let span = hi_corner - lo_corner;
    let mut hi = 0.5 * span.x.min(span.y);
    let feasible = |s: f64| {
        let c = zc + n * s;
        let tol = 1e-12 * (1.0 + s + c.norm());
        region
            .pieces()
            .iter()
            .all(|p| closest_point(c, p).1 >= s - tol)
    };
    let mut lo = hi * 2f64.powi(-40);
    if !feasible(lo) {
        return Err(GeomError::BadTangentData(
            "no small tangent disk fits inside the region at z".into(),
        ));
    }
    if feasible(hi) {
        lo = hi;
    } else {
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let disk = Disk::new(zc + n * lo, lo)?;
    if region.point_location(disk.center) != Location::Interior {
        return Err(GeomError::BadTangentData(
            "the tangent disk lies on the exterior side at z".into(),
        ));
    }
    let contacts = contact_points_anchored(region, &disk, zc);
    let far = 1e-6 * lo.max(1.0);
    if !contacts.iter().any(|p| p.coords.dist(zc) > far) {
        return Err(GeomError::NumericalInconsistency(
            "maximal tangent disk touches the boundary only at z".into(),
        ));
    }
    Ok(TouchingDisk { disk, contacts })
}

fn contact_points_anchored(curve: &JordanCurve, disk: &Disk, anchor: Point) -> Vec<CurvePoint> {
    contact_spans(curve, disk, CONTACT_EPS, Some(anchor))
        .into_iter()
        .map(|s| s.first)
        .collect()
}

const SEED_GRID: usize = 48;
const SEED_COUNT: usize = 8;

/// Largest open disk inside the curve.
///
/// Candidate centers come from the best separated points of a coarse grid of
/// the clearance function. Each is refined by a trust-region sequential
/// linear program on the linearized distances to nearby pieces; a step is
/// kept only if the true clearance improves.
pub fn max_inscribed_disk(curve: &JordanCurve) -> Result<TouchingDisk> {
    let (lo, hi) = curve.bbox();
    let span = hi - lo;
    let cell = span.x.max(span.y) / SEED_GRID as f64;
    let mut samples: Vec<(f64, Point)> = Vec::new();
    for i in 0..SEED_GRID {
        for j in 0..SEED_GRID {
            let p = Point::new(
                lo.x + (i as f64 + 0.5) * span.x / SEED_GRID as f64,
                lo.y + (j as f64 + 0.5) * span.y / SEED_GRID as f64,
            );
            let f = clearance(curve, p);
            if f > 0.0 {
                samples.push((f, p));
            }
        }
    }
    if samples.is_empty() {
        // Very thin shapes can slip between grid points; fall back to piece midpoints nudged inward.
        for piece in curve.pieces() {
            let m = piece.point_at(0.5);
            let nrm = piece.left_normal_at(0.5);
            for k in 1..20 {
                let p = m + nrm * (piece.length() * 2f64.powi(-k));
                let f = clearance(curve, p);
                if f > 0.0 {
                    samples.push((f, p));
                    break;
                }
            }
        }
    }
    if samples.is_empty() {
        return Err(GeomError::DegenerateCurve);
    }
    samples.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut seeds: Vec<Point> = Vec::new();
    for &(_, p) in &samples {
        if seeds.iter().all(|s| s.dist(p) >= 2.0 * cell) {
            seeds.push(p);
            if seeds.len() == SEED_COUNT {
                break;
            }
        }
    }
    let scale = 1.0 + span.x.max(span.y) + lo.norm().max(hi.norm());
    let mut best = (0.0, seeds[0]);
    for s in seeds {
        let (f, p) = refine(curve, s, cell, scale);
        if f > best.0 {
            best = (f, p);
        }
    }
    let disk = Disk::new(best.1, best.0)?;
    let contacts = contact_points(curve, &disk, CONTACT_EPS);
    Ok(TouchingDisk { disk, contacts })
}

/// Linearized distance constraint `d + g·h`.
#[derive(Clone, Copy)]
struct Plane {
    d: f64,
    g: Point,
}

fn refine(curve: &JordanCurve, start: Point, cell: f64, scale: f64) -> (f64, Point) {
    let mut x = start;
    let mut f = clearance(curve, x);
    let mut radius = cell;
    let floor = 1e-14 * scale;
    for _ in 0..500 {
        if radius < floor {
            break;
        }
        let reach = f + 3.0 * radius;
        let planes: Vec<Plane> = curve
            .pieces()
            .iter()
            .filter_map(|p| {
                let (pp, d) = closest_point(x, p);
                (d <= reach && d > 0.0).then(|| Plane {
                    d,
                    g: (x - pp.point) / d,
                })
            })
            .collect();
        if planes.is_empty() {
            break;
        }
        let h = best_step(&planes, radius);
        let y = x + h;
        let fy = clearance(curve, y);
        if fy > f {
            x = y;
            f = fy;
            if h.x.abs().max(h.y.abs()) >= 0.99 * radius {
                radius *= 2.0;
            }
        } else {
            radius *= 0.5;
        }
    }
    (f, x)
}

fn lower_envelope(planes: &[Plane], h: Point) -> f64 {
    planes
        .iter()
        .map(|p| p.d + p.g.dot(h))
        .fold(f64::INFINITY, f64::min)
}

/// Maximizes the lower envelope of the planes over the box `|h|∞ ≤ r` by
/// evaluating every vertex of the arrangement inside the box.
fn best_step(planes: &[Plane], r: f64) -> Point {
    let mut cands = vec![
        Point::new(r, r),
        Point::new(r, -r),
        Point::new(-r, r),
        Point::new(-r, -r),
        Point::ORIGIN,
    ];
    let k = planes.len();
    for i in 0..k {
        for j in i + 1..k {
            // (g_i − g_j)·h = d_j − d_i on each box edge.
            let a = planes[i].g - planes[j].g;
            let rhs = planes[j].d - planes[i].d;
            for fixed in [-r, r] {
                if a.y.abs() > 1e-15 {
                    cands.push(Point::new(fixed, (rhs - a.x * fixed) / a.y));
                }
                if a.x.abs() > 1e-15 {
                    cands.push(Point::new((rhs - a.y * fixed) / a.x, fixed));
                }
            }
            for l in j + 1..k {
                let b = planes[i].g - planes[l].g;
                let rhs2 = planes[l].d - planes[i].d;
                let det = a.cross(b);
                if det.abs() > 1e-15 {
                    cands.push(Point::new(
                        (rhs * b.y - rhs2 * a.y) / det,
                        (a.x * rhs2 - b.x * rhs) / det,
                    ));
                }
            }
        }
    }
    let slack = r * (1.0 + 1e-12);
    cands
        .into_iter()
        .filter(|h| h.x.abs() <= slack && h.y.abs() <= slack && h.is_finite())
        .max_by(|a, b| lower_envelope(planes, *a).total_cmp(&lower_envelope(planes, *b)))
        .unwrap_or(Point::ORIGIN)
}
