//! Random curve generators shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use bccurve::compose::compose;
use bccurve::curvature::check_bounded_convex_curvature;
use bccurve::kernel::Point;
use bccurve::shapes;
use bccurve::toolpath::{round_corners, ConcaveMode, ToolpathSpec};
use bccurve::JordanCurve;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Union boundary of 2 to 6 unit circles, each overlapping an earlier one.
/// Draws that produce holes or tangencies are redrawn.
pub fn random_composition(rng: &mut impl Rng) -> JordanCurve {
    loop {
        let k = rng.gen_range(2..=6);
        let mut centers = vec![Point::new(0.0, 0.0)];
        let mut acc = shapes::circle(centers[0], 1.0);
        let mut ok = true;
        for _ in 1..k {
            let base = centers[rng.gen_range(0..centers.len())];
            let c = base + Point::polar(rng.gen_range(0.0..2.0 * PI)) * rng.gen_range(0.5..1.7);
            match compose(&acc, &shapes::circle(c, 1.0)) {
                Ok(next) => {
                    acc = next;
                    centers.push(c);
                }
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && check_bounded_convex_curvature(&acc, 1.0).is_ok_and(|r| r.ok) {
            return acc;
        }
    }
}

/// Star polygon with its convex corners filleted at radius 1; the reflex
/// corners stay sharp.
pub fn random_rounded_star(rng: &mut impl Rng) -> JordanCurve {
    loop {
        let points = rng.gen_range(3..=7);
        let outer: f64 = rng.gen_range(4.0..8.0);
        let inner = rng.gen_range(3.0..outer.min(6.0));
        let Ok(star) = shapes::star(points, outer, inner) else { continue };
        let spec = ToolpathSpec {
            tool_radius: 1.0,
            round_radius: 1.0,
            concave_mode: ConcaveMode::Roll,
        };
        if let Ok(c) = round_corners(&star, &spec) {
            if check_bounded_convex_curvature(&c, 1.0).is_ok_and(|r| r.ok) {
                return c;
            }
        }
    }
}

/// Random simple polygon: a star-shaped vertex fan around the origin.
pub fn random_polygon(rng: &mut impl Rng) -> JordanCurve {
    loop {
        let n = rng.gen_range(3..=9);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = angles
            .windows(2)
            .all(|w| w[1] - w[0] > 0.3)
            && angles[0] + 2.0 * PI - angles[n - 1] > 0.3
            && angles.windows(2).all(|w| w[1] - w[0] < PI - 0.2)
            && angles[0] + 2.0 * PI - angles[n - 1] < PI - 0.2;
        if !gaps_ok {
            continue;
        }
        let verts: Vec<Point> = angles
            .iter()
            .map(|&a| Point::polar(a) * rng.gen_range(5.0..9.0))
            .collect();
        if let Ok(p) = shapes::polygon(&verts) {
            return p;
        }
    }
}

/// The mixed suite of bounded convex curvature curves used by the chain tests.
pub fn suite(seed: u64, count: usize) -> Vec<JordanCurve> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_composition(&mut r)
            } else {
                random_rounded_star(&mut r)
            }
        })
        .collect()
}

/// A uniformly random point of the interior, by rejection from the bounding box.
pub fn interior_point(curve: &JordanCurve, rng: &mut impl Rng) -> Point {
    let (lo, hi) = curve.bbox();
    loop {
        let p = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if curve.is_interior(p) {
            return p;
        }
    }
}

pub fn load_asset(name: &str) -> JordanCurve {
    let path = format!("{}/../../assets/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    bccurve::io::curve_from_str(&text, bccurve::EPS).expect("asset parses")
}

/// Two disks of radius 1.5 to 2.5 joined by a straight corridor narrower
/// than 2, so tangent disks grown from the corridor walls stay small.
pub fn random_dumbbell(rng: &mut impl Rng) -> JordanCurve {
    loop {
        let r1 = rng.gen_range(1.5..2.5);
        let r2 = rng.gen_range(1.5..2.5);
        let half = rng.gen_range(2.5..5.0);
        let w = rng.gen_range(0.4..1.6);
        let left = shapes::circle(Point::new(-half, 0.0), r1);
        let right = shapes::circle(Point::new(half, 0.0), r2);
        let Ok(bar) = shapes::polygon(&[
            Point::new(-half, -0.5 * w),
            Point::new(half, -0.5 * w),
            Point::new(half, 0.5 * w),
            Point::new(-half, 0.5 * w),
        ]) else { continue };
        let Ok(c) = compose(&left, &bar).and_then(|c| compose(&c, &right)) else { continue };
        if check_bounded_convex_curvature(&c, 1.0).is_ok_and(|r| r.ok) {
            return c;
        }
    }
}

/// A random boundary point, uniform in piece index and parameter.
pub fn random_boundary_point(curve: &JordanCurve, rng: &mut impl Rng) -> bccurve::CurvePoint {
    curve.point(rng.gen_range(0..curve.len()), rng.gen_range(0.0..1.0))
}

/// A circular band of width `w < 2` around the origin, running
/// counterclockwise from angle `a` to angle `b`, with a disk of radius
/// `bulb` at each end. Most tangent disks grown from the band walls are
/// smaller than 1, so the disk chain has to walk along the band.
pub fn hook(mid_radius: f64, w: f64, a: f64, b: f64, bulb: f64) -> bccurve::Result<JordanCurve> {
    use bccurve::{Arc, Piece};
    let o = Point::new(0.0, 0.0);
    let (ro, ri, h) = (mid_radius + 0.5 * w, mid_radius - 0.5 * w, 0.5 * w);
    let band = JordanCurve::new(vec![
        Piece::Arc(Arc::new(o, ro, a, b, true)),
        Piece::Arc(Arc::new(Point::polar(b) * mid_radius, h, b, b + PI, true)),
        Piece::Arc(Arc::new(o, ri, b, a, false)),
        Piece::Arc(Arc::new(Point::polar(a) * mid_radius, h, a + PI, a + 2.0 * PI, true)),
    ])?;
    let with_a = compose(&band, &shapes::circle(Point::polar(a) * mid_radius, bulb))?;
    compose(&with_a, &shapes::circle(Point::polar(b) * mid_radius, bulb))
}

/// Random [`hook`] with a band narrow enough to force several chain steps.
pub fn random_hook(rng: &mut impl Rng) -> JordanCurve {
    loop {
        let mid = rng.gen_range(2.5..4.0);
        let w = rng.gen_range(0.8..1.6);
        let a = rng.gen_range(-PI..0.0);
        let span = rng.gen_range(PI..1.6 * PI);
        let bulb = rng.gen_range(1.1..1.5);
        if let Ok(c) = hook(mid, w, a, a + span, bulb) {
            if check_bounded_convex_curvature(&c, 1.0).is_ok_and(|r| r.ok) {
                return c;
            }
        }
    }
}

/// Hooks with seeds on the band walls near the bulbs; the chain from these
/// seeds takes two steps before reaching a unit disk.
pub fn two_step_cases() -> Vec<(JordanCurve, bccurve::CurvePoint)> {
    let mut out = Vec::new();
    for (mid, w, span) in [(3.0, 1.0, 1.7), (4.0, 1.2, 1.5)] {
        let c = hook(mid, w, -0.5 * PI, (span - 0.5) * PI, 1.2).expect("hook composes");
        for (i, t) in [(1, 0.1), (1, 0.9), (3, 0.1), (3, 0.9)] {
            out.push((c.clone(), c.point(i, t)));
        }
    }
    out
}

/// Thin stadium of cap radius `cap` with a disk of the same radius touching
/// both long sides at `x0`. The part of the curve around the right cap fits
/// in a unit disk, so the setup violates bounded convex curvature. Returns
/// the curve, the interval ends, the touching disk and the unit disk.
pub fn violating_setup(
    half_len: f64,
    cap: f64,
    x0: f64,
) -> (JordanCurve, bccurve::CurvePoint, bccurve::CurvePoint, bccurve::Disk, bccurve::Disk) {
    let c = shapes::stadium_with(half_len, cap);
    let u = (x0 + half_len) / (2.0 * half_len);
    let a = c.point(0, u);
    let b = c.point(2, 1.0 - u);
    let small = bccurve::Disk::new(Point::new(x0, 0.0), cap).unwrap();
    let big = bccurve::Disk::new(Point::new(0.5 * (x0 + half_len + cap), 0.0), 1.0).unwrap();
    (c, a, b, small, big)
}

/// Ten `(half_len, cap, position)` choices for [`violating_setup`]; the
/// touching disk sits at `-half_len + position·2·half_len`.
pub const VIOLATING_CONFIGS: [(f64, f64, f64); 10] = [
    (0.1, 0.3, 0.5),
    (0.2, 0.3, 0.2),
    (0.3, 0.4, 0.5),
    (0.4, 0.35, 0.1),
    (0.15, 0.5, 0.9),
    (0.25, 0.45, 0.3),
    (0.35, 0.25, 0.6),
    (0.05, 0.55, 0.5),
    (0.3, 0.5, 0.0),
    (0.2, 0.6, 0.4),
];

/// Two overlapping compositions whose union is simply connected, and that union.
pub fn random_pair(rng: &mut impl Rng) -> (JordanCurve, JordanCurve, JordanCurve) {
    loop {
        let a = random_composition(rng);
        let b = random_composition(rng);
        let shift = Point::polar(rng.gen_range(0.0..2.0 * PI)) * rng.gen_range(0.5..2.5);
        let Ok(b) = b.scaled(1.0, shift) else { continue };
        if let Ok(c) = compose(&a, &b) {
            return (a, b, c);
        }
    }
}

/// Up to `count` uniform interior samples of a curve, by rejection.
pub fn sample_interior(region: &JordanCurve, count: usize, rng: &mut impl Rng) -> Vec<Point> {
    let (lo, hi) = region.bbox();
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count && tries < 200 * count {
        tries += 1;
        let p = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if region.point_location(p) == bccurve::Location::Interior {
            out.push(p);
        }
    }
    out
}
