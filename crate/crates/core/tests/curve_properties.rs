mod common;

use std::f64::consts::PI;

use bccurve::kernel::Point;
use bccurve::{Disk, JordanCurve, Location};
use proptest::prelude::*;
use rand::Rng;

fn any_curve(seed: u64) -> JordanCurve {
    let mut r = common::rng(seed);
    match seed % 4 {
        0 => common::random_composition(&mut r),
        1 => common::random_rounded_star(&mut r),
        2 => common::random_polygon(&mut r),
        _ => common::random_hook(&mut r),
    }
}

fn bounding_radius(c: &JordanCurve) -> f64 {
    let (lo, hi) = c.bbox();
    [lo, hi, Point::new(lo.x, hi.y), Point::new(hi.x, lo.y)]
        .iter()
        .map(|p| p.norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn winding_is_one_inside_and_zero_outside(seed in any::<u64>()) {
        let c = any_curve(seed);
        let mut r = common::rng(seed ^ 0x5eed);
        let (lo, hi) = c.bbox();
        let mut seen = [0usize; 2];
        for _ in 0..200 {
            let p = Point::new(r.gen_range(lo.x - 1.0..hi.x + 1.0), r.gen_range(lo.y - 1.0..hi.y + 1.0));
            if c.distance(p) < 1e-6 {
                continue;
            }
            let w = c.winding_number(p).unwrap();
            prop_assert!(w == 0 || w == 1, "winding {w}");
            seen[w as usize] += 1;
        }
        prop_assert!(seen[0] > 0 && seen[1] > 0);
        let far = bounding_radius(&c) + 1.0;
        for k in 0..16 {
            let p = Point::polar(k as f64 * PI / 8.0) * far;
            prop_assert_eq!(c.winding_number(p).unwrap(), 0);
        }
    }

    #[test]
    fn winding_is_constant_along_curve_free_paths(seed in any::<u64>()) {
        let c = any_curve(seed);
        let mut r = common::rng(seed ^ 0xface);
        let (lo, hi) = c.bbox();
        let mut pairs = 0;
        while pairs < 100 {
            let p = Point::new(r.gen_range(lo.x - 1.0..hi.x + 1.0), r.gen_range(lo.y - 1.0..hi.y + 1.0));
            let q = p + Point::polar(r.gen_range(0.0..2.0 * PI)) * r.gen_range(0.1..2.0);
            let path = bccurve::Piece::segment(p, q);
            let clear = c.pieces().iter().all(|piece| {
                bccurve::kernel::piece_piece_distance(piece, &path, bccurve::EPS) > 1e-6
            });
            if !clear {
                continue;
            }
            pairs += 1;
            prop_assert_eq!(c.winding_number(p).unwrap(), c.winding_number(q).unwrap());
        }
    }

    #[test]
    fn subcurves_partition_the_curve(seed in any::<u64>(), u in 0.0f64..1.0, v in 0.0f64..1.0) {
        let c = any_curve(seed);
        let n = c.len() as f64;
        let a = c.point_at_param(u * n);
        let b = c.point_at_param(v * n);
        prop_assume!(a.coords.dist(b.coords) > 1e-3);
        let ab = c.subcurve(a, b).unwrap();
        let ba = c.subcurve(b, a).unwrap();
        prop_assert!((ab.length() + ba.length() - c.length()).abs() < 1e-9 * (1.0 + c.length()));
        // Walk every piece parameter on a fine grid: each is covered by exactly one side.
        let span = |sources: &[(usize, f64, f64)], i: usize, t: f64| {
            sources.iter().filter(|&&(k, t0, t1)| k == i && t0 < t && t < t1).count()
        };
        for i in 0..c.len() {
            for k in 1..50 {
                let t = k as f64 / 50.0;
                let hits = span(&ab.sources, i, t) + span(&ba.sources, i, t);
                let on_cut = [a, b].iter().any(|e| e.piece_index == i && (e.t - t).abs() < 1e-12);
                prop_assert!(hits == 1 || on_cut, "piece {i} t {t} covered {hits} times");
            }
        }
        for piece in &ab.pieces {
            for k in 0..=8 {
                prop_assert!(c.distance(piece.point_at(k as f64 / 8.0)) < 1e-9);
            }
        }
    }

    #[test]
    fn alpha_halves_split_the_disk(seed in any::<u64>(), u in 0.0f64..1.0, rad in 0.05f64..0.6) {
        let c = any_curve(seed);
        let p = c.point_at_param(u * c.len() as f64);
        let disk = Disk::new(p.coords, rad).unwrap();
        let Ok(dec) = c.alpha_decomposition(p, disk) else {
            return Ok(());
        };
        for i in 0..50 {
            for j in 0..50 {
                let q = p.coords + Point::new(
                    rad * (2.0 * (i as f64 + 0.5) / 50.0 - 1.0),
                    rad * (2.0 * (j as f64 + 0.5) / 50.0 - 1.0),
                );
                if q.dist(p.coords) > rad - 1e-6 || c.distance(q) < 1e-6 {
                    continue;
                }
                let plus = dec.plus.point_location(q) == Location::Interior;
                let minus = dec.minus.point_location(q) == Location::Interior;
                prop_assert!(plus != minus, "probe {q:?} in plus={plus} minus={minus}");
            }
        }
    }
}

#[test]
fn far_points_have_zero_winding_on_assets() {
    for name in ["circle_r1", "stadium", "rounded_square", "blob", "l_pocket", "two_disks"] {
        let c = common::load_asset(name);
        let far = bounding_radius(&c) + 1.0;
        assert_eq!(c.winding_number(Point::new(far, far)).unwrap(), 0, "{name}");
    }
}
