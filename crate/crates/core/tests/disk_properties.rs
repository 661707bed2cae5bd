mod common;

use bccurve::chain::{find_unit_disk_with, step_region, verify_certificate, ChainOptions, DiskChainCertificate};
use bccurve::disks::{clearance, contact_points, interior_area, max_inscribed_disk};
use bccurve::oracle::{grid_inscribed_disk, rasterize};
use bccurve::{JordanCurve, Location, Piece, CONTACT_EPS};

#[test]
fn clearance_is_one_lipschitz() {
    let mut r = common::rng(11);
    let curves: Vec<JordanCurve> = (0..10)
        .map(|i| match i % 3 {
            0 => common::random_composition(&mut r),
            1 => common::random_polygon(&mut r),
            _ => common::random_hook(&mut r),
        })
        .collect();
    for k in 0..1000 {
        let c = &curves[k % curves.len()];
        let x = common::interior_point(c, &mut r);
        let y = common::interior_point(c, &mut r);
        let (fx, fy) = (clearance(c, x), clearance(c, y));
        assert!((fx - fy).abs() <= x.dist(y) + 1e-9, "pair {k}: {x:?} {y:?}");
    }
}

#[test]
fn inscribed_disk_agrees_with_grid_oracle() {
    let mut r = common::rng(12);
    for i in 0..50 {
        let c = match i % 4 {
            0 => common::random_composition(&mut r),
            1 => common::random_polygon(&mut r),
            2 => common::random_rounded_star(&mut r),
            _ => common::random_hook(&mut r),
        };
        let (lo, hi) = c.bbox();
        let res = (hi.x - lo.x).max(hi.y - lo.y) / 150.0;
        let exact = max_inscribed_disk(&c).unwrap().disk;
        let grid = grid_inscribed_disk(&rasterize(&c, res).unwrap()).unwrap();
        assert!(
            (exact.radius - grid.radius).abs() <= res,
            "curve {i}: exact {} grid {} res {res}",
            exact.radius,
            grid.radius
        );
    }
}

fn chain_suite() -> Vec<(JordanCurve, DiskChainCertificate)> {
    let mut r = common::rng(13);
    let mut out = Vec::new();
    for i in 0..30 {
        let c = match i % 3 {
            0 => common::random_hook(&mut r),
            1 => common::random_dumbbell(&mut r),
            _ => common::random_rounded_star(&mut r),
        };
        for _ in 0..3 {
            let seed = common::random_boundary_point(&c, &mut r);
            let cert = find_unit_disk_with(&c, 1.0, ChainOptions { seed: Some(seed) })
                .unwrap_or_else(|e| panic!("curve {i}: {e}"));
            out.push((c.clone(), cert));
        }
    }
    for (c, seed) in common::two_step_cases() {
        let cert = find_unit_disk_with(&c, 1.0, ChainOptions { seed: Some(seed) }).unwrap();
        assert_eq!(cert.iterations(), 2);
        out.push((c, cert));
    }
    out
}

#[test]
fn chain_certificates_hold() {
    let suite = chain_suite();
    let mut r = common::rng(14);
    let mut nested_pairs = 0;
    let mut iterations = 0;
    for (k, (c, cert)) in suite.iter().enumerate() {
        let problems = verify_certificate(c, cert);
        assert!(problems.is_empty(), "certificate {k}: {problems:?}");
        iterations += cert.iterations();

        let spent: Vec<_> = cert.steps.iter().filter_map(|s| s.spent).collect();
        for i in 0..spent.len() {
            for j in i + 1..spent.len() {
                let gap = spent[i].center.dist(spent[j].center) - spent[i].radius - spent[j].radius;
                assert!(gap >= -1e-9, "certificate {k}: spent disks {i}, {j} overlap by {gap}");
            }
        }
        let total: f64 = spent.iter().map(|d| d.area()).sum();
        assert!(total <= interior_area(c) + 1e-6);

        // Every chain disk touches the curve twice and is no smaller than its spent disk.
        for s in &cert.steps {
            // A disk that hugs an arc of the curve touches it along a whole stretch.
            let hugs = c.pieces().iter().any(|p| match p {
                Piece::Arc(a) => a.center.dist(s.disk.center) < CONTACT_EPS && (a.radius - s.disk.radius).abs() < CONTACT_EPS,
                Piece::Segment(_) => false,
            });
            assert!(
                hugs || contact_points(c, &s.disk, CONTACT_EPS).len() >= 2,
                "certificate {k}, step {}",
                s.n
            );
            if let Some(e) = s.spent {
                assert!(s.disk.radius >= e.radius - 1e-12, "certificate {k}, step {}", s.n);
            }
        }

        let regions: Vec<_> = cert
            .steps
            .iter()
            .map(|s| step_region(c, s).unwrap())
            .collect();
        for w in regions.windows(2) {
            let (Some(outer), Some(inner)) = (&w[0], &w[1]) else { continue };
            nested_pairs += 1;
            let probes = common::sample_interior(inner, 500, &mut r);
            assert_eq!(probes.len(), 500);
            for p in probes {
                assert!(outer.point_location(p) != Location::Exterior, "certificate {k}: {p:?}");
            }
        }

        for t in 0..360 {
            let p = cert.result.boundary_point(t as f64 * std::f64::consts::PI / 180.0);
            assert!(c.point_location(p) != Location::Exterior);
        }
    }
    assert!(iterations > suite.len() / 3, "suite barely iterates: {iterations}");
    assert!(nested_pairs > 0, "no certificate with two consecutive regions");
}
