//! Constructive search for a disk of radius `R` inside a curve of bounded
//! convex curvature, recorded as a checkable chain of disks.
//!
//! Each step holds a disk `D` inside the curve and an interval `γ[x, y]`
//! whose ends lie on `∂D` while its inside avoids `∂D`. The next disk is the
//! largest one tangent to the witness disk at the point `z` of `γ(x, y)`
//! farthest from `D`, kept inside the region cut off by `∂D`. The regions
//! shrink and each step spends a disk `E` of area bounded below, so the
//! chain ends; it ends with a disk of radius at least `R`.

use std::f64::consts::PI;

use crate::curvature::{check_bounded_convex_curvature, find_violation_witness, unit_disk_at};
use crate::curve::{splice_with_tolerance, CurvePoint, JordanCurve, Location};
use crate::disks::{contact_spans, interior_area, max_tangent_disk, ContactSpan};
use crate::error::{GeomError, Result};
use crate::kernel::{Arc, Disk, Point, CONTACT_EPS};

/// Radii this close to the bound count as reaching it.
pub const RADIUS_SLACK: f64 = 1e-10;

const HARD_STEP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub n: usize,
    /// Tangency point of `disk` with the curve.
    pub z: CurvePoint,
    /// Witness disk of radius `R` at `z`.
    pub witness: Disk,
    pub disk: Disk,
    /// Ends of the interval carried to the next step; absent on the final step.
    pub x: Option<CurvePoint>,
    pub y: Option<CurvePoint>,
    /// Disk spent by this step; absent on the first step.
    pub spent: Option<Disk>,
    /// Gap between `R` and the previous disk's radius; absent on the first step.
    pub radius_gap: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiskChainCertificate {
    pub radius_bound: f64,
    pub steps: Vec<ChainStep>,
    pub result: Disk,
    pub area_budget: f64,
    pub area_consumed: f64,
}

impl DiskChainCertificate {
    pub fn iterations(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }
}

/// Options for [`find_unit_disk_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainOptions {
    /// Anchor for the first disk; defaults to the midpoint of piece 0.
    pub seed: Option<CurvePoint>,
}

pub fn find_unit_disk(curve: &JordanCurve, r: f64) -> Result<DiskChainCertificate> {
    find_unit_disk_with(curve, r, ChainOptions::default())
}

pub fn find_unit_disk_with(
    curve: &JordanCurve,
    r: f64,
    opts: ChainOptions,
) -> Result<DiskChainCertificate> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeomError::InvalidInput(format!("radius bound must be positive, got {r}")));
    }
    curve.require_positive()?;
    let area = interior_area(curve);
    let z0 = opts.seed.unwrap_or_else(|| curve.point(0, 0.5));
    let witness = match unit_disk_at(curve, z0, r) {
        Ok(w) => w.disk,
        Err(GeomError::LocalViolation) => return Err(local_violation(curve, r)),
        Err(e) => return Err(e),
    };
    let d0 = max_tangent_disk(curve, z0, &witness)?.disk;

    let mut steps = Vec::new();
    let mut consumed = 0.0;
    let mut min_spent = f64::INFINITY;
    let (mut z, mut witness, mut disk) = (curve.normalize(z0), witness, d0);
    let mut window: Option<(CurvePoint, CurvePoint)> = None;
    let mut spent = None;
    let mut radius_gap = None;
    loop {
        let n = steps.len();
        if disk.radius >= r - RADIUS_SLACK {
            steps.push(ChainStep {
                n,
                z,
                witness,
                disk,
                x: None,
                y: None,
                spent,
                radius_gap,
            });
            let result = disk_touching(&disk, z, r);
            return Ok(DiskChainCertificate {
                radius_bound: r,
                steps,
                result,
                area_budget: area,
                area_consumed: consumed,
            });
        }
        let budget = if min_spent.is_finite() {
            (area / (PI * min_spent * min_spent)).ceil() as usize
        } else {
            HARD_STEP_CAP
        };
        if n >= budget.min(HARD_STEP_CAP) {
            return Err(GeomError::IterationBudgetExceeded(n));
        }
        let (x, y, far) = pick_interval(curve, &disk, window)?;
        steps.push(ChainStep {
            n,
            z,
            witness,
            disk,
            x: Some(x),
            y: Some(y),
            spent,
            radius_gap,
        });
        if far.coords.dist(disk.center) < r {
            let big = Disk::new(disk.center, r)?;
            let w = find_violation_witness(curve, x, y, &disk, &big)?;
            return Err(GeomError::CurvatureViolationDetected(Box::new(w)));
        }
        let gap = r - disk.radius;
        let iv = curve.subcurve(x, y)?;
        let ty = (y.coords - disk.center).angle();
        let tx = (x.coords - disk.center).angle();
        let cap = Arc::new(disk.center, disk.radius, ty, tx, true);
        let region = splice_with_tolerance(&iv, cap, CONTACT_EPS)?;
        let next_witness = match unit_disk_at(curve, far, r) {
            Ok(w) => w.disk,
            Err(GeomError::LocalViolation) => return Err(local_violation(curve, r)),
            Err(e) => return Err(e),
        };
        let next = max_tangent_disk(&region, far, &next_witness)?.disk;
        let e = next_witness.cotangent_at(far.coords, next.radius.min(0.5 * gap));
        consumed += e.area();
        min_spent = min_spent.min(e.radius);
        spent = Some(e);
        radius_gap = Some(gap);
        window = Some((x, y));
        z = curve.normalize(far);
        witness = next_witness;
        disk = next;
    }
}

/// Turns a failed tangent disk into the checker's first witness.
fn local_violation(curve: &JordanCurve, r: f64) -> GeomError {
    match check_bounded_convex_curvature(curve, r) {
        Ok(report) => match report.violations.into_iter().next() {
            Some(w) => GeomError::CurvatureViolationDetected(Box::new(w)),
            None => GeomError::LocalViolation,
        },
        Err(e) => e,
    }
}

/// The disk of radius `r` tangent to `disk` from inside at its contact `z`.
fn disk_touching(disk: &Disk, z: CurvePoint, r: f64) -> Disk {
    disk.cotangent_at(z.coords, r)
}

/// Chooses the interval of `γ ∖ ∂disk` holding the curve point farthest from
/// the disk's center, among intervals inside `window` when one is given.
/// Returns the interval ends and that farthest point.
fn pick_interval(
    curve: &JordanCurve,
    disk: &Disk,
    window: Option<(CurvePoint, CurvePoint)>,
) -> Result<(CurvePoint, CurvePoint, CurvePoint)> {
    let spans = contact_spans(curve, disk, CONTACT_EPS, None);
    if spans.len() < 2 {
        return Err(GeomError::NumericalInconsistency(format!(
            "disk of radius {} touches the curve in fewer than two places",
            disk.radius
        )));
    }
    let m = spans.len();
    let gaps = (0..m).map(|k| (spans[k], spans[(k + 1) % m]));
    let ptol = 1e-9;
    let nlen = curve.len() as f64;
    let inside = |a: &ContactSpan, b: &ContactSpan| match window {
        None => true,
        Some((wx, wy)) => {
            let off = |p: &CurvePoint| {
                let o = curve.param_offset(wx.param(), p.param());
                if o > nlen - ptol {
                    0.0
                } else {
                    o
                }
            };
            let limit = curve.param_offset(wx.param(), wy.param()) + ptol;
            let (oa, ob) = (off(&a.last), off(&b.first));
            oa <= ob && ob <= limit
        }
    };
    let mut best: Option<(f64, f64, CurvePoint, CurvePoint, CurvePoint)> = None;
    for (a, b) in gaps {
        if !inside(&a, &b) {
            continue;
        }
        let (x, y) = (a.last, b.first);
        let Ok(iv) = curve.subcurve(x, y) else {
            continue;
        };
        let (far, d) = iv.farthest_point(disk.center);
        let start = x.param();
        let better = match &best {
            None => true,
            Some((bd, bs, ..)) => d > *bd + 1e-12 || ((d - *bd).abs() <= 1e-12 && start < *bs),
        };
        if better {
            best = Some((d, start, x, y, far));
        }
    }
    best.map(|(_, _, x, y, far)| (x, y, far)).ok_or_else(|| {
        GeomError::NumericalInconsistency("no contact interval lies inside the previous one".into())
    })
}

/// Independent checks of a certificate against its curve. Returns the list
/// of failed checks (empty when the certificate holds).
pub fn verify_certificate(curve: &JordanCurve, cert: &DiskChainCertificate) -> Vec<String> {
    let mut problems = Vec::new();
    let tol = 1e-9;
    if cert.result.radius < cert.radius_bound - 1e-9 {
        problems.push(format!("result radius {} below the bound", cert.result.radius));
    }
    for k in 0..360 {
        let th = 2.0 * PI * k as f64 / 360.0;
        let p = cert.result.boundary_point(th);
        if curve.point_location(p) == Location::Exterior {
            problems.push(format!("result boundary sample {k} lies outside the curve"));
            break;
        }
    }
    if curve.point_location(cert.result.center) != Location::Interior {
        problems.push("result center is not interior".into());
    }
    for s in &cert.steps {
        let c = s.disk.center;
        if curve.point_location(c) != Location::Interior || curve.distance(c) < s.disk.radius - 1e-7 {
            problems.push(format!("disk of step {} is not inside the curve", s.n));
        }
        if let (Some(e), Some(radius_gap)) = (s.spent, s.radius_gap) {
            if e.radius > s.disk.radius.min(0.5 * radius_gap) + tol {
                problems.push(format!("spent disk of step {} is too large", s.n));
            }
        }
    }
    let spent: Vec<Disk> = cert.steps.iter().filter_map(|s| s.spent).collect();
    for i in 0..spent.len() {
        for j in i + 1..spent.len() {
            if spent[i].center.dist(spent[j].center) < spent[i].radius + spent[j].radius - tol {
                problems.push(format!("spent disks {i} and {j} overlap"));
            }
        }
    }
    let total: f64 = spent.iter().map(Disk::area).sum();
    if (total - cert.area_consumed).abs() > 1e-9 * (1.0 + total) {
        problems.push("recorded consumed area does not match the spent disks".into());
    }
    if cert.area_consumed > cert.area_budget + tol {
        problems.push("consumed area exceeds the interior area".into());
    }
    problems
}

/// The closed region cut off by a step: `γ[x, y]` closed by `∂D` run backwards.
pub fn step_region(curve: &JordanCurve, step: &ChainStep) -> Result<Option<JordanCurve>> {
    let (Some(x), Some(y)) = (step.x, step.y) else {
        return Ok(None);
    };
    let d = &step.disk;
    let iv = curve.subcurve(x, y)?;
    let cap = Arc::new(
        d.center,
        d.radius,
        (y.coords - d.center).angle(),
        (x.coords - d.center).angle(),
        false,
    );
    splice_with_tolerance(&iv, cap, CONTACT_EPS).map(Some)
}

/// Whether `p` lies in the open region of a step.
pub fn in_step_region(region: &JordanCurve, p: Point) -> bool {
    region.point_location(p) == Location::Interior
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn assert_good(curve: &JordanCurve) -> DiskChainCertificate {
        let cert = find_unit_disk(curve, 1.0).unwrap();
        let problems = verify_certificate(curve, &cert);
        assert!(problems.is_empty(), "{problems:?}");
        assert!(cert.result.radius >= 1.0 - 1e-9);
        cert
    }

    #[test]
    fn circle_needs_no_iterations() {
        let c = shapes::circle(Point::ORIGIN, 1.0);
        let cert = assert_good(&c);
        assert_eq!(cert.iterations(), 0);
        assert!(cert.result.center.dist(Point::ORIGIN) < 1e-9);
        assert!(cert.steps[0].x.is_none() && cert.steps[0].spent.is_none());
    }

    #[test]
    fn stadium_and_compositions() {
        let cert = assert_good(&shapes::stadium());
        assert!(cert.iterations() <= 3);
        assert_good(&shapes::two_disks(1.0));
        assert_good(&shapes::two_disks(1.9));
        assert_good(&shapes::rounded_rectangle(4.0, 3.0, 1.0).unwrap());
        assert_good(&shapes::circle(Point::new(5.0, -3.0), 7.0));
    }

    #[test]
    fn sharp_curves_report_a_witness() {
        let c = shapes::circle(Point::ORIGIN, 0.5);
        match find_unit_disk(&c, 1.0) {
            Err(GeomError::CurvatureViolationDetected(w)) => {
                assert_eq!(w.kind, crate::curvature::ViolationKind::ConvexArcTooSharp)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_bound_is_rejected() {
        let c = shapes::circle(Point::ORIGIN, 1.0);
        assert!(matches!(find_unit_disk(&c, 0.0), Err(GeomError::InvalidInput(_))));
    }
}
