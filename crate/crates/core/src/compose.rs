//! Outer boundary of the union of two curves.
//!
//! The curves are cut at their mutual crossings; a cut edge survives when a
//! probe just outside it lies outside both curves. Surviving edges chain
//! into one or more cycles, and the cycle through the lowest point is the
//! boundary of the unbounded component of `Ext γ₁ ∩ Ext γ₂`.

use crate::curvature::check_bounded_convex_curvature;
use crate::curve::{JordanCurve, Location};
use crate::error::{GeomError, NotJordanReason, Result};
use crate::kernel::{piece_intersections, Piece, Point, EPS};

/// Normal offset of the side probes.
const PROBE_OFFSET: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct ArrangementEdge {
    /// 0 for the first curve, 1 for the second.
    pub curve: usize,
    pub piece_index: usize,
    pub t0: f64,
    pub t1: f64,
    pub piece: Piece,
    /// The edge borders the region outside both curves.
    pub on_outer_side: bool,
}

/// Both curves split at their crossings.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    /// Crossing points of the two curves.
    pub nodes: Vec<Point>,
    pub edges: Vec<ArrangementEdge>,
}

/// Splits both curves at their mutual intersections and labels each edge.
pub fn arrangement(c1: &JordanCurve, c2: &JordanCurve) -> Result<Arrangement> {
    c1.require_positive()?;
    c2.require_positive()?;
    let curves = [c1, c2];
    let mut cuts: [Vec<Vec<f64>>; 2] = [vec![Vec::new(); c1.len()], vec![Vec::new(); c2.len()]];
    let mut nodes: Vec<Point> = Vec::new();
    for (i, a) in c1.pieces().iter().enumerate() {
        for (j, b) in c2.pieces().iter().enumerate() {
            let hits = piece_intersections(a, b, EPS);
            if hits.overlap {
                return Err(GeomError::TangentialOverlap);
            }
            for h in hits.hits {
                if h.tangential {
                    return Err(GeomError::NotJordan(NotJordanReason::TangentialDegeneracy));
                }
                cuts[0][i].push(h.ta);
                cuts[1][j].push(h.tb);
                if !nodes.iter().any(|p| p.dist(h.point) <= EPS) {
                    nodes.push(h.point);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (k, curve) in curves.iter().enumerate() {
        let other = curves[1 - k];
        for (i, piece) in curve.pieces().iter().enumerate() {
            let tol = piece.param_tol(EPS);
            let mut ts: Vec<f64> = cuts[k][i]
                .iter()
                .copied()
                .filter(|t| *t > tol && *t < 1.0 - tol)
                .collect();
            ts.push(0.0);
            ts.push(1.0);
            ts.sort_by(f64::total_cmp);
            ts.dedup_by(|x, y| (*x - *y).abs() <= tol);
            for w in ts.windows(2) {
                let sub = piece.sub(w[0], w[1]);
                let mid = sub.point_at(0.5);
                let probe = mid - sub.left_normal_at(0.5) * PROBE_OFFSET;
                let outside = curve.point_location(probe) == Location::Exterior
                    && other.point_location(probe) == Location::Exterior;
                edges.push(ArrangementEdge {
                    curve: k,
                    piece_index: i,
                    t0: w[0],
                    t1: w[1],
                    piece: sub,
                    on_outer_side: outside,
                });
            }
        }
    }
    Ok(Arrangement { nodes, edges })
}

/// Boundary of the unbounded component of `Ext c1 ∩ Ext c2`, positively oriented.
pub fn compose(c1: &JordanCurve, c2: &JordanCurve) -> Result<JordanCurve> {
    let arr = arrangement(c1, c2)?;
    if arr.nodes.is_empty() {
        if c1.point_location(c2.pieces()[0].start()) == Location::Interior {
            return Ok(c1.clone());
        }
        if c2.point_location(c1.pieces()[0].start()) == Location::Interior {
            return Ok(c2.clone());
        }
        return Err(GeomError::NotJordan(NotJordanReason::Disjoint));
    }
    let kept: Vec<&ArrangementEdge> = arr.edges.iter().filter(|e| e.on_outer_side).collect();
    let start = kept
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.piece.bbox().0.y.total_cmp(&b.1.piece.bbox().0.y))
        .map(|(k, _)| k)
        .ok_or(GeomError::NotJordan(NotJordanReason::NonSimpleBoundary))?;
    let link_tol = 1e3 * EPS;
    let mut used = vec![false; kept.len()];
    let mut order = vec![start];
    used[start] = true;
    let origin = kept[start].piece.start();
    let mut cur = start;
    loop {
        let end = kept[cur].piece.end();
        if end.dist(origin) <= link_tol && order.len() > 1 {
            break;
        }
        let next: Vec<usize> = (0..kept.len())
            .filter(|&k| !used[k] && kept[k].piece.start().dist(end) <= link_tol)
            .collect();
        if next.len() != 1 {
            if next.is_empty() && end.dist(origin) <= link_tol {
                break;
            }
            return Err(GeomError::NotJordan(NotJordanReason::NonSimpleBoundary));
        }
        cur = next[0];
        used[cur] = true;
        order.push(cur);
    }
    let chain: Vec<&ArrangementEdge> = order.iter().map(|&k| kept[k]).collect();
    let pieces = merge_split_pieces([c1, c2], &chain);
    match JordanCurve::new(pieces) {
        Ok(c) => Ok(c.into_positive()),
        Err(GeomError::InvalidCurve(_)) => Err(GeomError::NotJordan(NotJordanReason::NonSimpleBoundary)),
        Err(e) => Err(e),
    }
}

/// Rejoins consecutive edges cut from the same piece of the same curve.
fn merge_split_pieces(curves: [&JordanCurve; 2], edges: &[&ArrangementEdge]) -> Vec<Piece> {
    let mut runs: Vec<(usize, usize, f64, f64)> = Vec::new();
    for e in edges {
        if let Some(last) = runs.last_mut() {
            if last.0 == e.curve && last.1 == e.piece_index {
                if (last.3 - e.t0).abs() <= 1e-12 {
                    last.3 = e.t1;
                    continue;
                }
                // A single full-turn arc wraps from t = 1 back to t = 0.
                if curves[e.curve].len() == 1 && last.3 == 1.0 && e.t0 == 0.0 {
                    last.3 = 1.0 + e.t1;
                    continue;
                }
            }
        }
        runs.push((e.curve, e.piece_index, e.t0, e.t1));
    }
    runs.into_iter()
        .map(|(k, i, t0, t1)| {
            let p = curves[k].pieces()[i];
            if t0 == 0.0 && t1 == 1.0 {
                p
            } else {
                p.sub(t0, t1)
            }
        })
        .collect()
}

/// Checks the composition claim on one pair: both inputs must have bounded
/// convex curvature; returns whether their composition does too.
pub fn verify_observation2(c1: &JordanCurve, c2: &JordanCurve, r: f64) -> Result<bool> {
    for c in [c1, c2] {
        if !check_bounded_convex_curvature(c, r)?.ok {
            return Err(GeomError::PreconditionFailed(
                "both inputs must have bounded convex curvature".into(),
            ));
        }
    }
    let composed = compose(c1, c2)?;
    Ok(check_bounded_convex_curvature(&composed, r)?.ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn unit(x: f64, y: f64) -> JordanCurve {
        shapes::circle(Point::new(x, y), 1.0)
    }

    #[test]
    fn overlapping_circles() {
        let g = compose(&unit(0.0, 0.0), &unit(1.0, 0.0)).unwrap();
        assert_eq!(g.len(), 2);
        let h = 0.75f64.sqrt();
        let corners: Vec<Point> = g.pieces().iter().map(Piece::start).collect();
        assert!(corners.iter().any(|p| p.dist(Point::new(0.5, h)) < 1e-9));
        assert!(corners.iter().any(|p| p.dist(Point::new(0.5, -h)) < 1e-9));
        let rep = crate::curvature::check_bounded_convex_curvature(&g, 1.0).unwrap();
        assert!(rep.ok);
        assert!(verify_observation2(&unit(0.0, 0.0), &unit(1.0, 0.0), 1.0).unwrap());
    }

    #[test]
    fn disjoint_and_nested() {
        assert!(matches!(
            compose(&unit(0.0, 0.0), &unit(5.0, 0.0)),
            Err(GeomError::NotJordan(NotJordanReason::Disjoint))
        ));
        let big = shapes::circle(Point::ORIGIN, 3.0);
        assert_eq!(compose(&big, &unit(0.5, 0.0)).unwrap(), big);
        assert_eq!(compose(&unit(0.5, 0.0), &big).unwrap(), big);
    }

    #[test]
    fn degenerate_contacts() {
        assert!(matches!(
            compose(&unit(0.0, 0.0), &unit(2.0, 0.0)),
            Err(GeomError::NotJordan(NotJordanReason::TangentialDegeneracy))
        ));
        let s = shapes::stadium();
        let moved = s.scaled(1.0, Point::new(1.0, 0.0)).unwrap();
        assert!(matches!(compose(&s, &moved), Err(GeomError::TangentialOverlap)));
    }

    #[test]
    fn stadiums() {
        let s = shapes::stadium();
        let t = shapes::stadium().scaled(1.0, Point::new(0.5, 1.2)).unwrap();
        let g = compose(&s, &t).unwrap();
        assert!((g.signed_area() - compose(&t, &s).unwrap().signed_area()).abs() < 1e-9);
        assert!(verify_observation2(&s, &t, 1.0).unwrap());
    }

    #[test]
    fn convex_corner_input_is_rejected() {
        let sq = shapes::polygon(&[
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(matches!(
            verify_observation2(&sq, &unit(2.0, 1.0), 1.0),
            Err(GeomError::PreconditionFailed(_))
        ));
    }
}
