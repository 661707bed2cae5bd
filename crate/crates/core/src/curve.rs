//! Jordan curves as closed chains of segments and arcs.
//!
//! A [`JordanCurve`] is validated on construction (closed, simple, no
//! degenerate pieces) and caches its orientation. Points on the curve are
//! addressed by [`CurvePoint`]: a piece index plus a local parameter, which
//! together form the global parameter `index + t ∈ [0, n)`.

use std::f64::consts::TAU;

use crate::error::{GeomError, Result};
use crate::kernel::{
    arg_variation, closest_point, piece_circle_intersection, piece_farthest_point,
    piece_intersections, Arc, Disk, Piece, Point, EPS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Exterior,
    Boundary,
}

/// A point on a curve: `(piece_index, t)` plus its coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub piece_index: usize,
    pub t: f64,
    pub coords: Point,
}

impl CurvePoint {
    /// Global parameter `piece_index + t`.
    pub fn param(&self) -> f64 {
        self.piece_index as f64 + self.t
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureGap {
    /// The gap is between the end of this piece and the start of the next.
    pub piece_index: usize,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub pieces: (usize, usize),
    pub point: Point,
}

/// Outcome of [`validate`]. The chain is a Jordan curve iff [`ValidationReport::ok`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub malformed: Vec<(usize, String)>,
    pub zero_length: Vec<usize>,
    pub closure_gaps: Vec<ClosureGap>,
    pub self_intersections: Vec<Crossing>,
    /// The input was negatively oriented and has been reversed.
    pub reversed: bool,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.malformed.is_empty()
            && self.zero_length.is_empty()
            && self.closure_gaps.is_empty()
            && self.self_intersections.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} malformed, {} zero-length, {} closure gaps, {} self-intersections",
            self.malformed.len(),
            self.zero_length.len(),
            self.closure_gaps.len(),
            self.self_intersections.len()
        )
    }
}

fn junction_tol(eps: f64) -> f64 {
    (1e3 * eps).min(1e-5).max(eps)
}

/// Checks that `pieces` form a closed simple chain.
///
/// Simplicity is decided by testing all pairs of pieces in closed form.
pub fn validate(pieces: &[Piece], eps: f64) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = pieces.len();
    if n == 0 {
        rep.malformed.push((0, "empty chain".into()));
        return rep;
    }
    for (i, p) in pieces.iter().enumerate() {
        if !p.is_finite() {
            rep.malformed.push((i, "non-finite coordinate".into()));
        } else if matches!(p, Piece::Arc(a) if a.radius <= 0.0) {
            rep.malformed.push((i, "non-positive radius".into()));
        } else if p.length() <= eps {
            rep.zero_length.push(i);
        }
    }
    if !rep.malformed.is_empty() {
        return rep;
    }
    for i in 0..n {
        let gap = pieces[i].end().dist(pieces[(i + 1) % n].start());
        if gap > eps {
            rep.closure_gaps.push(ClosureGap { piece_index: i, gap });
        }
    }
    if n == 1 {
        return rep;
    }
    let jt = junction_tol(eps);
    for (i, p) in pieces.iter().enumerate() {
        if let Piece::Arc(a) = p {
            if a.is_full_circle() {
                rep.self_intersections.push(Crossing {
                    pieces: (i, i),
                    point: p.start(),
                });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if pieces[i].start().dist(pieces[j].start()) <= eps {
                rep.self_intersections.push(Crossing {
                    pieces: (i, j),
                    point: pieces[i].start(),
                });
            }
        }
    }
    for i in 0..n {
        if rep.zero_length.contains(&i) {
            continue;
        }
        for j in i + 1..n {
            if rep.zero_length.contains(&j) {
                continue;
            }
            let hits = piece_intersections(&pieces[i], &pieces[j], eps);
            if hits.overlap {
                rep.self_intersections.push(Crossing {
                    pieces: (i, j),
                    point: pieces[i].midpoint(),
                });
                continue;
            }
            let mut allowed = Vec::with_capacity(2);
            if j == i + 1 {
                allowed.push(pieces[i].end());
            }
            if i == 0 && j == n - 1 {
                allowed.push(pieces[0].start());
            }
            for h in hits.hits {
                if !allowed.iter().any(|q| q.dist(h.point) <= jt) {
                    rep.self_intersections.push(Crossing {
                        pieces: (i, j),
                        point: h.point,
                    });
                }
            }
        }
    }
    rep
}

/// A validated closed simple chain with cached orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanCurve {
    pieces: Vec<Piece>,
    orientation: Orientation,
    eps: f64,
    reversed: bool,
}

impl JordanCurve {
    /// Validates `pieces` with the default tolerance. The orientation is kept as given.
    pub fn new(pieces: Vec<Piece>) -> Result<Self> {
        Self::with_tolerance(pieces, EPS)
    }

    pub fn with_tolerance(pieces: Vec<Piece>, eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(GeomError::InvalidInput(format!("tolerance must be positive, got {eps}")));
        }
        let report = validate(&pieces, eps);
        if !report.ok() {
            return Err(GeomError::InvalidCurve(Box::new(report)));
        }
        let mut c = JordanCurve {
            pieces,
            orientation: Orientation::Positive,
            eps,
            reversed: false,
        };
        c.orientation = c.compute_orientation()?;
        Ok(c)
    }

    /// Validates and normalizes to positive orientation, reversing if needed.
    pub fn positive(pieces: Vec<Piece>) -> Result<Self> {
        Ok(Self::new(pieces)?.into_positive())
    }

    pub fn into_positive(self) -> Self {
        match self.orientation {
            Orientation::Positive => self,
            Orientation::Negative => {
                let mut c = self.reversed();
                c.reversed = true;
                c
            }
        }
    }

    /// The same point set traversed the other way.
    pub fn reversed(&self) -> Self {
        let pieces = self.pieces.iter().rev().map(Piece::reversed).collect();
        JordanCurve {
            pieces,
            orientation: match self.orientation {
                Orientation::Positive => Orientation::Negative,
                Orientation::Negative => Orientation::Positive,
            },
            eps: self.eps,
            reversed: !self.reversed,
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Whether loading reversed the supplied orientation.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    pub fn report(&self) -> ValidationReport {
        ValidationReport {
            reversed: self.reversed,
            ..ValidationReport::default()
        }
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.orientation != Orientation::Positive {
            return Err(GeomError::PreconditionFailed("curve must be positively oriented".into()));
        }
        Ok(())
    }

    pub fn point(&self, piece_index: usize, t: f64) -> CurvePoint {
        let i = piece_index % self.len();
        CurvePoint {
            piece_index: i,
            t,
            coords: self.pieces[i].point_at(t),
        }
    }

    /// Point at global parameter `u` (taken modulo the piece count).
    pub fn point_at_param(&self, u: f64) -> CurvePoint {
        let n = self.len() as f64;
        let u = u.rem_euclid(n);
        let i = (u.floor() as usize).min(self.len() - 1);
        self.point(i, (u - i as f64).clamp(0.0, 1.0))
    }

    /// Moves a point sitting at the very end of a piece onto the start of the next one.
    pub fn normalize(&self, cp: CurvePoint) -> CurvePoint {
        let piece = &self.pieces[cp.piece_index];
        let tol = piece.param_tol(0.5 * self.eps);
        if cp.t >= 1.0 - tol {
            let j = (cp.piece_index + 1) % self.len();
            return CurvePoint {
                piece_index: j,
                t: 0.0,
                coords: self.pieces[j].start(),
            };
        }
        if cp.t <= tol {
            return CurvePoint {
                t: 0.0,
                coords: piece.start(),
                ..cp
            };
        }
        cp
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.closest_point(p).1
    }

    pub fn closest_point(&self, p: Point) -> (CurvePoint, f64) {
        let mut best = (self.point(0, 0.0), f64::INFINITY);
        for (i, piece) in self.pieces.iter().enumerate() {
            let (pp, d) = closest_point(p, piece);
            if d < best.1 {
                best = (
                    CurvePoint {
                        piece_index: i,
                        t: pp.t,
                        coords: pp.point,
                    },
                    d,
                );
            }
        }
        best
    }

    pub fn farthest_point(&self, p: Point) -> (CurvePoint, f64) {
        let mut best = (self.point(0, 0.0), -1.0);
        for (i, piece) in self.pieces.iter().enumerate() {
            let (pp, d) = piece_farthest_point(p, piece);
            if d > best.1 {
                best = (
                    CurvePoint {
                        piece_index: i,
                        t: pp.t,
                        coords: pp.point,
                    },
                    d,
                );
            }
        }
        best
    }

    /// Winding number of the curve around `p`, from the summed argument variation.
    pub fn winding_number(&self, p: Point) -> Result<i32> {
        if self.distance(p) <= self.eps {
            return Err(GeomError::PointOnCurve);
        }
        let mut total = 0.0;
        for piece in &self.pieces {
            total += arg_variation(piece, p, 0.0)?;
        }
        let turns = total / TAU;
        let w = turns.round();
        if (turns - w).abs() >= 0.25 {
            return Err(GeomError::NumericalInconsistency(format!(
                "argument variation {total} is not a multiple of 2π"
            )));
        }
        Ok(w as i32)
    }

    pub fn point_location(&self, p: Point) -> Location {
        if self.distance(p) <= self.eps {
            return Location::Boundary;
        }
        match self.winding_number(p) {
            Ok(0) => Location::Exterior,
            Ok(_) => Location::Interior,
            Err(_) => Location::Boundary,
        }
    }

    pub fn is_interior(&self, p: Point) -> bool {
        self.point_location(p) == Location::Interior
    }

    /// Probes inward from the midpoint of the longest piece, halving the step
    /// until a probe lands in the interior.
    fn compute_orientation(&self) -> Result<Orientation> {
        let piece = self
            .pieces
            .iter()
            .max_by(|a, b| a.length().total_cmp(&b.length()))
            .expect("validated curve is non-empty");
        let mid = piece.point_at(0.5);
        let n = piece.left_normal_at(0.5);
        let mut h = piece.length() / 8.0;
        for _ in 0..40 {
            for side in [1.0, -1.0] {
                let q = mid + n * (h * side);
                if let Ok(w) = self.winding_number(q) {
                    if w > 0 {
                        return Ok(Orientation::Positive);
                    }
                    if w < 0 {
                        return Ok(Orientation::Negative);
                    }
                }
            }
            h *= 0.5;
        }
        Err(GeomError::DegenerateCurve)
    }

    pub fn orientation_probe(&self) -> Result<Orientation> {
        self.compute_orientation()
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.pieces {
            let (a, b) = p.bbox();
            lo = Point::new(lo.x.min(a.x), lo.y.min(a.y));
            hi = Point::new(hi.x.max(b.x), hi.y.max(b.y));
        }
        (lo, hi)
    }

    /// Signed enclosed area (Green's theorem, closed form per piece).
    pub fn signed_area(&self) -> f64 {
        let mut twice = 0.0;
        for piece in &self.pieces {
            twice += match piece {
                Piece::Segment(s) => s.from.cross(s.to),
                Piece::Arc(a) => {
                    let (t0, t1) = (a.angle_at(0.0), a.angle_at(1.0));
                    let (c, r) = (a.center, a.radius);
                    r * c.x * (t1.sin() - t0.sin()) - r * c.y * (t1.cos() - t0.cos())
                        + r * r * a.signed_sweep()
                }
            };
        }
        0.5 * twice
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(Piece::length).sum()
    }

    /// Applies `p ↦ s·p + offset` with `s > 0`.
    pub fn scaled(&self, s: f64, offset: Point) -> Result<Self> {
        let pieces = self.pieces.iter().map(|p| p.scaled(s, offset)).collect();
        JordanCurve::with_tolerance(pieces, self.eps)
    }

    /// Mirror image across the y-axis, as a curve (its orientation flips).
    pub fn mirrored(&self) -> Result<Self> {
        let pieces = self.pieces.iter().map(Piece::mirrored_x).collect();
        JordanCurve::with_tolerance(pieces, self.eps)
    }

    /// Cyclic distance in parameter space from `from` to `to`, in `[0, n)`.
    pub fn param_offset(&self, from: f64, to: f64) -> f64 {
        (to - from).rem_euclid(self.len() as f64)
    }

    /// `γ[a, b]`: the interval from `a` to `b` in the traversal direction.
    pub fn subcurve(&self, a: CurvePoint, b: CurvePoint) -> Result<CurveInterval> {
        let a = self.normalize(a);
        let b = self.normalize(b);
        if a.coords.dist(b.coords) <= self.eps {
            return Err(GeomError::IdenticalEndpoints);
        }
        let n = self.len();
        let mut spans: Vec<(usize, f64, f64)> = Vec::new();
        if a.piece_index == b.piece_index && b.t > a.t {
            spans.push((a.piece_index, a.t, b.t));
        } else {
            spans.push((a.piece_index, a.t, 1.0));
            let mut i = (a.piece_index + 1) % n;
            while i != b.piece_index {
                spans.push((i, 0.0, 1.0));
                i = (i + 1) % n;
            }
            if b.t > 0.0 {
                spans.push((b.piece_index, 0.0, b.t));
            }
        }
        let pieces = spans
            .iter()
            .map(|&(i, t0, t1)| {
                if t0 == 0.0 && t1 == 1.0 {
                    self.pieces[i]
                } else {
                    self.pieces[i].sub(t0, t1)
                }
            })
            .collect();
        Ok(CurveInterval {
            start: a,
            end: b,
            pieces,
            sources: spans,
            eps: self.eps,
        })
    }

    /// Decomposes a small disk `U` centered at a curve point into the two
    /// curves `α⁺ = γ[a,b] + ∂U[b,a]` and `α⁻ = γ[a,b] − ∂U[a,b]`, where
    /// `γ(a,b)` is the component of `γ ∩ U` through `p`.
    pub fn alpha_decomposition(&self, p: CurvePoint, u: Disk) -> Result<AlphaDecomposition> {
        if u.center.dist(p.coords) > self.eps {
            return Err(GeomError::PreconditionFailed("U must be centered at p".into()));
        }
        let mut hits: Vec<(f64, CurvePoint, bool)> = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            let h = piece_circle_intersection(piece, &u, self.eps);
            if let Some(&(t0, _)) = h.overlaps.first() {
                return Err(GeomError::TangentialCrossing(piece.point_at(t0)));
            }
            for ch in h.points {
                let cp = self.normalize(CurvePoint {
                    piece_index: i,
                    t: ch.t,
                    coords: ch.point,
                });
                hits.push((cp.param(), cp, ch.tangential));
            }
        }
        if hits.is_empty() {
            return Err(GeomError::CurveInsideDisk);
        }
        hits.sort_by(|x, y| x.0.total_cmp(&y.0));
        hits.dedup_by(|x, y| x.1.coords.dist(y.1.coords) <= self.eps);
        if hits.len() < 2 {
            return Err(GeomError::TangentialCrossing(hits[0].1.coords));
        }
        let pu = p.param();
        let after = hits
            .iter()
            .min_by(|x, y| {
                self.param_offset(pu, x.0)
                    .total_cmp(&self.param_offset(pu, y.0))
            })
            .copied()
            .expect("non-empty");
        let before = hits
            .iter()
            .max_by(|x, y| {
                self.param_offset(pu, x.0)
                    .total_cmp(&self.param_offset(pu, y.0))
            })
            .copied()
            .expect("non-empty");
        for h in [&before, &after] {
            if h.2 {
                return Err(GeomError::TangentialCrossing(h.1.coords));
            }
        }
        let (a, b) = (before.1, after.1);
        let inner = self.subcurve(a, b)?;
        let (ta, tb) = ((a.coords - u.center).angle(), (b.coords - u.center).angle());
        let mut plus = inner.pieces.clone();
        plus.push(Piece::Arc(Arc::new(u.center, u.radius, tb, ta, true)));
        let mut minus = inner.pieces.clone();
        minus.push(Piece::Arc(Arc::new(u.center, u.radius, tb, ta, false)));
        Ok(AlphaDecomposition {
            a,
            b,
            plus: JordanCurve::with_tolerance(plus, self.eps)?,
            minus: JordanCurve::with_tolerance(minus, self.eps)?,
        })
    }
}

/// `γ[a, b]` materialized as a sub-chain.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveInterval {
    pub start: CurvePoint,
    pub end: CurvePoint,
    pub pieces: Vec<Piece>,
    /// For each piece: `(parent piece index, t0, t1)`.
    pub sources: Vec<(usize, f64, f64)>,
    pub eps: f64,
}

impl CurveInterval {
    /// Farthest point of the interval from `p`, addressed on the parent curve.
    pub fn farthest_point(&self, p: Point) -> (CurvePoint, f64) {
        let mut best: Option<(CurvePoint, f64)> = None;
        for (piece, &(i, t0, t1)) in self.pieces.iter().zip(&self.sources) {
            let (pp, d) = piece_farthest_point(p, piece);
            if best.is_none_or(|b| d > b.1) {
                best = Some((
                    CurvePoint {
                        piece_index: i,
                        t: t0 + pp.t * (t1 - t0),
                        coords: pp.point,
                    },
                    d,
                ));
            }
        }
        best.expect("interval has pieces")
    }

    /// Distance from `p` to the interval.
    pub fn distance(&self, p: Point) -> f64 {
        self.pieces
            .iter()
            .map(|q| closest_point(p, q).1)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(Piece::length).sum()
    }
}

/// Closes an interval with an arc cap running from the interval's end back to its start.
pub fn splice(interval: &CurveInterval, cap: Arc) -> Result<JordanCurve> {
    splice_with_tolerance(interval, cap, interval.eps)
}

pub fn splice_with_tolerance(interval: &CurveInterval, cap: Arc, eps: f64) -> Result<JordanCurve> {
    let first = interval.pieces.first().map(Piece::start).unwrap_or(interval.start.coords);
    let last = interval.pieces.last().map(Piece::end).unwrap_or(interval.end.coords);
    let cap = Piece::Arc(cap);
    let gap = cap.start().dist(last).max(cap.end().dist(first));
    if gap > eps {
        return Err(GeomError::EndpointMismatch(gap));
    }
    let mut pieces = interval.pieces.clone();
    pieces.push(cap);
    match JordanCurve::with_tolerance(pieces, eps) {
        Err(GeomError::InvalidCurve(r)) if !r.self_intersections.is_empty() => {
            Err(GeomError::SelfIntersection)
        }
        other => other,
    }
}

#[derive(Clone, Debug)]
pub struct AlphaDecomposition {
    pub a: CurvePoint,
    pub b: CurvePoint,
    pub plus: JordanCurve,
    pub minus: JordanCurve,
}
