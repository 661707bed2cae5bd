//! JSON encoding of curves, curvature reports, validation reports and certificates.
//!
//! Numbers are written in shortest round-trip form and parsed with correct
//! rounding, so a curve survives a write/read cycle bit for bit.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::chain::{ChainStep, DiskChainCertificate};
use crate::curvature::{CurvatureReport, ViolationWitness};
use crate::curve::{CurvePoint, JordanCurve, ValidationReport};
use crate::error::GeomError;
use crate::kernel::{Arc, Disk, Piece, Point};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unexpected JSON structure: {0}")]
    Schema(String),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

fn point_json(p: Point) -> Value {
    json!([p.x, p.y])
}

fn disk_json(d: &Disk) -> Value {
    json!({"c": point_json(d.center), "r": d.radius})
}

pub fn piece_to_json(p: &Piece) -> Value {
    match p {
        Piece::Segment(s) => json!({
            "kind": "segment",
            "from": point_json(s.from),
            "to": point_json(s.to),
        }),
        Piece::Arc(a) => json!({
            "kind": "arc",
            "center": point_json(a.center),
            "radius": a.radius,
            "start_angle": a.start_angle,
            "end_angle": a.end_angle,
            "ccw": a.ccw,
        }),
    }
}

pub fn pieces_to_json(pieces: &[Piece]) -> Value {
    json!({"pieces": pieces.iter().map(piece_to_json).collect::<Vec<_>>()})
}

pub fn curve_to_json(curve: &JordanCurve) -> Value {
    pieces_to_json(curve.pieces())
}

pub fn curve_to_string(curve: &JordanCurve) -> String {
    let mut s = serde_json::to_string_pretty(&curve_to_json(curve)).expect("curve JSON is serializable");
    s.push('\n');
    s
}

/// Parses JSON text, reporting syntax errors with their position.
pub fn parse_json(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_syntax() || e.is_eof() {
            IoError::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        } else {
            IoError::Schema(e.to_string())
        }
    })
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value, IoError> {
    obj.get(key)
        .ok_or_else(|| IoError::Schema(format!("{ctx}: missing \"{key}\"")))
}

fn number(v: &Value, ctx: &str) -> Result<f64, IoError> {
    v.as_f64()
        .ok_or_else(|| IoError::Schema(format!("{ctx}: expected a number")))
}

fn point(v: &Value, ctx: &str) -> Result<Point, IoError> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Point::new(number(x, ctx)?, number(y, ctx)?)),
        _ => Err(IoError::Schema(format!("{ctx}: expected [x, y]"))),
    }
}

pub fn piece_from_json(v: &Value, index: usize) -> Result<Piece, IoError> {
    let ctx = format!("piece {index}");
    let obj = v
        .as_object()
        .ok_or_else(|| IoError::Schema(format!("{ctx}: expected an object")))?;
    let kind = field(obj, "kind", &ctx)?
        .as_str()
        .ok_or_else(|| IoError::Schema(format!("{ctx}: \"kind\" must be a string")))?;
    match kind {
        "segment" => Ok(Piece::segment(
            point(field(obj, "from", &ctx)?, &ctx)?,
            point(field(obj, "to", &ctx)?, &ctx)?,
        )),
        "arc" => {
            let ccw = field(obj, "ccw", &ctx)?
                .as_bool()
                .ok_or_else(|| IoError::Schema(format!("{ctx}: \"ccw\" must be a boolean")))?;
            Ok(Piece::Arc(Arc::new(
                point(field(obj, "center", &ctx)?, &ctx)?,
                number(field(obj, "radius", &ctx)?, &ctx)?,
                number(field(obj, "start_angle", &ctx)?, &ctx)?,
                number(field(obj, "end_angle", &ctx)?, &ctx)?,
                ccw,
            )))
        }
        other => Err(IoError::Schema(format!("{ctx}: unknown kind \"{other}\""))),
    }
}

pub fn pieces_from_json(v: &Value) -> Result<Vec<Piece>, IoError> {
    let list = v
        .get("pieces")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError::Schema("expected an object with a \"pieces\" array".into()))?;
    list.iter()
        .enumerate()
        .map(|(i, p)| piece_from_json(p, i))
        .collect()
}

/// Reads a curve; a negatively oriented input is reversed (see
/// [`JordanCurve::was_reversed`]).
pub fn curve_from_str(text: &str, eps: f64) -> Result<JordanCurve, IoError> {
    let pieces = pieces_from_json(&parse_json(text)?)?;
    Ok(JordanCurve::with_tolerance(pieces, eps)?.into_positive())
}

pub fn curve_point_json(p: &CurvePoint) -> Value {
    json!({"piece_index": p.piece_index, "t": p.t, "coords": point_json(p.coords)})
}

pub fn witness_to_json(w: &ViolationWitness) -> Value {
    json!({
        "q": point_json(w.q.coords),
        "piece_index": w.q.piece_index,
        "t": w.q.t,
        "D2": disk_json(&w.disk),
        "kind": w.kind.as_str(),
        "epsilon": w.epsilon,
    })
}

pub fn report_to_json(r: &CurvatureReport) -> Value {
    json!({
        "ok": r.ok,
        "radius_bound": r.radius_bound,
        "violations": r.violations.iter().map(witness_to_json).collect::<Vec<_>>(),
    })
}

pub fn validation_to_json(r: &ValidationReport) -> Value {
    json!({
        "ok": r.ok(),
        "reversed": r.reversed,
        "malformed": r.malformed.iter().map(|(i, m)| json!({"piece_index": i, "message": m})).collect::<Vec<_>>(),
        "zero_length": r.zero_length,
        "closure_gaps": r.closure_gaps.iter().map(|g| json!({"piece_index": g.piece_index, "gap": g.gap})).collect::<Vec<_>>(),
        "self_intersections": r.self_intersections.iter().map(|c| json!({
            "pieces": [c.pieces.0, c.pieces.1],
            "point": point_json(c.point),
        })).collect::<Vec<_>>(),
    })
}

fn step_json(s: &ChainStep) -> Value {
    json!({
        "n": s.n,
        "z": point_json(s.z.coords),
        "Uz": disk_json(&s.witness),
        "D": disk_json(&s.disk),
        "x": s.x.map(|p| point_json(p.coords)),
        "y": s.y.map(|p| point_json(p.coords)),
        "E": s.spent.as_ref().map(disk_json),
        "eta2": s.radius_gap,
    })
}

pub fn certificate_to_json(c: &DiskChainCertificate) -> Value {
    json!({
        "steps": c.steps.iter().map(step_json).collect::<Vec<_>>(),
        "result": disk_json(&c.result),
        "area_budget": c.area_budget,
        "area_consumed": c.area_consumed,
    })
}

pub fn disk_to_json(d: &Disk) -> Value {
    disk_json(d)
}

/// Reads a `{"c": [x, y], "r": r}` disk.
pub fn disk_from_json(v: &Value) -> Result<Disk, IoError> {
    let c = point(v.get("c").ok_or_else(|| IoError::Schema("disk: missing \"c\"".into()))?, "disk")?;
    let r = number(v.get("r").ok_or_else(|| IoError::Schema("disk: missing \"r\"".into()))?, "disk")?;
    Ok(Disk::new(c, r)?)
}
