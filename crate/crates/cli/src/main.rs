//! `bccurve`: command-line access to curve checking, inscribed disks,
//! composition, offsets, corner rounding and rendering.
//!
//! Results go to standard output (or `-o`); diagnostics go to standard error
//! as one JSON object per line.

mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bccurve::chain::{find_unit_disk_with, verify_certificate, ChainOptions};
use bccurve::compose::compose;
use bccurve::curvature::{check_bounded_concave_curvature, check_bounded_convex_curvature, unit_disk_at};
use bccurve::disks::max_inscribed_disk;
use bccurve::io::{self, IoError};
use bccurve::oracle::{grid_inscribed_disk, rasterize};
use bccurve::toolpath::{offset, round_corners, ConcaveMode, ToolpathSpec};
use bccurve::{Disk, GeomError, JordanCurve, Point};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_FAILED: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "bccurve", version, about = "Curves of bounded convex curvature")]
struct Cli {
    /// Geometric tolerance for validation and predicates.
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    /// Radius R of the curvature bound.
    #[arg(long = "radius-bound", global = true, default_value_t = 1.0)]
    radius_bound: f64,
    /// Cross-check results against independent oracles; findings go to stderr.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report structural problems of a piece list.
    Validate { input: PathBuf },
    /// Check bounded convex curvature.
    Check { input: PathBuf },
    /// Check bounded concave curvature.
    CheckConcave { input: PathBuf },
    /// Largest inscribed disk and its contact points.
    Inscribed { input: PathBuf },
    /// Run the disk chain to a disk of radius R inside the curve.
    UnitDisk {
        input: PathBuf,
        /// Write the disk chain certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Start the chain at this boundary point (piece index and parameter).
        #[arg(long, num_args = 2, value_names = ["PIECE", "T"])]
        seed: Option<Vec<f64>>,
    },
    /// Boundary of the union of two overlapping curves.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Offset every piece by a signed distance (positive moves inward).
    Offset {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        distance: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Round convex corners to a given radius.
    Round {
        input: PathBuf,
        #[arg(long)]
        radius: f64,
        /// Radius of the tool whose rolling arcs a miter replaces.
        #[arg(long = "tool-radius", default_value_t = 1.0)]
        tool_radius: f64,
        #[arg(long, value_enum, default_value_t = Concave::Roll)]
        concave: Concave,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw the curve, and optionally disks, as SVG.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// A disk to draw dashed; may be repeated.
        #[arg(long, num_args = 3, value_names = ["CX", "CY", "R"], action = clap::ArgAction::Append, allow_hyphen_values = true)]
        disk: Vec<f64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Concave {
    Roll,
    Miter,
}

/// A failure with its exit code; the diagnostic has already been emitted.
struct Exit(u8);

fn diag(value: Value) {
    eprintln!("{value}");
}

fn fail_geom(e: &GeomError) -> Exit {
    let mut d = json!({"level": "error", "kind": e.kind(), "message": e.to_string()});
    match e {
        GeomError::CurvatureViolationDetected(w) => d["witness"] = io::witness_to_json(w),
        GeomError::InvalidCurve(rep) => d["report"] = io::validation_to_json(rep),
        _ => {}
    }
    diag(d);
    Exit(if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_FAILED })
}

fn fail_io(path: &Path, e: IoError) -> Exit {
    match e {
        IoError::Syntax { line, column, message } => {
            diag(json!({"level": "error", "kind": "MalformedJson", "file": path, "line": line, "column": column, "message": message}));
            Exit(EXIT_DATA)
        }
        IoError::Schema(message) => {
            diag(json!({"level": "error", "kind": "MalformedJson", "file": path, "message": message}));
            Exit(EXIT_DATA)
        }
        IoError::Geometry(g) => fail_geom(&g),
    }
}

fn read_text(path: &Path) -> Result<String, Exit> {
    std::fs::read_to_string(path).map_err(|e| {
        diag(json!({"level": "error", "kind": "Unreadable", "file": path, "message": e.to_string()}));
        Exit(EXIT_NO_INPUT)
    })
}

fn load(path: &Path, eps: f64) -> Result<JordanCurve, Exit> {
    let curve = io::curve_from_str(&read_text(path)?, eps).map_err(|e| fail_io(path, e))?;
    if curve.was_reversed() {
        diag(json!({"level": "warning", "kind": "Reversed", "file": path,
            "message": "input was clockwise and has been reversed"}));
    }
    Ok(curve)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Exit> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|e| {
            diag(json!({"level": "error", "kind": "Unwritable", "file": p, "message": e.to_string()}));
            Exit(EXIT_IO)
        }),
    }
}

fn emit_json(output: Option<&Path>, value: &Value) -> Result<(), Exit> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    emit(output, &text)
}

/// Writes a curve; with `--verify`, also re-reads the text and compares it.
fn emit_curve(cli: &Cli, output: Option<&Path>, curve: &JordanCurve) -> Result<(), Exit> {
    let text = io::curve_to_string(curve);
    if cli.verify {
        let same = io::curve_from_str(&text, cli.eps)
            .map(|back| back.pieces() == curve.pieces())
            .unwrap_or(false);
        diag(json!({"level": "info", "check": "round-trip", "ok": same}));
    }
    emit(output, &text)
}

fn grid_resolution(curve: &JordanCurve) -> f64 {
    let (lo, hi) = curve.bbox();
    (hi.x - lo.x).max(hi.y - lo.y) / 400.0
}

fn verify_inscribed(curve: &JordanCurve, radius: f64) {
    let res = grid_resolution(curve);
    match rasterize(curve, res).and_then(|m| grid_inscribed_disk(&m)) {
        Ok(g) => diag(json!({"level": "info", "check": "grid-oracle", "resolution": res,
            "exact": radius, "grid": g.radius, "ok": (g.radius - radius).abs() <= 2.0 * res})),
        Err(e) => diag(json!({"level": "warning", "check": "grid-oracle", "message": e.to_string()})),
    }
}

fn check(cli: &Cli, input: &Path, concave: bool) -> Result<(), Exit> {
    let curve = load(input, cli.eps)?;
    let r = cli.radius_bound;
    let report = if concave {
        check_bounded_concave_curvature(&curve, r)
    } else {
        check_bounded_convex_curvature(&curve, r)
    }
    .map_err(|e| fail_geom(&e))?;
    if cli.verify && report.ok && !concave {
        // Every boundary point should carry a verified tangent disk.
        let samples = 200;
        let bad = (0..samples)
            .filter(|k| {
                let p = curve.point_at_param(curve.len() as f64 * *k as f64 / samples as f64);
                unit_disk_at(&curve, p, r).is_err()
            })
            .count();
        diag(json!({"level": "info", "check": "tangent-disks", "samples": samples, "failures": bad, "ok": bad == 0}));
    }
    emit_json(None, &io::report_to_json(&report))?;
    if report.ok {
        Ok(())
    } else {
        Err(Exit(EXIT_FAILED))
    }
}

fn run(cli: &Cli) -> Result<(), Exit> {
    if !(cli.eps > 0.0 && cli.eps.is_finite() && cli.radius_bound > 0.0 && cli.radius_bound.is_finite()) {
        diag(json!({"level": "error", "kind": "Usage", "message": "--eps and --radius-bound must be positive"}));
        return Err(Exit(EXIT_USAGE));
    }
    match &cli.command {
        Command::Validate { input } => {
            let text = read_text(input)?;
            let pieces = io::parse_json(&text)
                .and_then(|v| io::pieces_from_json(&v))
                .map_err(|e| fail_io(input, e))?;
            let mut report = bccurve::curve::validate(&pieces, cli.eps);
            if report.ok() {
                report.reversed = JordanCurve::with_tolerance(pieces, cli.eps)
                    .map(|c| c.into_positive().was_reversed())
                    .unwrap_or(false);
            }
            emit_json(None, &io::validation_to_json(&report))?;
            if report.ok() {
                Ok(())
            } else {
                Err(Exit(EXIT_FAILED))
            }
        }
        Command::Check { input } => check(cli, input, false),
        Command::CheckConcave { input } => check(cli, input, true),
        Command::Inscribed { input } => {
            let curve = load(input, cli.eps)?;
            let t = max_inscribed_disk(&curve).map_err(|e| fail_geom(&e))?;
            if cli.verify {
                verify_inscribed(&curve, t.disk.radius);
            }
            let contacts: Vec<Value> = t.contacts.iter().map(io::curve_point_json).collect();
            emit_json(None, &json!({"disk": io::disk_to_json(&t.disk), "contacts": contacts}))
        }
        Command::UnitDisk { input, certificate, seed } => {
            let curve = load(input, cli.eps)?;
            let seed = match seed.as_deref() {
                None => None,
                Some(&[piece, t]) => {
                    if piece < 0.0 || piece.fract() != 0.0 || piece as usize >= curve.len() || !(0.0..=1.0).contains(&t) {
                        diag(json!({"level": "error", "kind": "Usage", "message": "--seed needs a piece index of the curve and t in [0, 1]"}));
                        return Err(Exit(EXIT_USAGE));
                    }
                    Some(curve.point(piece as usize, t))
                }
                Some(_) => unreachable!("clap enforces two values"),
            };
            let cert = find_unit_disk_with(&curve, cli.radius_bound, ChainOptions { seed })
                .map_err(|e| fail_geom(&e))?;
            if cli.verify {
                let problems = verify_certificate(&curve, &cert);
                diag(json!({"level": "info", "check": "certificate", "ok": problems.is_empty(), "problems": problems}));
            }
            if let Some(path) = certificate {
                emit_json(Some(path), &io::certificate_to_json(&cert))?;
            }
            emit_json(None, &json!({"result": io::disk_to_json(&cert.result), "iterations": cert.iterations()}))
        }
        Command::Compose { first, second, output } => {
            let a = load(first, cli.eps)?;
            let b = load(second, cli.eps)?;
            let c = compose(&a, &b).map_err(|e| fail_geom(&e))?;
            emit_curve(cli, output.as_deref(), &c)
        }
        Command::Offset { input, distance, output } => {
            let curve = load(input, cli.eps)?;
            let c = offset(&curve, *distance).map_err(|e| fail_geom(&e))?;
            emit_curve(cli, output.as_deref(), &c)
        }
        Command::Round { input, radius, tool_radius, concave, output } => {
            let curve = load(input, cli.eps)?;
            let spec = ToolpathSpec {
                tool_radius: *tool_radius,
                round_radius: *radius,
                concave_mode: match concave {
                    Concave::Roll => ConcaveMode::Roll,
                    Concave::Miter => ConcaveMode::Miter,
                },
            };
            let c = round_corners(&curve, &spec).map_err(|e| fail_geom(&e))?;
            if cli.verify {
                let ok = check_bounded_convex_curvature(&c, *radius).map(|r| r.ok).unwrap_or(false);
                diag(json!({"level": "info", "check": "rounded-curvature", "ok": ok}));
            }
            emit_curve(cli, output.as_deref(), &c)
        }
        Command::Render { input, output, disk } => {
            let curve = load(input, cli.eps)?;
            let disks = disk
                .chunks(3)
                .map(|v| Disk::new(Point::new(v[0], v[1]), v[2]))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| fail_geom(&e))?;
            emit(output.as_deref(), &svg::render(&curve, &disks))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code)) => ExitCode::from(code),
    }
}
