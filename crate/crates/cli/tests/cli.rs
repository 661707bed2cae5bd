use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const ASSETS: [&str; 7] = ["circle_r1", "circle_r0.5", "stadium", "rounded_square", "two_disks", "blob", "l_pocket"];

fn asset(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../assets").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bccurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn check_accepts_unit_circle_and_rejects_small_one() {
    let ok = run(&["check", asset("circle_r1").to_str().unwrap()]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout_json(&ok)["ok"], true);

    let bad = run(&["check", asset("circle_r0.5").to_str().unwrap()]);
    assert_eq!(code(&bad), 2);
    let report = stdout_json(&bad);
    assert_eq!(report["violations"][0]["kind"], "ConvexArcTooSharp");
}

#[test]
fn concave_check_flags_reflex_corners() {
    let o = run(&["check-concave", asset("two_disks").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let kinds: Vec<String> = stdout_json(&o)["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["kind"].as_str().unwrap().to_string())
        .collect();
    assert!(kinds.iter().any(|k| k == "ReflexCorner"), "{kinds:?}");
}

#[test]
fn unit_disk_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let o = run(&["unit-disk", asset("stadium").to_str().unwrap(), "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!((c["result"]["r"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(!c["steps"].as_array().unwrap().is_empty());
    for key in ["n", "z", "Uz", "D", "x", "y", "E", "eta2"] {
        assert!(c["steps"][0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn unit_disk_on_sharp_curve_reports_witness() {
    let o = run(&["unit-disk", asset("circle_r0.5").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let line: Value = serde_json::from_slice(o.stderr.split(|b| *b == b'\n').next().unwrap()).unwrap();
    assert_eq!(line["kind"], "CurvatureViolationDetected");
    assert!(line["witness"]["D2"]["r"].is_number());
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"pieces\": [\n    {\"kind\": \"segment\",, }\n").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 65);
    let line: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(line["line"], 3);
    assert!(line["column"].as_u64().unwrap() > 0);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&run(&["no-such-command"])), 64);
    assert_eq!(code(&run(&["offset", asset("circle_r1").to_str().unwrap()])), 64);
    assert_eq!(code(&run(&["--eps", "-1", "check", asset("circle_r1").to_str().unwrap()])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn invalid_curves_fail_validation() {
    let dir = tempfile::tempdir().unwrap();
    let open = dir.path().join("open.json");
    std::fs::write(
        &open,
        r#"{"pieces":[{"kind":"segment","from":[0,0],"to":[1,0]},{"kind":"segment","from":[1,0],"to":[1,1]}]}"#,
    )
    .unwrap();
    let o = run(&["validate", open.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout_json(&o)["closure_gaps"].as_array().unwrap().len(), 1);
    assert_eq!(code(&run(&["check", open.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["validate", asset("blob").to_str().unwrap()])), 0);
}

/// Written curves re-read and re-write to the same bytes.
fn assert_round_trip(path: &std::path::Path) {
    let text = std::fs::read_to_string(path).unwrap();
    let curve = bccurve::io::curve_from_str(&text, bccurve::EPS).unwrap();
    assert!(!curve.was_reversed());
    assert_eq!(bccurve::io::curve_to_string(&curve), text);
    assert_eq!(code(&run(&["validate", path.to_str().unwrap()])), 0);
}

#[test]
fn curve_outputs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name);
    let cases: Vec<(Vec<String>, PathBuf)> = vec![
        (
            vec!["compose".into(), asset("circle_r1").display().to_string(), asset("two_disks").display().to_string()],
            out("composed.json"),
        ),
        (
            vec!["offset".into(), asset("blob").display().to_string(), "--distance".into(), "0.3".into()],
            out("inward.json"),
        ),
        (
            vec!["offset".into(), asset("l_pocket").display().to_string(), "--distance".into(), "-0.25".into()],
            out("outward.json"),
        ),
        (
            vec!["round".into(), asset("l_pocket").display().to_string(), "--radius".into(), "0.5".into(), "--concave".into(), "miter".into()],
            out("rounded.json"),
        ),
    ];
    for (args, path) in cases {
        let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
        full.extend(["-o", path.to_str().unwrap()]);
        let o = run(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_round_trip(&path);
    }
}

#[test]
fn offset_circle_shrinks_radius() {
    let o = run(&["offset", asset("circle_r1").to_str().unwrap(), "--distance", "-1"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["pieces"][0]["radius"], 2.0);
}

#[test]
fn render_draws_curve_and_dashed_disks() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("blob.svg");
    let o = run(&[
        "render",
        asset("blob").to_str().unwrap(),
        "-o",
        svg.to_str().unwrap(),
        "--disk",
        "0",
        "0",
        "1",
        "--disk",
        "-1.9",
        "1",
        "0.5",
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg") && text.contains("version=\"1.1\""));
    assert_eq!(text.matches("<circle").count(), 2);
    assert_eq!(text.matches("stroke-dasharray").count(), 2);
}

#[test]
fn verify_never_changes_exit_codes() {
    for name in ASSETS {
        let p = asset(name);
        let p = p.to_str().unwrap();
        for cmd in ["validate", "check", "check-concave", "inscribed", "unit-disk"] {
            let plain = code(&run(&[cmd, p]));
            let checked = run(&["--verify", cmd, p]);
            assert_eq!(plain, code(&checked), "{cmd} {name}");
            for line in checked.stderr.split(|b| *b == b'\n').filter(|l| !l.is_empty()) {
                let v: Value = serde_json::from_slice(line).expect("diagnostics are JSON lines");
                if v["level"] == "info" {
                    assert_eq!(v["ok"], true, "{cmd} {name}: {v}");
                }
            }
        }
    }
}
