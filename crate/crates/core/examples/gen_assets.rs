//! Writes the sample curves used by the tests and the README into a directory.
//!
//! `cargo run -p bccurve --example gen_assets -- assets`

use std::path::PathBuf;

use bccurve::compose::compose;
use bccurve::io::curve_to_string;
use bccurve::kernel::Point;
use bccurve::{shapes, JordanCurve};

fn blob() -> JordanCurve {
    let lobes = [
        (Point::new(0.0, 0.0), 1.6),
        (Point::new(2.3, 0.6), 1.2),
        (Point::new(1.1, -1.7), 1.05),
        (Point::new(-1.9, 1.0), 1.1),
        (Point::new(-0.6, 2.0), 1.0),
    ];
    let mut acc = shapes::circle(lobes[0].0, lobes[0].1);
    for &(c, r) in &lobes[1..] {
        acc = compose(&acc, &shapes::circle(c, r)).expect("lobes overlap transversally");
    }
    acc
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "assets".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");
    let curves = [
        ("circle_r1", shapes::circle(Point::new(0.0, 0.0), 1.0)),
        ("circle_r0.5", shapes::circle(Point::new(0.0, 0.0), 0.5)),
        ("stadium", shapes::stadium()),
        ("rounded_square", shapes::rounded_rectangle(4.0, 4.0, 1.0).unwrap()),
        ("two_disks", shapes::two_disks(1.5)),
        ("blob", blob()),
        ("l_pocket", shapes::l_pocket()),
    ];
    for (name, curve) in curves {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, curve_to_string(&curve)).expect("write asset");
        println!("{}", path.display());
    }
}
