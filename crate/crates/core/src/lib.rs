//! Planar Jordan curves built from segments and circular arcs, with
//! bounded-curvature checks, unit-disk certificates and toolpath helpers.

pub mod curve;
pub mod error;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod shapes;
pub mod toolpath;
pub mod curvature;
pub mod chain;
pub mod compose;
pub mod disks;

pub use curve::{CurveInterval, CurvePoint, JordanCurve, Location, Orientation, ValidationReport};
pub use error::{GeomError, NotJordanReason, Result};
pub use kernel::{Arc, Disk, Piece, Point, Segment, CONTACT_EPS, EPS};
