use thiserror::Error;

use crate::curvature::ViolationWitness;
use crate::curve::ValidationReport;
use crate::kernel::Point;

/// Why a composition does not yield a single Jordan curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotJordanReason {
    /// The curves do not meet and neither contains the other.
    Disjoint,
    /// The curves touch without crossing.
    TangentialDegeneracy,
    /// The traced outer boundary is not a simple closed curve.
    NonSimpleBoundary,
}

impl NotJordanReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NotJordanReason::Disjoint => "disjoint",
            NotJordanReason::TangentialDegeneracy => "tangential",
            NotJordanReason::NonSimpleBoundary => "non-simple",
        }
    }
}

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("point lies on the curve")]
    PointOnCurve,
    #[error("circles coincide")]
    CoincidentCircles,
    #[error("winding residue too large: {0}")]
    NumericalInconsistency(String),
    #[error("no interior probe could be classified")]
    DegenerateCurve,
    #[error("interval endpoints coincide")]
    IdenticalEndpoints,
    #[error("cap endpoints do not meet the interval endpoints (gap {0:e})")]
    EndpointMismatch(f64),
    #[error("spliced curve is not simple")]
    SelfIntersection,
    #[error("curve lies inside the disk")]
    CurveInsideDisk,
    #[error("curve touches the disk boundary without crossing at {0:?}")]
    TangentialCrossing(Point),
    #[error("invalid curve: {0}")]
    InvalidCurve(Box<ValidationReport>),
    #[error("local curvature violation at the requested point")]
    LocalViolation,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no covering disk exists on the search line")]
    CoverageInfeasible,
    #[error("bad tangent data: {0}")]
    BadTangentData(String),
    #[error("curve violates bounded convex curvature")]
    CurvatureViolationDetected(Box<ViolationWitness>),
    #[error("iteration budget of {0} steps exceeded")]
    IterationBudgetExceeded(usize),
    #[error("curves share a boundary piece of positive length")]
    TangentialOverlap,
    #[error("composition is not a Jordan curve ({})", .0.as_str())]
    NotJordan(NotJordanReason),
    #[error("feature too narrow between pieces {0} and {1}")]
    FeatureTooNarrow(usize, usize),
    #[error("corner at vertex {0} cannot hold the rounding arc")]
    CornerTooTight(usize),
    #[error("grid of {0} cells exceeds the limit")]
    GridTooLarge(u64),
    #[error("mask has no interior cells")]
    EmptyInterior,
}

impl GeomError {
    /// Errors that point at floating-point trouble rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            GeomError::NumericalInconsistency(_)
                | GeomError::IterationBudgetExceeded(_)
                | GeomError::CoverageInfeasible
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GeomError::InvalidInput(_) => "InvalidInput",
            GeomError::PointOnCurve => "PointOnCurve",
            GeomError::CoincidentCircles => "CoincidentCircles",
            GeomError::NumericalInconsistency(_) => "NumericalInconsistency",
            GeomError::DegenerateCurve => "DegenerateCurve",
            GeomError::IdenticalEndpoints => "IdenticalEndpoints",
            GeomError::EndpointMismatch(_) => "EndpointMismatch",
            GeomError::SelfIntersection => "SelfIntersection",
            GeomError::CurveInsideDisk => "CurveInsideDisk",
            GeomError::TangentialCrossing(_) => "TangentialCrossing",
            GeomError::InvalidCurve(_) => "InvalidCurve",
            GeomError::LocalViolation => "LocalViolation",
            GeomError::PreconditionFailed(_) => "PreconditionFailed",
            GeomError::CoverageInfeasible => "CoverageInfeasible",
            GeomError::BadTangentData(_) => "BadTangentData",
            GeomError::CurvatureViolationDetected(_) => "CurvatureViolationDetected",
            GeomError::IterationBudgetExceeded(_) => "IterationBudgetExceeded",
            GeomError::TangentialOverlap => "TangentialOverlap",
            GeomError::NotJordan(_) => "NotJordan",
            GeomError::FeatureTooNarrow(..) => "FeatureTooNarrow",
            GeomError::CornerTooTight(_) => "CornerTooTight",
            GeomError::GridTooLarge(_) => "GridTooLarge",
            GeomError::EmptyInterior => "EmptyInterior",
        }
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
