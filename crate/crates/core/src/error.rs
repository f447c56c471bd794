use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate body: {0}")]
    DegenerateBody(String),
    #[error("origin is not interior to the body (margin {margin:e})")]
    OriginNotInterior { margin: f64 },
    #[error("affine map is singular (det = {det:e})")]
    SingularMap { det: f64 },
    #[error("bad shape spec: {0}")]
    BadSpec(String),
    #[error("body is not o-symmetric (asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("body is not in the normalized inscribed-square frame: {0}")]
    NotNormalized(String),
    #[error("point lies outside the body (distance {distance:e})")]
    PointOutside { distance: f64 },
    #[error("point is not on the boundary (gauge {gauge})")]
    NotOnBoundary { gauge: f64 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bad bracket [{lo}, {hi}]: {reason}")]
    BadBracket { lo: f64, hi: f64, reason: String },
}

pub type Result<T> = std::result::Result<T, GeomError>;
