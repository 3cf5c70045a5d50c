use thiserror::Error;

use crate::locus::TrisectionResult;
use crate::oracles::CrossReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point is at the origin, polar angle undefined")]
    DegeneratePoint,

    #[error("circles share a center")]
    ConcentricCircles,

    #[error("circles do not intersect")]
    NoIntersection,

    #[error("angle {radians} rad is outside the supported range {range}")]
    AngleOutOfRange { radians: f64, range: &'static str },

    #[error("parameter {name} = {value} is outside the valid range (minimum {min})")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
    },

    #[error("invalid {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("sample count must be at least 2, got {0}")]
    InvalidSampleCount(usize),

    #[error("empty sampling range: b_min = {b_min}, b_max = {b_max}")]
    InvalidRange { b_min: f64, b_max: f64 },

    #[error(
        "bisection did not reach tolerance {tol} within {max_iter} iterations \
         (angle residual {})",
        best.angle_residual
    )]
    MaxIterationsExceeded {
        tol: f64,
        max_iter: usize,
        best: Box<TrisectionResult>,
    },

    #[error("upper bracket search overflowed at b = {b}")]
    BracketOverflow { b: f64 },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("trisection estimates disagree: {detail}")]
    MismatchDetected {
        detail: String,
        report: Box<CrossReport>,
    },
}
