//! The two-circle locus and the trisector built on it.
//!
//! Fix the fold width `a`. For `b ≥ √3·a` put `J = (b, a)` on the first
//! fold line, draw circle 1 about `O` through `J` and circle 2 about `J`
//! with radius `2a`. Their counterclockwise intersection `Q` sits at polar
//! angle `3·∠(OJ)`: the chord `JQ = 2a` on a circle of radius `|OJ|`
//! subtends twice `∠(OJ)`, since `sin ∠(OJ) = a / |OJ|`. As `b` grows from
//! `√3·a`, `Q` sweeps from `D = (0, 2a)` toward the x-axis with strictly
//! decreasing polar angle, so bisection on `b` finds the `J` whose `Q`
//! lands on the target ray `OB`. That `Q` is `N`, and `|ON| = |OJ|` is the
//! unit length at which the fold width equals `sin θ`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{circle_circle_intersections, distance, polar_angle, Angle, Circle, Point2};
use crate::report::Report;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 200;

/// Relative residual bound for points produced by [`locus_point`].
pub const LOCUS_TOLERANCE: f64 = 1e-12;

/// Upper-bracket doublings allowed before giving up (`b` up to `2⁶⁴·√3·a`).
const MAX_DOUBLINGS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusParams {
    a: f64,
}

impl LocusParams {
    pub fn new(a: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidParameter {
                name: "fold width a",
                value: a,
            });
        }
        Ok(LocusParams { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `√3·a`, where `Q` starts at `D`.
    pub fn b_start(&self) -> f64 {
        3f64.sqrt() * self.a
    }

    pub fn d_point(&self) -> Point2 {
        Point2::new(0.0, 2.0 * self.a)
    }

    pub fn j_point(&self, b: f64) -> Point2 {
        Point2::new(b, self.a)
    }

    fn residual_scale(&self, b: f64) -> f64 {
        (b * b + self.a * self.a).max(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusPoint {
    pub b: f64,
    pub q: Point2,
    pub residual_circle1: f64,
    pub residual_circle2: f64,
    pub residual_locus_relation: f64,
    pub q_polar_angle: Angle,
}

impl LocusPoint {
    pub fn j_polar_angle(&self, params: &LocusParams) -> Angle {
        Angle::from_radians(params.a.atan2(self.b))
    }
}

pub fn locus_point(params: &LocusParams, b: f64) -> Result<LocusPoint> {
    let a = params.a;
    let b_start = params.b_start();
    if !(b >= b_start) || !b.is_finite() {
        return Err(Error::ParameterOutOfRange {
            name: "b",
            value: b,
            min: b_start,
        });
    }
    let j = params.j_point(b);
    let c1 = Circle::new(Point2::ORIGIN, j.norm())?;
    let c2 = Circle::new(j, 2.0 * a)?;
    let points = circle_circle_intersections(&c1, &c2)?;

    // Counterclockwise of J. The other branch sits at −∠(OJ), which wraps
    // to a larger normalized angle, so compare orientation rather than angle.
    let q = points
        .iter()
        .copied()
        .max_by(|p, r| j.cross(*p).total_cmp(&j.cross(*r)))
        .ok_or(Error::NoIntersection)?;

    Ok(LocusPoint {
        b,
        q,
        residual_circle1: c1.residual(q).abs(),
        residual_circle2: c2.residual(q).abs(),
        residual_locus_relation: locus_relation_residual(params, b, q).abs(),
        q_polar_angle: polar_angle(q)?,
    })
}

/// `b·x + a·y − (b² − a²)`, zero on the locus.
pub fn locus_relation_residual(params: &LocusParams, b: f64, q: Point2) -> f64 {
    let a = params.a;
    b * q.x + a * q.y - (b - a) * (b + a)
}

/// Distance from `O` to the locus along the ray at `phi`: `a / sin(phi/3)`.
pub fn locus_polar_radius(params: &LocusParams, phi: Angle) -> Result<f64> {
    let p = phi.radians();
    if !(p > 0.0 && p <= FRAC_PI_2) {
        return Err(Error::AngleOutOfRange {
            radians: p,
            range: "(0, π/2]",
        });
    }
    Ok(params.a / (p / 3.0).sin())
}

/// `n` locus points at evenly spaced `b` in `[b_min, b_max]`, endpoints
/// included, ascending in `b`.
pub fn sample_locus(
    params: &LocusParams,
    b_min: f64,
    b_max: f64,
    n: usize,
) -> Result<Vec<LocusPoint>> {
    if n < 2 {
        return Err(Error::InvalidSampleCount(n));
    }
    if !(b_min < b_max) || !b_max.is_finite() {
        return Err(Error::InvalidRange { b_min, b_max });
    }
    if !(b_min >= params.b_start()) {
        return Err(Error::ParameterOutOfRange {
            name: "b_min",
            value: b_min,
            min: params.b_start(),
        });
    }
    let step = (b_max - b_min) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let b = if i == n - 1 {
                b_max
            } else {
                b_min + step * i as f64
            };
            locus_point(params, b)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrisectionResult {
    pub three_theta: Angle,
    pub theta: Angle,
    pub b_star: f64,
    pub unit_length: f64,
    pub n_point: Point2,
    pub iterations: usize,
    pub final_bracket_width: f64,
    /// `|∠(ON) − three_theta|` in radians.
    pub angle_residual: f64,
}

impl TrisectionResult {
    /// Fold width in units of `ON`; equals `sin θ`.
    pub fn sin_theta_normalized(&self, params: &LocusParams) -> f64 {
        params.a / self.unit_length
    }

    /// `b*` in units of `ON`; equals `cos θ`.
    pub fn b_star_normalized(&self) -> f64 {
        self.b_star / self.unit_length
    }
}

/// Solves for the `J` whose locus point lands on the ray at `three_theta`.
///
/// The bracket starts at `b = √3·a`, where `Q = D` at 90°, and its upper end
/// doubles until `Q` falls below the target ray. Bisection then runs until
/// the bracket cannot be split further in floating point or `max_iter` is
/// spent; `tol` is the acceptance bound on the final angle residual.
pub fn trisect(
    three_theta: Angle,
    params: &LocusParams,
    tol: f64,
    max_iter: usize,
) -> Result<TrisectionResult> {
    let target = three_theta.radians();
    if !(target > 0.0 && target <= FRAC_PI_2) {
        return Err(Error::AngleOutOfRange {
            radians: target,
            range: "(0, π/2]",
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
        });
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter {
            name: "max_iter",
            value: 0.0,
        });
    }

    let excess =
        |b: f64| -> Result<f64> { Ok(locus_point(params, b)?.q_polar_angle.radians() - target) };

    let mut lo = params.b_start();
    let mut f_lo = excess(lo)?;
    if f_lo.abs() <= tol || f_lo < 0.0 {
        // Only reachable for targets at (or within rounding of) 90°.
        return finish(three_theta, params, lo, 0, 0.0, tol, max_iter);
    }

    let mut hi = lo;
    let mut f_hi = f_lo;
    let mut doublings = 0;
    while f_hi > 0.0 {
        if doublings == MAX_DOUBLINGS {
            return Err(Error::BracketOverflow { b: hi });
        }
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = excess(hi)?;
        doublings += 1;
    }
    if f_hi == 0.0 {
        return finish(three_theta, params, hi, 0, 0.0, tol, max_iter);
    }

    let mut iterations = 0;
    while iterations < max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let f_mid = excess(mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            f_lo = 0.0;
            f_hi = 0.0;
            break;
        }
        if f_mid > 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    let b_star = if f_lo.abs() <= f_hi.abs() { lo } else { hi };
    finish(
        three_theta,
        params,
        b_star,
        iterations,
        hi - lo,
        tol,
        max_iter,
    )
}

fn finish(
    three_theta: Angle,
    params: &LocusParams,
    b_star: f64,
    iterations: usize,
    final_bracket_width: f64,
    tol: f64,
    max_iter: usize,
) -> Result<TrisectionResult> {
    let n = locus_point(params, b_star)?;
    let result = TrisectionResult {
        three_theta,
        theta: Angle::from_radians(params.a.atan2(b_star)),
        b_star,
        unit_length: params.j_point(b_star).norm(),
        n_point: n.q,
        iterations,
        final_bracket_width,
        angle_residual: (n.q_polar_angle.radians() - three_theta.radians()).abs(),
    };
    if result.angle_residual > tol {
        return Err(Error::MaxIterationsExceeded {
            tol,
            max_iter,
            best: Box::new(result),
        });
    }
    Ok(result)
}

/// Re-derives every relationship a solved trisection must satisfy.
///
/// Length residuals are compared against `max(tol, 1e-12)` scaled by the
/// unit length (at least 1); the locus relation is quadratic in lengths and
/// is scaled by `max(1, a² + b*²)`.
pub fn verify_trisection(r: &TrisectionResult, params: &LocusParams, tol: f64) -> Report {
    let a = params.a;
    let base = tol.max(LOCUS_TOLERANCE);
    let length_scale = r.unit_length.max(1.0);
    let theta = r.theta.radians();
    let j = params.j_point(r.b_star);

    let mut report = Report::new();
    report.push(
        "three_theta",
        (3.0 * theta - r.three_theta.radians()).abs(),
        base,
    );
    report.push(
        "jn_minus_2a",
        (distance(r.n_point, j) - 2.0 * a).abs(),
        base * length_scale,
    );
    report.push(
        "on_minus_unit_length",
        (distance(Point2::ORIGIN, r.n_point) - r.unit_length).abs(),
        base * length_scale,
    );
    report.push(
        "oj_minus_unit_length",
        (j.norm() - r.unit_length).abs(),
        base * length_scale,
    );
    report.push(
        "sin_theta_scale",
        (r.sin_theta_normalized(params) - theta.sin()).abs(),
        base,
    );
    report.push(
        "locus_relation",
        locus_relation_residual(params, r.b_star, r.n_point).abs(),
        base * params.residual_scale(r.b_star),
    );
    report
}
