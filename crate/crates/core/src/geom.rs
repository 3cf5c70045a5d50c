//! Planar primitives in construction coordinates.
//!
//! Everything here is a pure function of its inputs. Angles are carried in
//! radians and normalized into `[0, 2π)`; degrees only appear at the CLI.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative width of the tangency band used by [`circle_circle_intersections`].
pub const TANGENCY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Checked constructor, rejecting NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidParameter {
                name: "x",
                value: x,
            });
        }
        if !y.is_finite() {
            return Err(Error::InvalidParameter {
                name: "y",
                value: y,
            });
        }
        Ok(Point2 { x, y })
    }

    pub fn from_polar(radius: f64, angle: Angle) -> Self {
        let (s, c) = angle.radians().sin_cos();
        Point2::new(radius * c, radius * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product; positive when `other` lies
    /// counterclockwise of `self`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Rotation about the origin.
    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An angle normalized into `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(radians: f64) -> Self {
        Angle(normalize(radians))
    }

    pub fn from_degrees(degrees: f64) -> Self {
        Angle::from_radians(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Smallest absolute difference between two directions, in `[0, π]`.
    pub fn separation(self, other: Angle) -> f64 {
        let d = (self.0 - other.0).abs();
        d.min(TAU - d)
    }
}

fn normalize(radians: f64) -> f64 {
    let r = radians.rem_euclid(TAU);
    // rem_euclid of a tiny negative value rounds up to exactly TAU
    if r >= TAU {
        0.0
    } else {
        r
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::from_radians(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::from_radians(self.0 - rhs.0)
    }
}

impl Mul<f64> for Angle {
    type Output = Angle;
    fn mul(self, k: f64) -> Angle {
        Angle::from_radians(self.0 * k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    center: Point2,
    radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidParameter {
                name: "circle center",
                value: if center.x.is_finite() {
                    center.y
                } else {
                    center.x
                },
            });
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter {
                name: "circle radius",
                value: radius,
            });
        }
        Ok(Circle { center, radius })
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Signed distance of `p` from the circle itself.
    pub fn residual(&self, p: Point2) -> f64 {
        distance(p, self.center) - self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    pub origin: Point2,
    pub direction: Angle,
}

impl Ray {
    pub fn new(origin: Point2, direction: Angle) -> Self {
        Ray { origin, direction }
    }

    /// The ray from the origin along the positive x-axis.
    pub fn x_axis() -> Self {
        Ray::new(Point2::ORIGIN, Angle::ZERO)
    }

    pub fn unit(&self) -> Point2 {
        Point2::from_polar(1.0, self.direction)
    }

    pub fn at(&self, t: f64) -> Point2 {
        self.origin + self.unit() * t
    }

    /// Perpendicular distance from `p` to the line carrying the ray.
    pub fn line_distance(&self, p: Point2) -> f64 {
        self.unit().cross(p - self.origin).abs()
    }
}

pub fn polar_angle(p: Point2) -> Result<Angle> {
    if p.x == 0.0 && p.y == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    Ok(Angle::from_radians(p.y.atan2(p.x)))
}

pub fn distance(p: Point2, q: Point2) -> f64 {
    (q - p).norm()
}

/// Orthogonal projection of `p` onto the line carrying `r`.
pub fn foot_of_perpendicular(p: Point2, r: &Ray) -> Point2 {
    let u = r.unit();
    r.origin + u * (p - r.origin).dot(u)
}

/// Intersections of two circles, via the radical line.
///
/// Subtracting the two circle equations leaves a line; its distance from
/// `c1`'s center is `(d² + r1² − r2²) / 2d`, and the half-chord comes from
/// the product form of the discriminant so that a small circle meeting a
/// large one keeps its precision. Two points are returned in ascending
/// polar angle about `c1`'s center. When the narrowest gap between the
/// circles is within [`TANGENCY_TOLERANCE`] of the larger radius, the
/// single tangent point is returned.
pub fn circle_circle_intersections(c1: &Circle, c2: &Circle) -> Result<Vec<Point2>> {
    let offset = c2.center - c1.center;
    let d = offset.norm();
    if d == 0.0 {
        return Err(Error::ConcentricCircles);
    }
    let (r1, r2) = (c1.radius, c2.radius);

    // Both gaps are >= 0 exactly when the circles meet.
    let outer_gap = r1 + r2 - d;
    let inner_gap = d - (r1 - r2).abs();
    let band = TANGENCY_TOLERANCE * r1.max(r2);
    if outer_gap < -band || inner_gap < -band {
        return Err(Error::NoIntersection);
    }

    let u = offset * (1.0 / d);
    let along = (d * d + (r1 - r2) * (r1 + r2)) / (2.0 * d);
    let base = c1.center + u * along;
    if outer_gap <= band || inner_gap <= band {
        return Ok(vec![base]);
    }

    let product = (d + r1 + r2) * outer_gap * inner_gap * (d + (r1 - r2).abs());
    let half_chord = product.max(0.0).sqrt() / (2.0 * d);
    let n = u.perp() * half_chord;
    let mut points = [base + n, base - n];

    let key = |p: Point2| {
        polar_angle(p - c1.center)
            .map(Angle::radians)
            .unwrap_or(0.0)
    };
    points.sort_by(|p, q| key(*p).total_cmp(&key(*q)));
    Ok(points.to_vec())
}

/// Intersections of the line carrying `ray` with `circle`, as ray
/// parameters `t` in ascending order (negative `t` lies behind the origin).
pub fn line_circle_parameters(ray: &Ray, circle: &Circle) -> Result<Vec<f64>> {
    let u = ray.unit();
    let w = ray.origin - circle.center;
    // t² + 2(u·w)t + |w|² − r² = 0
    let half_b = u.dot(w);
    let c = (w.norm() - circle.radius) * (w.norm() + circle.radius);
    let disc = half_b * half_b - c;
    let scale = circle.radius * circle.radius;
    if disc < -TANGENCY_TOLERANCE * scale {
        return Err(Error::NoIntersection);
    }
    if disc <= TANGENCY_TOLERANCE * scale {
        return Ok(vec![-half_b]);
    }
    let root = disc.sqrt();
    // Avoid cancellation: compute the larger-magnitude root first.
    let q = -half_b - half_b.signum() * root;
    let (t1, t2) = if q == 0.0 { (-root, root) } else { (q, c / q) };
    Ok(if t1 <= t2 { vec![t1, t2] } else { vec![t2, t1] })
}
