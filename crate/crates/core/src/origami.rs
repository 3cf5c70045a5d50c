//! Abe's origami trisection, reconstructed as an end-state point set.
//!
//! With the unit length `OH = OC = 1` and fold width `sin θ`, the fold
//! leaves `O` on the x-axis base `OA`, the first crease at `y = sin θ`, `D`
//! on the y-axis at twice the fold width, `H` on the first crease, and `C`
//! on the ray `OB` at `3θ`. `G` bisects the chord `HC`, so `OH`, `OG` and
//! `OC` split `∠AOB` into three equal parts.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{distance, foot_of_perpendicular, polar_angle, Angle, Point2, Ray};
use crate::report::Report;

/// Residual bound met by every construction from [`abe_construct`].
pub const ABE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbeConstruction {
    pub three_theta: Angle,
    pub theta: Angle,
    pub o: Point2,
    pub d: Point2,
    pub s: Point2,
    pub h: Point2,
    pub c: Point2,
    pub g: Point2,
    pub p: Point2,
    pub alpha: Angle,
    pub beta: Angle,
    pub gamma: Angle,
    pub unit_length: f64,
}

pub fn abe_construct(three_theta: Angle) -> Result<AbeConstruction> {
    let t3 = three_theta.radians();
    if !(t3 > 0.0 && t3 < FRAC_PI_2) {
        return Err(Error::AngleOutOfRange {
            radians: t3,
            range: "(0, π/2)",
        });
    }
    let theta = Angle::from_radians(t3 / 3.0);
    let fold = theta.radians().sin();

    let o = Point2::ORIGIN;
    let d = Point2::new(0.0, 2.0 * fold);
    let s = Point2::new(0.0, fold);
    let h = Point2::from_polar(1.0, theta);
    let c = Point2::from_polar(1.0, three_theta);
    let g = h.midpoint(c);
    let p = foot_of_perpendicular(h, &Ray::x_axis());

    let (alpha, beta, gamma) = trisecting_angles(h, g, c)?;
    Ok(AbeConstruction {
        three_theta,
        theta,
        o,
        d,
        s,
        h,
        c,
        g,
        p,
        alpha,
        beta,
        gamma,
        unit_length: distance(o, h),
    })
}

/// `∠(OA, OH)`, `∠(OH, OG)` and `∠(OG, OC)`.
fn trisecting_angles(h: Point2, g: Point2, c: Point2) -> Result<(Angle, Angle, Angle)> {
    let ah = polar_angle(h)?;
    let ag = polar_angle(g)?;
    let ac = polar_angle(c)?;
    Ok((ah, ag - ah, ac - ag))
}

/// Residuals for every equality the folded figure is supposed to satisfy.
///
/// Angles are re-measured from the points, so a construction whose points
/// were moved after the fact shows up here even if its stored angles were
/// left untouched. `cp_minus_sin_theta` is informational only: with `P` at
/// the foot of `H`, `CP` does not equal `sin θ` in general.
pub fn abe_verify(c: &AbeConstruction) -> Report {
    let mut report = Report::new();
    let tol = ABE_TOLERANCE;
    let theta = c.theta.radians();
    let (sin_t, cos_t) = theta.sin_cos();

    let oh = distance(c.o, c.h);
    let oc = distance(c.o, c.c);
    let od = distance(c.o, c.d);
    let hc = distance(c.h, c.c);
    let os = distance(c.o, c.s);
    let sd = distance(c.s, c.d);
    let hg = distance(c.h, c.g);
    let gc = distance(c.g, c.c);

    report.push("oh_minus_oc", (oh - oc).abs(), tol);
    report.push("oh_minus_unit", (oh - c.unit_length).abs(), tol);
    report.push("hc_minus_od", (hc - od).abs(), tol);
    report.push("os_minus_sd", (os - sd).abs(), tol);
    report.push("hg_minus_gc", (hg - gc).abs(), tol);
    report.push("os_minus_hg", (os - hg).abs(), tol);
    report.push("os_minus_sin_theta", (os - sin_t).abs(), tol);

    let measured = trisecting_angles(c.h, c.g, c.c);
    let (alpha, beta, gamma) = match measured {
        Ok((a, b, g)) => (a.radians(), b.radians(), g.radians()),
        Err(_) => (f64::NAN, f64::NAN, f64::NAN),
    };
    report.push("alpha_minus_beta", (alpha - beta).abs(), tol);
    report.push("beta_minus_gamma", (beta - gamma).abs(), tol);
    report.push(
        "angle_sum_minus_target",
        (alpha + beta + gamma - c.three_theta.radians()).abs(),
        tol,
    );

    report.push(
        "op_minus_cos_theta",
        (distance(c.o, c.p) - cos_t).abs(),
        tol,
    );
    report.push(
        "hp_minus_sin_theta",
        (distance(c.h, c.p) - sin_t).abs(),
        tol,
    );
    report.push("h_off_first_fold", (c.h.y - sin_t).abs(), tol);
    let ob = Ray::new(c.o, c.three_theta);
    report.push("c_off_ray_ob", ob.line_distance(c.c), tol);
    report.push_info("cp_minus_sin_theta", (distance(c.c, c.p) - sin_t).abs());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    #[test]
    fn sixty_degrees() {
        let c = abe_construct(deg(60.0)).unwrap();
        for a in [c.alpha, c.beta, c.gamma] {
            assert!((a.degrees() - 20.0).abs() < 1e-12);
        }
        let s20 = 20f64.to_radians().sin();
        let c20 = 20f64.to_radians().cos();
        assert!((c.d.y - 2.0 * s20).abs() < 1e-15);
        assert!((c.d.y - 0.6840403).abs() < 1e-7);
        assert!((c.h.x - 0.9396926).abs() < 1e-7 && (c.h.x - c20).abs() < 1e-15);
        assert!((c.h.y - 0.3420201).abs() < 1e-7);
        let report = abe_verify(&c);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn thirty_degrees_equal_segments() {
        let c = abe_construct(deg(30.0)).unwrap();
        let s10 = 10f64.to_radians().sin();
        assert!((s10 - 0.1736482).abs() < 1e-7);
        for (p, q) in [(c.o, c.s), (c.s, c.d), (c.h, c.g), (c.g, c.c)] {
            assert!((distance(p, q) - s10).abs() < 1e-12);
        }
    }

    #[test]
    fn range_boundaries() {
        assert!(matches!(
            abe_construct(Angle::from_radians(FRAC_PI_2)),
            Err(Error::AngleOutOfRange { .. })
        ));
        assert!(abe_construct(Angle::ZERO).is_err());
        assert!(abe_construct(deg(120.0)).is_err());
        let c = abe_construct(deg(89.9999)).unwrap();
        assert!(c.h.is_finite() && c.c.is_finite() && c.g.is_finite());
    }

    #[test]
    fn chord_approaches_unit_near_ninety() {
        let c = abe_construct(Angle::from_radians(FRAC_PI_2 - 1e-9)).unwrap();
        let hc = distance(c.h, c.c);
        let od = distance(c.o, c.d);
        assert!((hc - od).abs() < 1e-12);
        assert!((hc - 1.0).abs() < 1e-9);
    }

    #[test]
    fn perturbed_h_is_flagged() {
        let mut c = abe_construct(deg(60.0)).unwrap();
        c.h = c.h + Point2::new(0.0, 1e-3);
        let report = abe_verify(&c);
        assert!(!report.passed());

        // ∠AOH grows by δ and ∠HOG shrinks by δ, so α − β moves by 2δ
        let theta = 20f64.to_radians();
        let delta = c.h.y.atan2(c.h.x) - theta;
        let expected = 2.0 * delta;
        let got = report.residual("alpha_minus_beta").unwrap();
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
        assert!(got > 5e-4 && got < 5e-3);
    }

    #[test]
    fn cp_reading_is_informational() {
        let c = abe_construct(deg(45.0)).unwrap();
        let report = abe_verify(&c);
        assert!(report.passed());
        let cp = report.get("cp_minus_sin_theta").unwrap();
        assert!(!cp.gating());
        assert!(cp.residual > 1e-3);
    }
}
