//! Independent checks on the locus and origami results.
//!
//! None of these route through the locus solver: the closed form divides by
//! three, the triple-angle identity works on cosines only, and the chord
//! diagram measures equal chords on the circle whose diameter is the unit
//! segment `AF`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{distance, line_circle_parameters, Angle, Circle, Point2, Ray};
use crate::locus::{trisect, verify_trisection, LocusParams, DEFAULT_MAX_ITER};
use crate::origami::{abe_construct, abe_verify};
use crate::report::Report;

/// Closed-form trisection. Ground truth for verification only.
pub fn oracle_theta(three_theta: Angle) -> Angle {
    Angle::from_radians(three_theta.radians() / 3.0)
}

/// `|cos 3θ − (4cos³θ − 3cosθ)|`.
pub fn triple_angle_residual(theta: Angle, three_theta: Angle) -> f64 {
    let c = theta.radians().cos();
    (three_theta.radians().cos() - (4.0 * c * c * c - 3.0 * c)).abs()
}

/// The addition-formula figure reduced to its circle and chords.
///
/// `AF` is a unit segment at angle `3θ`; the circle on `AF` as diameter has
/// center `J` and radius ½. `K` and `L` are where the rays at `2θ` and `θ`
/// leave `A` and meet that circle again, and `E` is the foot of `F` on the
/// base. `B = (1, 0)` is the square's corner and only used for drawing;
/// `fold_bg` is the distance from `G = (cos θ, sin θ)` to the base line `AB`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChordDiagram {
    pub three_theta: Angle,
    pub a: Point2,
    pub b: Point2,
    pub e: Point2,
    pub f: Point2,
    pub g: Point2,
    pub j: Point2,
    pub k: Point2,
    pub l: Point2,
    pub chord_fk: f64,
    pub chord_kl: f64,
    pub chord_le: f64,
    pub fold_bg: f64,
}

impl ChordDiagram {
    pub fn chord_gf(&self) -> f64 {
        distance(self.g, self.f)
    }

    /// θ recovered from a chord: each chord of the unit-diameter circle is
    /// `sin θ`.
    pub fn measured_theta(&self) -> Angle {
        Angle::from_radians(self.chord_fk.asin())
    }
}

pub fn chord_diagram(three_theta: Angle) -> Result<ChordDiagram> {
    let t3 = three_theta.radians();
    if !(t3 > 0.0 && t3 < FRAC_PI_2) {
        return Err(Error::AngleOutOfRange {
            radians: t3,
            range: "(0, π/2)",
        });
    }
    let theta = t3 / 3.0;
    let a = Point2::ORIGIN;
    let f = Point2::from_polar(1.0, three_theta);
    let e = Point2::new(f.x, 0.0);
    let j = a.midpoint(f);
    let circle = Circle::new(j, 0.5)?;

    let second_hit = |angle: f64| -> Result<Point2> {
        let ray = Ray::new(a, Angle::from_radians(angle));
        let ts = line_circle_parameters(&ray, &circle)?;
        let t = ts.into_iter().fold(f64::NEG_INFINITY, f64::max);
        Ok(ray.at(t))
    };
    let k = second_hit(2.0 * theta)?;
    let l = second_hit(theta)?;

    let g = Point2::from_polar(1.0, Angle::from_radians(theta));
    let base = Ray::x_axis();
    Ok(ChordDiagram {
        three_theta,
        a,
        b: Point2::new(1.0, 0.0),
        e,
        f,
        g,
        j,
        k,
        l,
        chord_fk: distance(f, k),
        chord_kl: distance(k, l),
        chord_le: distance(l, e),
        fold_bg: base.line_distance(g),
    })
}

pub fn chord_verify(d: &ChordDiagram, tol: f64) -> Report {
    let sin_t = (d.three_theta.radians() / 3.0).sin();
    let mut report = Report::new();
    for (name, p) in [
        ("ja", d.a),
        ("jf", d.f),
        ("je", d.e),
        ("jk", d.k),
        ("jl", d.l),
    ] {
        report.push(name, (distance(d.j, p) - 0.5).abs(), tol);
    }
    report.push("fk_minus_sin_theta", (d.chord_fk - sin_t).abs(), tol);
    report.push("kl_minus_sin_theta", (d.chord_kl - sin_t).abs(), tol);
    report.push("le_minus_sin_theta", (d.chord_le - sin_t).abs(), tol);
    report.push("bg_minus_sin_theta", (d.fold_bg - sin_t).abs(), tol);
    report.push(
        "gf_minus_2sin_theta",
        (d.chord_gf() - 2.0 * sin_t).abs(),
        tol,
    );
    report
}

/// One θ estimate per method, plus every residual gathered along the way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossReport {
    pub three_theta: Angle,
    pub a: f64,
    pub tol: f64,
    pub theta_locus: Angle,
    pub theta_origami: Option<Angle>,
    pub theta_oracle: Angle,
    pub theta_chord: Option<Angle>,
    pub report: Report,
}

impl CrossReport {
    /// Largest pairwise disagreement between the θ estimates.
    pub fn max_theta_spread(&self) -> f64 {
        let thetas = self.estimates();
        let mut spread: f64 = 0.0;
        for (i, x) in thetas.iter().enumerate() {
            for y in &thetas[i + 1..] {
                spread = spread.max(x.separation(*y));
            }
        }
        spread
    }

    fn estimates(&self) -> Vec<Angle> {
        let mut v = vec![self.theta_locus, self.theta_oracle];
        v.extend(self.theta_origami);
        v.extend(self.theta_chord);
        v
    }
}

/// Runs every method on the same target and demands agreement within `tol`.
///
/// The origami and chord figures are only defined below 90°; at exactly
/// 90° both are skipped and the locus is checked against the closed form
/// and the triple-angle identity alone.
pub fn cross_validate(three_theta: Angle, a: f64, tol: f64) -> Result<CrossReport> {
    let params = LocusParams::new(a)?;
    let solved = trisect(three_theta, &params, tol, DEFAULT_MAX_ITER)?;
    let oracle = oracle_theta(three_theta);

    let mut report = Report::new();
    for c in verify_trisection(&solved, &params, tol).checks {
        report.checks.push(prefixed("locus", c));
    }

    let right_angle = three_theta.radians() == FRAC_PI_2;
    let theta_origami = if right_angle {
        None
    } else {
        let abe = abe_construct(three_theta)?;
        for c in abe_verify(&abe).checks {
            report.checks.push(prefixed("origami", c));
        }
        Some(abe.alpha)
    };

    let theta_chord = if right_angle {
        None
    } else {
        let diagram = chord_diagram(three_theta)?;
        for c in chord_verify(&diagram, tol.max(1e-12)).checks {
            report.checks.push(prefixed("chord", c));
        }
        Some(diagram.measured_theta())
    };

    report.push(
        "triple_angle_locus",
        triple_angle_residual(solved.theta, three_theta),
        tol,
    );
    report.push(
        "triple_angle_oracle",
        triple_angle_residual(oracle, three_theta),
        tol,
    );

    let mut cross = CrossReport {
        three_theta,
        a,
        tol,
        theta_locus: solved.theta,
        theta_origami,
        theta_oracle: oracle,
        theta_chord,
        report,
    };
    let spread = cross.max_theta_spread();
    cross.report.push("theta_spread", spread, tol);

    if !cross.report.passed() {
        let detail = cross
            .report
            .failures()
            .map(|c| format!("{} = {:e}", c.name, c.residual))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::MismatchDetected {
            detail,
            report: Box::new(cross),
        });
    }
    Ok(cross)
}

fn prefixed(prefix: &str, mut c: crate::report::Check) -> crate::report::Check {
    c.name = format!("{prefix}.{}", c.name);
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    #[test]
    fn oracle_examples() {
        assert!((oracle_theta(deg(90.0)).degrees() - 30.0).abs() < 1e-12);
        assert!((oracle_theta(deg(60.0)).degrees() - 20.0).abs() < 1e-12);
        assert_eq!(oracle_theta(Angle::ZERO).radians(), 0.0);
    }

    #[test]
    fn triple_angle_examples() {
        assert!(triple_angle_residual(deg(30.0), deg(90.0)) < 1e-15);
        assert!(triple_angle_residual(deg(20.0), deg(60.0)) < 1e-15);
        let c = 25f64.to_radians().cos();
        let expected = (4.0 * c * c * c - 3.0 * c).abs();
        let got = triple_angle_residual(deg(25.0), deg(90.0));
        assert!((got - expected).abs() < 1e-15);
        assert!(got > 0.2);
    }

    #[test]
    fn chords_at_ninety_limit_and_sixty() {
        let d = chord_diagram(deg(60.0)).unwrap();
        let s20 = 20f64.to_radians().sin();
        for c in [d.chord_fk, d.chord_kl, d.chord_le] {
            assert!((c - s20).abs() < 1e-12);
            assert!((c - 0.3420201).abs() < 1e-7);
        }
        assert!((d.chord_gf() - 0.6840403).abs() < 1e-7);
        assert!(chord_verify(&d, 1e-12).passed());

        let d = chord_diagram(Angle::from_radians(FRAC_PI_2 - 1e-12)).unwrap();
        for c in [d.chord_fk, d.chord_kl, d.chord_le, d.fold_bg] {
            assert!((c - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn chord_range() {
        assert!(chord_diagram(deg(90.0)).is_err());
        assert!(chord_diagram(Angle::ZERO).is_err());
    }

    #[test]
    fn cross_validate_examples() {
        let r = cross_validate(deg(75.0), 1.0, 1e-10).unwrap();
        let (origami, chord) = (r.theta_origami.unwrap(), r.theta_chord.unwrap());
        for t in [r.theta_locus, origami, r.theta_oracle, chord] {
            assert!((t.degrees() - 25.0).abs() < 1e-8);
        }

        let r = cross_validate(deg(90.0), 0.5, 1e-10).unwrap();
        assert!((r.theta_locus.degrees() - 30.0).abs() < 1e-8);
        assert!(r.theta_chord.is_none() && r.theta_origami.is_none());

        assert!(matches!(
            cross_validate(deg(100.0), 1.0, 1e-10),
            Err(Error::AngleOutOfRange { .. })
        ));
    }
}
