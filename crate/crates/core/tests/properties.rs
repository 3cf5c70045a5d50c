//! Property tests for the geometric primitives, the locus, and the two
//! independent trisection figures.

use std::f64::consts::{FRAC_PI_2, TAU};

use proptest::prelude::*;
use trisectrix::geom::{circle_circle_intersections, distance, polar_angle, Angle, Circle, Point2};
use trisectrix::locus::{
    locus_point, locus_polar_radius, trisect, LocusParams, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use trisectrix::oracles::{chord_diagram, oracle_theta, triple_angle_residual};
use trisectrix::origami::{abe_construct, abe_verify};

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn point() -> impl Strategy<Value = Point2> {
    (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
}

fn circle() -> impl Strategy<Value = Circle> {
    (point(), 0.1..100.0f64).prop_map(|(c, r)| Circle::new(c, r).unwrap())
}

/// Fold width spanning six orders of magnitude.
fn fold_width() -> impl Strategy<Value = f64> {
    (-3.0..3.0f64).prop_map(|e| 10f64.powf(e))
}

fn target_angle() -> impl Strategy<Value = f64> {
    0.001..=FRAC_PI_2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn intersections_lie_on_both_circles(c1 in circle(), c2 in circle()) {
        if let Ok(points) = circle_circle_intersections(&c1, &c2) {
            if points.len() == 2 {
                for p in &points {
                    for c in [&c1, &c2] {
                        prop_assert!(
                            c.residual(*p).abs() <= 1e-12 * c.radius().max(1.0),
                            "residual {} for {:?}", c.residual(*p), c
                        );
                    }
                }
                let a0 = polar_angle(points[0] - c1.center()).unwrap();
                let a1 = polar_angle(points[1] - c1.center()).unwrap();
                prop_assert!(a0.radians() <= a1.radians());
            }
        }
    }

    /// Circles constructed to cross: the second is centered on the first.
    #[test]
    fn crossing_circles_always_intersect(c1 in circle(), phi in 0.0..TAU, frac in 0.01..1.99f64) {
        let center = c1.center() + Point2::new(phi.cos(), phi.sin()) * c1.radius();
        let c2 = Circle::new(center, frac * c1.radius()).unwrap();
        let points = circle_circle_intersections(&c1, &c2).unwrap();
        prop_assert_eq!(points.len(), 2);
        for p in &points {
            prop_assert!(c1.residual(*p).abs() <= 1e-12 * c1.radius().max(1.0));
            prop_assert!(c2.residual(*p).abs() <= 1e-12 * c2.radius().max(1.0));
        }
    }

    #[test]
    fn intersections_are_bit_stable(c1 in circle(), c2 in circle()) {
        let first = circle_circle_intersections(&c1, &c2).ok();
        let second = circle_circle_intersections(&c1, &c2).ok();
        let bits = |v: &Option<Vec<Point2>>| {
            v.as_ref().map(|ps| ps.iter().map(|p| (p.x.to_bits(), p.y.to_bits())).collect::<Vec<_>>())
        };
        prop_assert_eq!(bits(&first), bits(&second));
    }

    #[test]
    fn triangle_inequality(p in point(), q in point(), r in point()) {
        prop_assert!(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
        prop_assert_eq!(distance(p, q), distance(q, p));
    }

    #[test]
    fn polar_angle_rotates(p in point(), phi in -10.0..10.0f64) {
        prop_assume!(p.norm() > 1e-6);
        let before = polar_angle(p).unwrap();
        let after = polar_angle(p.rotate(phi)).unwrap();
        let expected = before + Angle::from_radians(phi);
        prop_assert!(after.separation(expected) <= 1e-12);
    }

    #[test]
    fn locus_triples_the_angle_of_j(a in fold_width(), stretch in 0.0..1000.0f64) {
        let params = LocusParams::new(a).unwrap();
        let b = params.b_start() * (1.0 + stretch);
        let lp = locus_point(&params, b).unwrap();
        let j_angle = polar_angle(params.j_point(b)).unwrap();
        prop_assert!(lp.q_polar_angle.separation(j_angle * 3.0) <= 1e-12);

        let bound = 1e-12 * (a * a + b * b).max(1.0);
        prop_assert!(lp.residual_circle1 <= bound);
        prop_assert!(lp.residual_circle2 <= bound);
        prop_assert!(lp.residual_locus_relation <= bound);
    }

    #[test]
    fn locus_angle_decreases_in_b(a in fold_width(), s1 in 0.0..100.0f64, ds in 1e-6..100.0f64) {
        let params = LocusParams::new(a).unwrap();
        let b1 = params.b_start() * (1.0 + s1);
        let b2 = params.b_start() * (1.0 + s1 + ds);
        let q1 = locus_point(&params, b1).unwrap().q_polar_angle.radians();
        let q2 = locus_point(&params, b2).unwrap().q_polar_angle.radians();
        prop_assert!(q2 < q1);
    }

    #[test]
    fn polar_form_agrees_with_construction(a in fold_width(), phi in 0.01..=FRAC_PI_2) {
        let params = LocusParams::new(a).unwrap();
        let r = locus_polar_radius(&params, Angle::from_radians(phi)).unwrap();
        let b = ((r - a) * (r + a)).sqrt().max(params.b_start());
        let lp = locus_point(&params, b).unwrap();
        let expected = Point2::from_polar(r, Angle::from_radians(phi));
        prop_assert!(distance(lp.q, expected) <= 1e-10 * r.max(1.0));
    }

    #[test]
    fn trisection_matches_closed_form(t in target_angle(), a in fold_width()) {
        let params = LocusParams::new(a).unwrap();
        let r = trisect(Angle::from_radians(t), &params, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        prop_assert!((r.theta.radians() - t / 3.0).abs() <= DEFAULT_TOL);
        prop_assert!((distance(Point2::ORIGIN, r.n_point) - r.unit_length).abs() <= 1e-12 * r.unit_length.max(1.0));
        prop_assert!((distance(r.n_point, params.j_point(r.b_star)) - 2.0 * a).abs() <= 1e-12 * r.unit_length.max(1.0));
        prop_assert!((r.b_star_normalized() - (t / 3.0).cos()).abs() <= 1e-12);
    }

    #[test]
    fn trisection_is_scale_equivariant(t in target_angle(), lambda in fold_width()) {
        let unit = LocusParams::new(1.0).unwrap();
        let scaled = LocusParams::new(lambda).unwrap();
        let angle = Angle::from_radians(t);
        let r1 = trisect(angle, &unit, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let r2 = trisect(angle, &scaled, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let rel = |x: f64, y: f64| (x - y).abs() / y.abs().max(f64::MIN_POSITIVE);
        prop_assert!((r1.theta.radians() - r2.theta.radians()).abs() <= 1e-12);
        prop_assert!(rel(r2.b_star, lambda * r1.b_star) <= 1e-12);
        prop_assert!(rel(r2.unit_length, lambda * r1.unit_length) <= 1e-12);
        prop_assert!(distance(r2.n_point, r1.n_point * lambda) <= 1e-12 * r2.unit_length);
    }

    #[test]
    fn origami_angles_are_equal(t in 0.001..(FRAC_PI_2 - 0.001)) {
        let c = abe_construct(Angle::from_radians(t)).unwrap();
        let third = t / 3.0;
        for angle in [c.alpha, c.beta, c.gamma] {
            prop_assert!((angle.radians() - third).abs() <= 1e-12);
        }
        let chord = 2.0 * third.sin();
        prop_assert!((distance(c.h, c.c) - chord).abs() <= 1e-12);
        prop_assert!((distance(c.o, c.d) - chord).abs() <= 1e-12);
        // G sits on the ray at 2θ, cos θ from O
        let g_expected = Point2::from_polar(third.cos(), Angle::from_radians(2.0 * third));
        prop_assert!(distance(c.g, g_expected) <= 1e-12);
        prop_assert!((c.h.y - third.sin()).abs() <= 1e-12);
        prop_assert!(abe_verify(&c).passed());
    }

    #[test]
    fn chords_follow_inscribed_angles(t in 0.01..(FRAC_PI_2 - 1e-9)) {
        let d = chord_diagram(Angle::from_radians(t)).unwrap();
        let expected = 2.0 * 0.5 * (t / 3.0).sin();
        for c in [d.chord_fk, d.chord_kl, d.chord_le] {
            prop_assert!((c - expected).abs() <= 1e-12);
        }
        prop_assert!((distance(d.j, d.e) - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn closed_form_satisfies_triple_angle(t in 1e-9..=FRAC_PI_2) {
        let x = Angle::from_radians(t);
        prop_assert!(triple_angle_residual(oracle_theta(x), x) <= 1e-12);
    }
}
