#![no_main]

use libfuzzer_sys::fuzz_target;
use trisectrix::geom::Angle;
use trisectrix::locus::{trisect, verify_trisection, LocusParams};

fuzz_target!(|input: (f64, f64, f64, u8)| {
    let (angle, a, tol, max_iter) = input;
    let Ok(params) = LocusParams::new(a) else {
        return;
    };
    if let Ok(r) = trisect(Angle::from_radians(angle), &params, tol, max_iter as usize) {
        assert!(r.angle_residual <= tol);
        let _ = verify_trisection(&r, &params, tol);
    }
});
