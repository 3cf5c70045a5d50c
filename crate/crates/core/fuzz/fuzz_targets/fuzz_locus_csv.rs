#![no_main]

use libfuzzer_sys::fuzz_target;
use trisectrix::emit::csv::read_locus_csv;

fuzz_target!(|data: &[u8]| {
    if let Ok(rows) = read_locus_csv(data) {
        assert!(rows.windows(2).all(|w| w[0].b < w[1].b));
        assert!(rows
            .iter()
            .all(|r| r.b.is_finite() && r.x.is_finite() && r.y.is_finite()));
    }
});
