#![no_main]

use libfuzzer_sys::fuzz_target;
use trisectrix::emit::json::TrisectionRecord;
use trisectrix::locus::verify_trisection;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(record) = TrisectionRecord::from_json(text) else {
        return;
    };
    // anything that decodes must rebuild and verify without panicking
    let (result, params) = record.to_result().expect("validated record rebuilds");
    let _ = verify_trisection(&result, &params, record.tol);
    let _ = record.to_json();
});
