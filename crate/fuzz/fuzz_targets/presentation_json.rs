#![no_main]

use gendo::algebra::presentation::algebra_from_presentation;
use gendo::io::{presentation_from_json, presentation_to_json};
use gendo::Q;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = presentation_from_json::<Q>(s) {
        presentation_from_json::<Q>(&presentation_to_json(&p)).expect("round trip");
        // Path enumeration is exponential in the truncation bound.
        if p.quiver.arrows().len() <= 4 && p.truncation <= 6 {
            let _ = algebra_from_presentation(&p);
        }
    }
});
