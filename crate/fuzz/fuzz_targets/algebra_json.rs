#![no_main]

use gendo::io::{algebra_from_json, algebra_to_json};
use gendo::{F2, Q};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = algebra_from_json::<Q>(s) {
        let b = algebra_from_json::<Q>(&algebra_to_json(&a)).expect("round trip");
        assert_eq!(a.dim(), b.dim());
        let _ = a.radical_vectors();
    }
    let _ = algebra_from_json::<F2>(s);
});
