#![no_main]

use gendo::io::{quiver_from_json, quiver_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(q) = quiver_from_json(s) {
        let again = quiver_from_json(&quiver_to_json(&q)).expect("round trip");
        assert_eq!(again.arrows(), q.arrows());
        let _ = q.to_dot();
    }
});
