#![no_main]

use gendo::{Field, F2, F3, F5, Q};
use libfuzzer_sys::fuzz_target;

fn check<F: Field>(s: &str) {
    if let Ok(x) = F::parse(s) {
        assert_eq!(F::parse(&x.to_string()).expect("display parses"), x);
    }
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    check::<Q>(s);
    check::<F2>(s);
    check::<F3>(s);
    check::<F5>(s);
});
