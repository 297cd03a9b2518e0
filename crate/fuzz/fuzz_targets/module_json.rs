#![no_main]

use std::sync::{Arc, OnceLock};

use gendo::algebra::QuiverAlgebra;
use gendo::constructions::families::modified_brauer_star;
use gendo::io::{module_from_json, module_to_json};
use gendo::F2;
use libfuzzer_sys::fuzz_target;

fn base() -> Arc<QuiverAlgebra<F2>> {
    static B: OnceLock<Arc<QuiverAlgebra<F2>>> = OnceLock::new();
    B.get_or_init(|| Arc::new(modified_brauer_star::<F2>(2, 1).unwrap())).clone()
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = module_from_json(s, base()) {
        let again = module_from_json(&module_to_json(&m, "B_2^1"), base()).expect("round trip");
        assert_eq!(again.dims(), m.dims());
    }
});
