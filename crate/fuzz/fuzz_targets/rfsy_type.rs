#![no_main]

use gendo::graphs::{Family, RFSyType};
use libfuzzer_sys::fuzz_target;

// Input: "<family> <rank> <f>", e.g. "D 6 1/3".
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.split_whitespace();
    let (Some(family), Some(rank), Some(f)) = (parts.next(), parts.next(), parts.next()) else { return };
    let (Ok(family), Ok(rank), Ok(f)) = (family.parse::<Family>(), rank.parse::<usize>(), RFSyType::parse_f(f)) else {
        return;
    };
    if rank <= 64 {
        let _ = RFSyType::new(family, rank, f);
    }
});
