//! Prints one line per acceptance criterion. Criteria 3 and 4 carry known
//! failures (no certificate for `End(B_2 ⊕ D)`, and the `H_{2,1}` row over
//! `B_3`); every other criterion must pass within its budget.

use std::process::ExitCode;

use gendo::acceptance::{run, CRITERIA};

const KNOWN_RED: [u8; 2] = [3, 4];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for c in CRITERIA {
        let outcome = run(c.id).expect("criterion runner");
        println!("{}", outcome.line());
        if !outcome.pass && !KNOWN_RED.contains(&c.id) {
            unexpected.push(c.id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria outside {KNOWN_RED:?} pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in {unexpected:?}");
        ExitCode::FAILURE
    }
}
