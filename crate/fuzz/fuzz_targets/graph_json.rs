#![no_main]

use gendo::graphs::{extension_graph, recognize};
use gendo::io::{graph_from_json, graph_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = graph_from_json(s) {
        let again = graph_from_json(&graph_to_json(&g)).expect("round trip");
        assert_eq!(again.vertices(), g.vertices());
        let _ = recognize(&g);
        if let Some(&v) = g.vertices().first() {
            let _ = extension_graph(&g, v);
        }
    }
});
