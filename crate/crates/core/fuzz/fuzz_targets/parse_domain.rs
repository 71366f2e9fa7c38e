#![no_main]

use libfuzzer_sys::fuzz_target;
use wiring_domains::analysis::is_condorcet;
use wiring_domains::Domain;

fuzz_target!(|text: &str| {
    if let Ok(d) = Domain::parse(text) {
        assert_eq!(Domain::parse(&d.to_file_string()).unwrap(), d);
        if d.n() <= 8 {
            let _ = is_condorcet(&d);
        }
    }
});
