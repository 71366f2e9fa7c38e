#![no_main]

use libfuzzer_sys::fuzz_target;
use wiring_domains::{LinearOrder, TrackOrder};

fuzz_target!(|text: &str| {
    if let Ok(order) = LinearOrder::parse(text) {
        assert_eq!(LinearOrder::parse(&order.to_string()).unwrap(), order);
    }
    if let Ok(col) = TrackOrder::parse(text) {
        assert_eq!(TrackOrder::parse(&col.to_string()).unwrap(), col);
    }
});
