#![no_main]

use libfuzzer_sys::fuzz_target;
use wiring_domains::tameness::is_tame;
use wiring_domains::{Arrangement, ArrangementWord};

// first byte picks the line count, the rest is word text
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = usize::from(n % 7) + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(word) = ArrangementWord::parse(text, n) {
        assert_eq!(ArrangementWord::parse(&word.to_string(), n).unwrap(), word);
        if word.len() <= 12 {
            let arr = Arrangement::with_identity(word);
            let _ = is_tame(&arr);
            assert!(!arr.domain().is_empty());
        }
    }
});
