//! Replays the checked-in fuzz seeds through the fuzz targets' assertions.

use std::fs;
use std::path::PathBuf;

use wiring_domains::{Arrangement, ArrangementWord, Domain, LinearOrder, TrackOrder};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty());
    files.iter().map(|p| fs::read(p).unwrap()).collect()
}

#[test]
fn word_seeds() {
    let mut parsed = 0;
    for data in seeds("parse_word") {
        let (&n, rest) = data.split_first().unwrap();
        let n = usize::from(n % 7) + 1;
        if let Ok(word) = ArrangementWord::parse(std::str::from_utf8(rest).unwrap(), n) {
            assert_eq!(ArrangementWord::parse(&word.to_string(), n).unwrap(), word);
            assert!(!Arrangement::with_identity(word).domain().is_empty());
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn order_seeds() {
    for data in seeds("parse_order") {
        let text = String::from_utf8(data).unwrap();
        if let Ok(o) = LinearOrder::parse(&text) {
            assert_eq!(LinearOrder::parse(&o.to_string()).unwrap(), o);
        }
        if let Ok(c) = TrackOrder::parse(&text) {
            assert_eq!(TrackOrder::parse(&c.to_string()).unwrap(), c);
        }
    }
}

#[test]
fn domain_seeds() {
    for data in seeds("parse_domain") {
        let text = String::from_utf8(data).unwrap();
        if let Ok(d) = Domain::parse(&text) {
            assert_eq!(Domain::parse(&d.to_file_string()).unwrap(), d);
        }
    }
}
