//! The checked-in definition files match the builders byte for byte.

use std::path::PathBuf;

use decompgen::algebra::{load_algebra, serialize_algebra};
use decompgen::corpus::corpus;

fn fixture(id: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{id}.alg"))
}

#[test]
fn builders_reproduce_fixtures() {
    for e in corpus().unwrap() {
        let path = fixture(&e.id);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, serialize_algebra(&e.algebra), "{}", path.display());
        let loaded = load_algebra(&path).unwrap();
        assert_eq!(serialize_algebra(&loaded), text);
    }
}
