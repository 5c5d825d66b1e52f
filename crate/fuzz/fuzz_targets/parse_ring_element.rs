#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use z4codes::galois::GaloisRing;

static RING: OnceLock<GaloisRing> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let ring = RING.get_or_init(|| GaloisRing::new(5).expect("m = 5 is supported"));
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = ring.parse(s) {
        assert_eq!(ring.parse(&ring.format(x)).expect("formatted element parses"), x);
    }
});
