#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use z4codes::decode::{kerdock_soft_decode_brute, parse_soft_line, KerdockSoftDecoder};
use z4codes::galois::GaloisRing;

static DEC: OnceLock<KerdockSoftDecoder> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let dec = DEC.get_or_init(|| KerdockSoftDecoder::new(GaloisRing::new(3).expect("m = 3")));
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(input) = parse_soft_line(s) else { return };
    if input.len() != dec.len() || input.samples().iter().any(|z| z.norm() > 1e6) {
        return;
    }
    let fast = dec.decode(&input).expect("length matches");
    let slow = kerdock_soft_decode_brute(dec.ring(), &input).expect("length matches");
    assert!((fast.score - slow.score).abs() <= 1e-6 * (1.0 + slow.score.abs()));
});
