#![no_main]

use libfuzzer_sys::fuzz_target;
use z4codes::decode::{parse_decode_line, DecodeLine};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    match parse_decode_line(s) {
        Ok(DecodeLine::Hard(v)) => assert!(!v.is_empty()),
        Ok(DecodeLine::Soft(x)) => {
            assert!(!x.is_empty());
            assert!(x.samples().iter().all(|z| z.re.is_finite() && z.im.is_finite()));
            assert_eq!(x.hard_decision().len(), x.len());
        }
        Err(_) => {}
    }
});
