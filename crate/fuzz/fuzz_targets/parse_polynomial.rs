#![no_main]

use libfuzzer_sys::fuzz_target;
use z4codes::galois::poly::{parse_binary_poly, Z4Poly};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<Z4Poly>() {
        let again: Z4Poly = p.to_string().parse().expect("display output parses");
        assert_eq!(again, p);
    }
    let _ = parse_binary_poly(s);
});
