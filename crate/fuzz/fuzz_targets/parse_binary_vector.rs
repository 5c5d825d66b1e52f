#![no_main]

use libfuzzer_sys::fuzz_target;
use z4codes::z4::BinaryVector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = s.parse::<BinaryVector>() {
        let again: BinaryVector = v.to_string().parse().expect("display output parses");
        assert_eq!(again, v);
        assert!(v.weight() <= v.len());
    }
});
