#![no_main]

use libfuzzer_sys::fuzz_target;
use z4codes::z4::Z4Vector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = s.parse::<Z4Vector>() {
        let again: Z4Vector = v.to_string().parse().expect("display output parses");
        assert_eq!(again, v);
        let g = v.gray_map();
        assert_eq!(g.len(), 2 * v.len());
        assert_eq!(g.weight(), v.lee_weight());
        assert_eq!(Z4Vector::gray_inverse(&g).expect("even length"), v);
    }
});
