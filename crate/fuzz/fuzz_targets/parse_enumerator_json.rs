#![no_main]

use libfuzzer_sys::fuzz_target;
use z4codes::enumerator::WeightEnumerator;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(e) = WeightEnumerator::from_json_str(s) {
        let again = WeightEnumerator::from_json(&e.to_json()).expect("serialized form parses");
        assert_eq!(again, e);
    }
});
