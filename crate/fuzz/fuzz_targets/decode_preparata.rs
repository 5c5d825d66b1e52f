#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use z4codes::code::families::preparata;
use z4codes::code::Z4Code;
use z4codes::decode::{DecodeStatus, PreparataDecoder};
use z4codes::galois::GaloisRing;
use z4codes::z4::Z4Vector;

static SETUP: OnceLock<Vec<(PreparataDecoder, Z4Code)>> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let setup = SETUP.get_or_init(|| {
        [3u32, 5]
            .iter()
            .map(|&m| {
                let ring = GaloisRing::new(m).expect("odd m");
                let code = preparata(&ring).expect("code");
                (PreparataDecoder::new(ring).expect("decoder"), code)
            })
            .collect()
    });
    let Some((&sel, rest)) = data.split_first() else { return };
    let (dec, code) = &setup[usize::from(sel & 1)];
    let n = code.len();
    if rest.len() < n {
        return;
    }
    let sym: Vec<u8> = rest[..n].iter().map(|b| b & 3).collect();
    let v = Z4Vector::from_symbols(&sym).expect("symbols in range");
    let r = dec.decode(&v).expect("length matches");
    match r.status {
        DecodeStatus::Detected => assert!(r.codeword(&v).is_none()),
        _ => {
            let c = r.codeword(&v).expect("decoded word");
            assert!(code.contains(&c));
            assert!(r.applied_weight <= 2);
            assert_eq!((&v - &c).lee_weight(), r.applied_weight);
        }
    }
});
