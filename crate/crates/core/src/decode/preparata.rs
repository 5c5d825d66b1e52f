use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::galois::field::FieldElement;
use crate::galois::{GaloisRing, RingElement};
use crate::xform::preparata_member_z4;
use crate::z4::Z4Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    Detected,
}

impl DecodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodeStatus::NoError => "no-error",
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::Detected => "detected-uncorrectable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// The error that was removed; all zero unless corrected.
    pub error: Z4Vector,
    pub applied_weight: usize,
}

impl DecodeResult {
    fn plain(status: DecodeStatus, n: usize) -> Self {
        DecodeResult { status, error: Z4Vector::zeros(n), applied_weight: 0 }
    }

    pub fn error_positions(&self) -> Vec<usize> {
        self.error.nonzeros().into_iter().map(|(p, _)| p).collect()
    }

    pub fn error_values(&self) -> Vec<u8> {
        self.error.nonzeros().into_iter().map(|(_, v)| v).collect()
    }

    /// The decoded word, when there is one.
    pub fn codeword(&self, received: &Z4Vector) -> Option<Z4Vector> {
        match self.status {
            DecodeStatus::Detected => None,
            _ => Some(received - &self.error),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "errorPositions": self.error_positions(),
            "errorValues": self.error_values(),
            "appliedWeight": self.applied_weight,
            "score": Value::Null,
        })
    }
}

/// Syndrome decoder for the `Preparata` code of odd degree m, length 2^m with
/// coordinate ∞ first. Coordinate 0 ↔ ring element 0, coordinate j+1 ↔ ξ^j.
#[derive(Clone, Debug)]
pub struct PreparataDecoder {
    ring: GaloisRing,
}

impl PreparataDecoder {
    pub fn new(ring: GaloisRing) -> Result<Self> {
        if ring.m() < 3 || ring.m() % 2 == 0 {
            return Err(Error::InvalidParameters(format!("Preparata decoding needs odd m >= 3, got {}", ring.m())));
        }
        Ok(PreparataDecoder { ring })
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ring.n() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// (t, A + 2B).
    pub fn syndrome(&self, v: &Z4Vector) -> Result<(u8, RingElement)> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: v.len() });
        }
        let mut t = 0u8;
        let mut s = RingElement::ZERO;
        for (j, sym) in v.nonzeros() {
            t = (t + sym) & 3;
            if j > 0 {
                s += self.ring.xi_pow(j as i64 - 1).scale(sym);
            }
        }
        Ok((t, s))
    }

    fn position(&self, x: FieldElement) -> usize {
        self.ring.field().log(x).map_or(0, |j| j as usize + 1)
    }

    fn teich_position(&self, x: RingElement) -> usize {
        self.position(x.mu())
    }

    pub fn decode(&self, v: &Z4Vector) -> Result<DecodeResult> {
        let (t, s) = self.syndrome(v)?;
        let n = self.len();
        if t == 0 && s.is_zero() {
            return Ok(DecodeResult::plain(DecodeStatus::NoError, n));
        }
        let f = self.ring.field();
        let (big_a, big_b) = self.ring.two_adic(s);
        let (a, b) = (big_a.mu(), big_b.mu());
        let mut e = Z4Vector::zeros(n);
        let mut put = |pos: usize, val: u8| e.set(pos, (e.get(pos) + val) & 3);
        match t {
            1 if big_b.is_zero() => put(self.teich_position(big_a), 1),
            3 if big_a == big_b => put(self.teich_position(big_a), 3),
            2 if big_a.is_zero() => put(self.teich_position(big_b), 2),
            2 => {
                let k = f.div(b, a)?;
                let (constant, value) = if f.trace(k) { (f.square(a) + f.square(b), 3) } else { (f.square(b), 1) };
                let roots = f.solve_artin_schreier(a, constant)?;
                if roots.len() != 2 {
                    return Ok(DecodeResult::plain(DecodeStatus::Detected, n));
                }
                put(self.position(roots[0]), value);
                put(self.position(roots[1]), value);
            }
            0 if !big_a.is_zero() => {
                let y = f.div(f.square(b), a)?;
                let x = a + y;
                put(self.position(x), 1);
                put(self.position(y), 3);
            }
            _ => return Ok(DecodeResult::plain(DecodeStatus::Detected, n)),
        }
        if !preparata_member_z4(&self.ring, &(v - &e))? {
            return Ok(DecodeResult::plain(DecodeStatus::Detected, n));
        }
        let applied_weight = e.lee_weight();
        Ok(DecodeResult { status: DecodeStatus::Corrected, error: e, applied_weight })
    }
}

/// Minimum Lee distance from `v` to a listed code and the indices attaining it.
pub fn nearest_codewords(words: &[Z4Vector], v: &Z4Vector) -> (usize, Vec<usize>) {
    let mut best = usize::MAX;
    let mut at = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let d = w.lee_distance(v).expect("equal lengths");
        if d < best {
            best = d;
            at.clear();
        }
        if d == best {
            at.push(i);
        }
    }
    (best, at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::families::{octacode, preparata};

    fn decoder(m: u32) -> PreparataDecoder {
        PreparataDecoder::new(GaloisRing::new(m).unwrap()).unwrap()
    }

    #[test]
    fn rejects_even_m() {
        assert!(PreparataDecoder::new(GaloisRing::new(4).unwrap()).is_err());
        assert!(decoder(3).decode(&Z4Vector::zeros(7)).is_err());
    }

    #[test]
    fn clean_words() {
        let d = decoder(3);
        octacode().for_each_codeword(|c| {
            assert_eq!(d.decode(c).unwrap().status, DecodeStatus::NoError);
        });
    }

    #[test]
    fn single_error_on_infinity() {
        let d = decoder(3);
        for val in 1..4 {
            let r = d.decode(&Z4Vector::unit(8, 0, val)).unwrap();
            assert_eq!(r.status, DecodeStatus::Corrected);
            assert_eq!(r.error, Z4Vector::unit(8, 0, val));
        }
    }

    #[test]
    fn all_weight_two_errors_m3() {
        let d = decoder(3);
        let words = octacode().codewords(1 << 10).unwrap();
        let mut errors = Vec::new();
        for p in 0..8 {
            for v in 1..4u8 {
                errors.push(Z4Vector::unit(8, p, v));
                for q in p + 1..8 {
                    for w in [1u8, 3] {
                        if v != 2 {
                            let mut e = Z4Vector::unit(8, p, v);
                            e.set(q, w);
                            errors.push(e);
                        }
                    }
                }
            }
        }
        for c in words.iter().step_by(17) {
            for e in &errors {
                let r = d.decode(&(c + e)).unwrap();
                assert_eq!(r.status, DecodeStatus::Corrected);
                assert_eq!(&r.error, e);
            }
        }
    }

    #[test]
    fn m5_doubles_sample() {
        let ring = GaloisRing::new(5).unwrap();
        let p = preparata(&ring).unwrap();
        let d = PreparataDecoder::new(ring).unwrap();
        let c = p.encode(&vec![1; p.k1()]).unwrap();
        for (i, j) in [(0, 1), (0, 31), (5, 17), (30, 31)] {
            for (x, y) in [(1u8, 1u8), (1, 3), (3, 1), (3, 3)] {
                let mut e = Z4Vector::zeros(32);
                e.set(i, x);
                e.set(j, y);
                let r = d.decode(&(&c + &e)).unwrap();
                assert_eq!(r.error, e);
            }
        }
    }

    #[test]
    fn json_record() {
        let d = decoder(3);
        let r = d.decode(&Z4Vector::unit(8, 3, 2)).unwrap();
        let j = r.to_json();
        assert_eq!(j["status"], "corrected");
        assert_eq!(j["errorPositions"][0], 3);
        assert_eq!(j["errorValues"][0], 2);
    }
}
