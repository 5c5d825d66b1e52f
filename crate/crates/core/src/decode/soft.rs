use num_complex::Complex64;
use serde_json::{json, Value};

use super::fht_in_place;
use crate::code::families::kerdock_codeword;
use crate::error::{Error, Result};
use crate::galois::{GaloisRing, RingElement};
use crate::z4::Z4Vector;

/// Complex received samples, one per coordinate (∞ first); the noiseless
/// image of symbol c is i^c.
#[derive(Clone, Debug, PartialEq)]
pub struct SoftInput(Vec<Complex64>);

impl SoftInput {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(p) = samples.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Parse(format!("non-finite sample at position {p}")));
        }
        Ok(SoftInput(samples))
    }

    pub fn from_codeword(c: &Z4Vector) -> Self {
        SoftInput(c.symbols().iter().map(|&s| qpsk(s)).collect())
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nearest constellation point per coordinate.
    pub fn hard_decision(&self) -> Z4Vector {
        let sym: Vec<u8> = self
            .0
            .iter()
            .map(|z| {
                if z.re.abs() >= z.im.abs() {
                    if z.re >= 0.0 { 0 } else { 2 }
                } else if z.im >= 0.0 {
                    1
                } else {
                    3
                }
            })
            .collect();
        Z4Vector::from_symbols(&sym).expect("symbols are in range")
    }
}

/// Parses "re,im" pairs separated by whitespace or semicolons; a flat
/// comma-separated list of 2n numbers is accepted too.
pub fn parse_soft_line(line: &str) -> Result<SoftInput> {
    let nums: Vec<f64> = line
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("bad number {t:?}"))))
        .collect::<Result<_>>()?;
    if nums.len() % 2 == 1 {
        return Err(Error::Parse(format!("{} numbers do not form re,im pairs", nums.len())));
    }
    SoftInput::new(nums.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect())
}

/// i^c as a complex number.
pub fn qpsk(c: u8) -> Complex64 {
    match c & 3 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Re(i^{−δ} z).
fn rotated_re(z: Complex64, delta: u8) -> f64 {
    match delta & 3 {
        0 => z.re,
        1 => z.im,
        2 => -z.re,
        _ => -z.im,
    }
}

/// λ = ξ^r + 2ξ^s with r, s ∈ {∞, 0, …, n−1} (`None` is ∞), offset δ, and the
/// achieved correlation Re ζ(λ, δ).
#[derive(Clone, Debug, PartialEq)]
pub struct SoftDecision {
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub delta: u8,
    pub lambda: RingElement,
    pub score: f64,
}

impl SoftDecision {
    pub fn codeword(&self, ring: &GaloisRing) -> Z4Vector {
        kerdock_codeword(ring, self.lambda, self.delta)
    }

    pub fn to_json(&self, ring: &GaloisRing) -> Value {
        let c = self.codeword(ring);
        json!({
            "status": "decoded",
            "lambda": ring.format(self.lambda),
            "delta": self.delta,
            "codeword": c.to_string(),
            "score": self.score,
        })
    }
}

fn delta_key(x: Option<u32>) -> u64 {
    x.map_or(0, |v| u64::from(v) + 1)
}

fn better(score: f64, key: (u64, u64, u8), best: &Option<(f64, (u64, u64, u8))>) -> bool {
    match best {
        None => true,
        Some((s, k)) => score > *s || (score == *s && key < *k),
    }
}

fn lambda_of(ring: &GaloisRing, r: Option<u32>, s: Option<u32>) -> RingElement {
    let p = |e: Option<u32>| e.map_or(RingElement::ZERO, |e| ring.xi_pow(i64::from(e)));
    p(r) + p(s).double()
}

/// Kerdock soft-decision decoder: one Hadamard transform of length 2^m per
/// choice of r.
#[derive(Clone, Debug)]
pub struct KerdockSoftDecoder {
    ring: GaloisRing,
    // T(ξ^j) for j = 0…n−1.
    traces: Vec<u8>,
    // Field coordinates of θ^t, used as the transform index of coordinate t.
    index: Vec<usize>,
    // Transform output index L(θ^s) with bits tr(θ^s θ^i).
    out_index: Vec<usize>,
}

impl KerdockSoftDecoder {
    pub fn new(ring: GaloisRing) -> Self {
        let n = ring.n() as usize;
        let m = ring.m();
        let f = ring.field();
        let traces = (0..n).map(|j| ring.trace(ring.xi_pow(j as i64))).collect();
        let index = (0..n).map(|t| f.exp(t as i64).0 as usize).collect();
        let out_index = (0..n)
            .map(|s| {
                (0..m).fold(0usize, |acc, i| {
                    acc | usize::from(f.trace(f.exp(s as i64 + i64::from(i)))) << i
                })
            })
            .collect();
        KerdockSoftDecoder { ring, traces, index, out_index }
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

    pub fn decode(&self, input: &SoftInput) -> Result<SoftDecision> {
        let n = self.ring.n() as usize;
        if input.len() != n + 1 {
            return Err(Error::LengthMismatch { expected: n + 1, actual: input.len() });
        }
        let v = input.samples();
        let mut buf = vec![Complex64::new(0.0, 0.0); n + 1];
        let mut best: Option<(f64, (u64, u64, u8))> = None;
        let mut best_rs = (None, None, 0u8);
        let rs: Vec<Option<u32>> = std::iter::once(None).chain((0..n as u32).map(Some)).collect();
        for &r in &rs {
            buf[0] = v[0];
            for t in 0..n {
                let rot = match r {
                    None => 0,
                    Some(r) => self.traces[(r as usize + t) % n],
                };
                buf[self.index[t]] = v[t + 1] * qpsk((4 - rot) & 3);
            }
            fht_in_place(&mut buf)?;
            for &s in &rs {
                let z = buf[s.map_or(0, |s| self.out_index[s as usize])];
                for delta in 0..4u8 {
                    let score = rotated_re(z, delta);
                    let key = (delta_key(r), delta_key(s), delta);
                    if better(score, key, &best) {
                        best = Some((score, key));
                        best_rs = (r, s, delta);
                    }
                }
            }
        }
        let (score, _) = best.expect("at least one candidate");
        let (r, s, delta) = best_rs;
        Ok(SoftDecision { r, s, delta, lambda: lambda_of(&self.ring, r, s), score })
    }
}

/// Exhaustive correlation over all 4^{m+1} Kerdock codewords, same tie rule.
pub fn kerdock_soft_decode_brute(ring: &GaloisRing, input: &SoftInput) -> Result<SoftDecision> {
    let n = ring.n() as usize;
    if input.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, actual: input.len() });
    }
    let v = input.samples();
    let rs: Vec<Option<u32>> = std::iter::once(None).chain((0..n as u32).map(Some)).collect();
    let mut best: Option<(f64, (u64, u64, u8))> = None;
    let mut out = None;
    for &r in &rs {
        for &s in &rs {
            let lambda = lambda_of(ring, r, s);
            for delta in 0..4u8 {
                let c = kerdock_codeword(ring, lambda, delta);
                let score: f64 = v.iter().zip(c.symbols()).map(|(z, sym)| rotated_re(*z, sym)).sum();
                let key = (delta_key(r), delta_key(s), delta);
                if better(score, key, &best) {
                    best = Some((score, key));
                    out = Some(SoftDecision { r, s, delta, lambda, score });
                }
            }
        }
    }
    Ok(out.expect("at least one candidate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::families::kerdock;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, Normal};

    #[test]
    fn noiseless_recovers_every_codeword() {
        for m in [3u32, 4, 5] {
            let ring = GaloisRing::new(m).unwrap();
            let dec = KerdockSoftDecoder::new(ring.clone());
            let mut rng = ChaCha8Rng::seed_from_u64(u64::from(m));
            let elems: Vec<RingElement> = ring.elements().collect();
            for _ in 0..40 {
                let lambda = elems[rng.random_range(0..elems.len())];
                let delta = rng.random_range(0..4u8);
                let c = kerdock_codeword(&ring, lambda, delta);
                let d = dec.decode(&SoftInput::from_codeword(&c)).unwrap();
                assert_eq!((d.lambda, d.delta), (lambda, delta));
                assert_eq!(d.score, f64::from(1u32 << m));
                assert_eq!(d.codeword(&ring), c);
            }
        }
    }

    #[test]
    fn codewords_belong_to_kerdock() {
        let ring = GaloisRing::new(3).unwrap();
        let k = kerdock(&ring).unwrap();
        let dec = KerdockSoftDecoder::new(ring.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let s: Vec<Complex64> = (0..8).map(|_| Complex64::new(rng.random(), rng.random())).collect();
            let d = dec.decode(&SoftInput::new(s).unwrap()).unwrap();
            assert!(k.contains(&d.codeword(&ring)));
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let ring = GaloisRing::new(3).unwrap();
        let dec = KerdockSoftDecoder::new(ring.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let noise = Normal::new(0.0, 0.8).unwrap();
        let elems: Vec<RingElement> = ring.elements().collect();
        for _ in 0..100 {
            let c = kerdock_codeword(&ring, elems[rng.random_range(0..elems.len())], rng.random_range(0..4));
            let s: Vec<Complex64> = SoftInput::from_codeword(&c)
                .samples()
                .iter()
                .map(|z| z + Complex64::new(noise.sample(&mut rng), noise.sample(&mut rng)))
                .collect();
            let input = SoftInput::new(s).unwrap();
            let fast = dec.decode(&input).unwrap();
            let slow = kerdock_soft_decode_brute(&ring, &input).unwrap();
            assert_eq!((fast.r, fast.s, fast.delta), (slow.r, slow.s, slow.delta));
            assert!((fast.score - slow.score).abs() < 1e-9);
        }
    }

    #[test]
    fn tie_rule_on_zero_input() {
        let ring = GaloisRing::new(3).unwrap();
        let input = SoftInput::new(vec![Complex64::new(0.0, 0.0); 8]).unwrap();
        let d = KerdockSoftDecoder::new(ring.clone()).decode(&input).unwrap();
        assert_eq!((d.r, d.s, d.delta), (None, None, 0));
        assert_eq!(kerdock_soft_decode_brute(&ring, &input).unwrap().r, None);
    }

    #[test]
    fn input_validation() {
        assert!(SoftInput::new(vec![]).is_err());
        assert!(SoftInput::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
        let ring = GaloisRing::new(3).unwrap();
        let short = SoftInput::new(vec![Complex64::new(1.0, 0.0); 7]).unwrap();
        assert!(KerdockSoftDecoder::new(ring).decode(&short).is_err());
        let c = Z4Vector::from_ints(&[0, 1, 2, 3]);
        assert_eq!(SoftInput::from_codeword(&c).hard_decision(), c);
    }
}
