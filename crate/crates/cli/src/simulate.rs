//! Monte Carlo block and bit error rates over a QPSK/AWGN channel.

use std::thread;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use z4codes::code::families::{kerdock_codeword, preparata};
use z4codes::code::Z4Code;
use z4codes::decode::{KerdockSoftDecoder, PreparataDecoder, SoftInput};
use z4codes::galois::{GaloisRing, RingElement};
use z4codes::z4::Z4Vector;
use z4codes::{Error, Result};

const CHUNK: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimFamily {
    Kerdock,
    Preparata,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub snr_db: f64,
    pub trials: u64,
    pub block_errors: u64,
    pub bit_errors: u64,
    pub bits: u64,
}

impl Point {
    pub fn block_error_rate(&self) -> f64 {
        self.block_errors as f64 / self.trials as f64
    }

    pub fn bit_error_rate(&self) -> f64 {
        self.bit_errors as f64 / self.bits as f64
    }
}

/// Standard deviation per real dimension for unit-energy symbols at the
/// given Es/N0 in dB; infinite SNR gives a noiseless channel.
pub fn noise_sigma(snr_db: f64) -> f64 {
    if snr_db == f64::INFINITY {
        0.0
    } else {
        (0.5 / 10f64.powf(snr_db / 10.0)).sqrt()
    }
}

enum Decoder {
    Kerdock { dec: KerdockSoftDecoder, elements: Vec<RingElement> },
    Preparata { dec: PreparataDecoder, code: Z4Code },
}

impl Decoder {
    fn new(family: SimFamily, m: u32) -> Result<Self> {
        let ring = GaloisRing::new(m)?;
        Ok(match family {
            SimFamily::Kerdock => {
                let elements = ring.elements().collect();
                Decoder::Kerdock { dec: KerdockSoftDecoder::new(ring), elements }
            }
            SimFamily::Preparata => {
                let code = preparata(&ring)?;
                Decoder::Preparata { dec: PreparataDecoder::new(ring)?, code }
            }
        })
    }

    fn random_codeword(&self, rng: &mut ChaCha8Rng) -> Result<Z4Vector> {
        match self {
            Decoder::Kerdock { dec, elements } => {
                let lambda = elements[rng.random_range(0..elements.len())];
                Ok(kerdock_codeword(dec.ring(), lambda, rng.random_range(0..4)))
            }
            Decoder::Preparata { code, .. } => {
                let info: Vec<u8> = (0..code.k1()).map(|_| rng.random_range(0..4)).collect();
                code.encode(&info)
            }
        }
    }

    fn decode(&self, y: &SoftInput) -> Result<Z4Vector> {
        match self {
            Decoder::Kerdock { dec, .. } => Ok(dec.decode(y)?.codeword(dec.ring())),
            Decoder::Preparata { dec, .. } => {
                let hard = y.hard_decision();
                let r = dec.decode(&hard)?;
                Ok(r.codeword(&hard).unwrap_or(hard))
            }
        }
    }
}

fn run_chunk(dec: &Decoder, sigma: f64, seed: u64, trials: u64) -> Result<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, sigma).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let mut p = Point { trials, ..Point::default() };
    for _ in 0..trials {
        let c = dec.random_codeword(&mut rng)?;
        let samples: Vec<Complex64> = SoftInput::from_codeword(&c)
            .samples()
            .iter()
            .map(|z| z + Complex64::new(noise.sample(&mut rng), noise.sample(&mut rng)))
            .collect();
        let est = dec.decode(&SoftInput::new(samples)?)?;
        let errs = c.gray_map().hamming_distance(&est.gray_map())? as u64;
        p.bit_errors += errs;
        p.bits += 2 * c.len() as u64;
        p.block_errors += u64::from(errs > 0);
    }
    Ok(p)
}

fn chunk_seed(seed: u64, point: usize, chunk: u64) -> u64 {
    seed ^ (point as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ chunk.wrapping_mul(0xD1B5_4A32_D192_ED03)
}

/// Runs `trials` blocks at each SNR. Chunks are seeded from (seed, point,
/// chunk), so results do not depend on the number of workers.
pub fn simulate(family: SimFamily, m: u32, snrs: &[f64], trials: u64, seed: u64, workers: usize) -> Result<Vec<Point>> {
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    let dec = Decoder::new(family, m)?;
    let workers = workers.max(1);
    let chunks = trials.div_ceil(CHUNK);
    let mut out = Vec::with_capacity(snrs.len());
    for (i, &snr) in snrs.iter().enumerate() {
        let sigma = noise_sigma(snr);
        let parts: Vec<Result<Point>> = thread::scope(|s| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|w| {
                    let dec = &dec;
                    s.spawn(move || {
                        let mut acc = Vec::new();
                        let mut k = w;
                        while k < chunks {
                            let n = CHUNK.min(trials - k * CHUNK);
                            acc.push(run_chunk(dec, sigma, chunk_seed(seed, i, k), n));
                            k += workers as u64;
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut total = Point { snr_db: snr, ..Point::default() };
        for p in parts {
            let p = p?;
            total.trials += p.trials;
            total.block_errors += p.block_errors;
            total.bit_errors += p.bit_errors;
            total.bits += p.bits;
        }
        out.push(total);
    }
    Ok(out)
}
