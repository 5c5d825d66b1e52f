//! Hard-decision syndrome decoding of `Preparata` codes, soft-decision
//! Hadamard-transform decoding of Kerdock codes, and their brute-force oracles.

mod preparata;
mod soft;

pub use preparata::{nearest_codewords, DecodeResult, DecodeStatus, PreparataDecoder};
pub use soft::{kerdock_soft_decode_brute, parse_soft_line, qpsk, KerdockSoftDecoder, SoftDecision, SoftInput};

use num_complex::{Complex, Complex64};

use crate::error::{Error, Result};
use crate::z4::Z4Vector;

/// One line of batch decoder input.
#[derive(Clone, Debug, PartialEq)]
pub enum DecodeLine {
    Hard(Z4Vector),
    Soft(SoftInput),
}

impl DecodeLine {
    pub fn len(&self) -> usize {
        match self {
            DecodeLine::Hard(v) => v.len(),
            DecodeLine::Soft(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A line of symbols 0–3 is a hard decision; anything else is read as soft
/// "re,im" samples.
pub fn parse_decode_line(line: &str) -> Result<DecodeLine> {
    let t = line.trim();
    if t.is_empty() {
        return Err(Error::Empty);
    }
    if t.bytes().all(|b| (b'0'..=b'3').contains(&b)) {
        Ok(DecodeLine::Hard(t.parse()?))
    } else {
        Ok(DecodeLine::Soft(parse_soft_line(t)?))
    }
}

/// i^k for k mod 4.
pub fn i_pow(k: i64) -> Complex<i64> {
    match k.rem_euclid(4) {
        0 => Complex::new(1, 0),
        1 => Complex::new(0, 1),
        2 => Complex::new(-1, 0),
        _ => Complex::new(0, -1),
    }
}

/// ζ(a − b) = Σ_r i^{a_r − b_r}, exactly.
pub fn correlation(a: &Z4Vector, b: &Z4Vector) -> Result<Complex<i64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    Ok((0..a.len()).map(|r| i_pow(i64::from(a.get(r)) - i64::from(b.get(r)))).sum())
}

/// Squared Euclidean distance between the QPSK images i^a and i^b: 2n − 2 Re ζ.
pub fn squared_distance(a: &Z4Vector, b: &Z4Vector) -> Result<i64> {
    let z = correlation(a, b)?;
    Ok(2 * a.len() as i64 - 2 * z.re)
}

/// Walsh-Hadamard transform in natural order: X[u] = Σ_t (−1)^{⟨u,t⟩} x[t].
pub fn fht(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut v = x.to_vec();
    fht_in_place(&mut v)?;
    Ok(v)
}

pub fn fht_in_place(v: &mut [Complex64]) -> Result<()> {
    let n = v.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for j in block..block + h {
                let (a, b) = (v[j], v[j + h]);
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
        h *= 2;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::GaloisRing;
    use proptest::prelude::*;

    #[test]
    fn decode_lines() {
        assert_eq!(parse_decode_line(" 1032\n").unwrap(), DecodeLine::Hard("1032".parse().unwrap()));
        let soft = parse_decode_line("1,0 0.5,-1; -1,0").unwrap();
        assert_eq!(soft.len(), 3);
        assert_eq!(parse_decode_line("1,0,0,1").unwrap().len(), 2);
        assert!(parse_decode_line("").is_err());
        assert!(parse_decode_line("1,0 2").is_err());
        assert!(parse_decode_line("1,x").is_err());
        assert!(parse_decode_line("nan,0").is_err());
        assert!(parse_decode_line("1045").is_err());
    }

    #[test]
    fn fht_delta_and_definition() {
        let mut d = vec![Complex64::new(0.0, 0.0); 8];
        d[0] = Complex64::new(1.0, 0.0);
        assert!(fht(&d).unwrap().iter().all(|z| *z == Complex64::new(1.0, 0.0)));
        let x: Vec<Complex64> = (0..8).map(|k| Complex64::new(k as f64, (k * k % 5) as f64)).collect();
        let f = fht(&x).unwrap();
        for u in 0..8usize {
            let direct: Complex64 = (0..8usize)
                .map(|t| if (u & t).count_ones() % 2 == 0 { x[t] } else { -x[t] })
                .sum();
            assert!((direct - f[u]).norm() < 1e-12);
        }
        assert!(fht(&x[..6]).is_err());
        assert!(fht(&[]).is_err());
    }

    #[test]
    fn squared_distance_is_twice_lee_exhaustive() {
        for n in 1..=3usize {
            let words: Vec<Z4Vector> = (0..1u32 << (2 * n))
                .map(|x| Z4Vector::from_symbols(&(0..n).map(|i| (x >> (2 * i) & 3) as u8).collect::<Vec<_>>()).unwrap())
                .collect();
            for a in &words {
                assert_eq!(correlation(a, a).unwrap(), Complex::new(n as i64, 0));
                for b in &words {
                    assert_eq!(squared_distance(a, b).unwrap(), 2 * a.lee_distance(b).unwrap() as i64);
                }
            }
        }
    }

    #[test]
    fn family_a_correlations() {
        for m in [3u32, 5] {
            let ring = GaloisRing::new(m).unwrap();
            let n = ring.n() as usize;
            let zero = Z4Vector::zeros(n);
            for lambda in ring.elements().filter(|&l| ring.is_unit(l)) {
                let v = Z4Vector::from_symbols(
                    &(0..n).map(|t| ring.trace(ring.mul(lambda, ring.xi_pow(t as i64)))).collect::<Vec<_>>(),
                )
                .unwrap();
                let z = correlation(&v, &zero).unwrap() + Complex::new(1, 0);
                assert_eq!(z.norm_sqr(), 1 << m);
            }
        }
    }

    proptest! {
        #[test]
        fn fht_twice_scales(re in proptest::collection::vec(-10i32..10, 16), im in proptest::collection::vec(-10i32..10, 16)) {
            let x: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a.into(), b.into())).collect();
            let y = fht(&fht(&x).unwrap()).unwrap();
            for (a, b) in x.iter().zip(&y) {
                prop_assert_eq!(*a * 16.0, *b);
            }
        }
    }
}
