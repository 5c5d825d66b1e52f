//! Verification computations: weight distributions and their closed forms,
//! distance invariance, designs, structural inclusions, automorphisms, the
//! coset graph of the `Preparata` code, and minimum distances.

pub mod automorphism;
pub mod distance;
pub mod graph;
pub mod report;
pub mod suite;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::code::binary::{reed_muller, BinaryCode};
use crate::code::families::{kerdock, preparata_shift_rows, zrm};
use crate::code::{CodeInfo, Z4Code};
use crate::enumerator::{binom, Flavor};
use crate::error::{Error, Result};
use crate::galois::GaloisRing;
use crate::z4::{BinaryVector, Z4Vector};

/// Counts A_i indexed by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution(pub Vec<BigUint>);

impl WeightDistribution {
    pub fn from_counts(counts: &[u64]) -> Self {
        WeightDistribution(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.0.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero entries as (weight, count).
    pub fn nonzero(&self) -> Vec<(usize, BigUint)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w, c.clone())).collect()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.nonzero().into_iter().map(|(w, _)| w).find(|&w| w > 0)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.nonzero().into_iter().map(|(w, c)| json!([w, c.to_string()])).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Lee,
    HammingOfImage,
}

/// Exhaustive weight distribution; refuses codes with more than `cap` words.
pub fn weight_distribution(code: &Z4Code, metric: Metric, workers: usize, cap: u128) -> Result<WeightDistribution> {
    let words = 1u128 << code.log2_size().min(127);
    if words > cap {
        return Err(Error::TooLarge { words, cap });
    }
    let counts = match metric {
        Metric::Lee => code.lee_distribution(workers),
        Metric::HammingOfImage => {
            let len = 2 * code.len() + 1;
            code.par_fold(
                workers,
                || vec![0u64; len],
                |acc, w| acc[w.gray_map().weight()] += 1,
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
        }
    };
    Ok(WeightDistribution::from_counts(&counts))
}

/// Lee distribution obtained from the dual code's enumerator by MacWilliams.
pub fn weight_distribution_via_dual(code: &Z4Code, workers: usize, cap: u128) -> Result<WeightDistribution> {
    let dual = code.dual();
    let words = 1u128 << dual.log2_size().min(127);
    if words > cap {
        return Err(Error::TooLarge { words, cap });
    }
    let e = dual.enumerator(Flavor::Lee, workers);
    Ok(WeightDistribution(e.macwilliams(&dual.size())?.distribution()?))
}

/// Closed-form Hamming distribution of the binary Kerdock image of length 2^{m+1}.
pub fn kerdock_weight_formula(m: u32) -> Result<WeightDistribution> {
    if !(2..=30).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    let n = 1usize << m;
    let mut d = vec![BigUint::zero(); 2 * n + 1];
    let big = |x: u64| BigUint::from(x);
    let nn = n as u64;
    let (off, side, middle) = if m % 2 == 1 {
        (1usize << ((m - 1) / 2), 2 * nn * (nn - 1), 4 * nn - 2)
    } else {
        (1usize << (m / 2), nn * (nn - 1), 2 * nn * (nn + 1) - 2)
    };
    d[0] = BigUint::one();
    d[n - off] = big(side);
    d[n] = big(middle);
    d[n + off] = big(side);
    d[2 * n] = BigUint::one();
    Ok(WeightDistribution(d))
}

/// Whether the distance distribution from each sampled word equals the weight
/// distribution of the set.
pub fn distance_invariance_check(words: &[BinaryVector], samples: &[usize]) -> Result<bool> {
    let Some(first) = words.first() else { return Ok(true) };
    let len = first.len();
    let mut base = vec![0u64; len + 1];
    for w in words {
        if w.len() != len {
            return Err(Error::LengthMismatch { expected: len, actual: w.len() });
        }
        base[w.weight()] += 1;
    }
    for &s in samples {
        let u = words.get(s).ok_or_else(|| Error::InvalidParameters(format!("sample index {s} out of range")))?;
        let mut d = vec![0u64; len + 1];
        for w in words {
            d[u.hamming_distance(w)?] += 1;
        }
        if d != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignFailure {
    pub reason: String,
    /// A t-subset whose count differs from the first one seen.
    pub witness: Option<Vec<usize>>,
}

/// Supports of the words of weight `k`.
pub fn blocks_of_weight<'a>(words: impl IntoIterator<Item = &'a BinaryVector>, k: usize) -> Vec<BinaryVector> {
    words.into_iter().filter(|w| w.weight() == k).cloned().collect()
}

/// λ such that every t-subset of the v points lies in exactly λ blocks.
pub fn design_check(blocks: &[BinaryVector], t: usize, v: usize, k: usize) -> std::result::Result<u64, DesignFailure> {
    let fail = |reason: String, witness| Err(DesignFailure { reason, witness });
    if blocks.is_empty() {
        return fail("no blocks".into(), None);
    }
    if v > 64 || t == 0 || t > k {
        return fail(format!("unsupported parameters t = {t}, v = {v}, k = {k}"), None);
    }
    let mut counts: HashMap<u64, u64> = HashMap::new();
    for b in blocks {
        if b.len() != v || b.weight() != k {
            return fail(format!("block {b} does not have length {v} and size {k}"), None);
        }
        let pts: Vec<usize> = b.ones().collect();
        for_each_subset(&pts, t, &mut |mask| *counts.entry(mask).or_insert(0) += 1);
    }
    let total = binom(v, t);
    if BigUint::from(counts.len()) != total.to_biguint().unwrap_or_default() {
        let all: Vec<usize> = (0..v).collect();
        let mut missing = None;
        for_each_subset(&all, t, &mut |mask| {
            if missing.is_none() && !counts.contains_key(&mask) {
                missing = Some(mask);
            }
        });
        return fail("some t-subset lies in no block".into(), missing.map(mask_points));
    }
    let lambda = *counts.values().next().expect("nonempty");
    if let Some((&mask, _)) = counts.iter().find(|(_, &c)| c != lambda) {
        return fail(format!("t-subsets are covered unevenly (λ = {lambda} and {})", counts[&mask]), Some(mask_points(mask)));
    }
    Ok(lambda)
}

fn mask_points(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn for_each_subset(pts: &[usize], t: usize, f: &mut impl FnMut(u64)) {
    fn rec(pts: &[usize], t: usize, start: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if t == 0 {
            f(mask);
            return;
        }
        for i in start..=pts.len().saturating_sub(t) {
            rec(pts, t - 1, i + 1, mask | 1 << pts[i], f);
        }
    }
    if t <= pts.len() {
        rec(pts, t, 0, 0, f);
    }
}

/// The linear subcode generated by the all-ones word and the rows of 2ξ^t.
pub fn kerdock_rm_subcode(ring: &GaloisRing) -> Result<Z4Code> {
    let n = ring.n() as usize;
    let mut rows = vec![Z4Vector::from_symbols(&vec![1; n + 1]).expect("ones are symbols")];
    for i in 0..ring.m() {
        let mut row = Z4Vector::zeros(n + 1);
        for (t, x) in ring.powers().iter().enumerate() {
            row.set(t + 1, 2 * x.coord(i) & 3);
        }
        rows.push(row);
    }
    Z4Code::from_generators(&rows, n + 1, CodeInfo::generic())
}

/// The binary linear code spanned by the Gray images of a code's codewords.
pub fn gray_span(code: &Z4Code, cap: u128) -> Result<BinaryCode> {
    let mut span = BinaryCode::from_generators(&[], 2 * code.len())?;
    for w in code.codewords(cap)? {
        span.insert(w.gray_map());
    }
    Ok(span)
}

/// Coordinate map from the binary-index order of ZRM codes to the cyclic
/// order (∞, 0, …, n−1): cyclic position j carries ZRM coordinate `perm[j]`.
pub fn zrm_to_cyclic(ring: &GaloisRing) -> Vec<usize> {
    let n = ring.n() as usize;
    std::iter::once(0).chain((0..n).map(|t| ring.field().exp(t as i64).0 as usize)).collect()
}

/// The inclusions ZRM(1,m) ⊆ 𝒦 ⊆ ZRM(2,m) ⊆ ZRM(2,m)⊥ ⊆ 𝒫 ⊆ ZRM(1,m)⊥, with
/// the ZRM codes moved to cyclic order.
pub fn inclusion_chain(ring: &GaloisRing) -> Result<Vec<(String, bool)>> {
    let m = ring.m();
    let perm = zrm_to_cyclic(ring);
    let z1 = zrm(1, m)?.permuted(&perm)?;
    let z2 = zrm(2, m)?.permuted(&perm)?;
    let k = kerdock(ring)?;
    let p = k.dual();
    let z2d = z2.dual();
    let z1d = z1.dual();
    Ok(vec![
        ("ZRM(1,m) in K".to_string(), z1.is_subcode_of(&k)),
        ("K in ZRM(2,m)".to_string(), k.is_subcode_of(&z2)),
        ("ZRM(2,m) in ZRM(2,m)^perp".to_string(), z2.is_subcode_of(&z2d)),
        ("ZRM(2,m)^perp in P".to_string(), z2d.is_subcode_of(&p)),
        ("P in ZRM(1,m)^perp".to_string(), p.is_subcode_of(&z1d)),
    ])
}

/// Two `h` shift rows a, b of the `Preparata` generator whose images satisfy
/// wt(φ(a) + φ(b) + φ(a + b)) = 2: a weight-2 word in the span of φ(𝒫).
pub fn preparata_span_witness(ring: &GaloisRing) -> Option<(usize, usize, BinaryVector)> {
    let rows = preparata_shift_rows(ring);
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = (&rows[i], &rows[j]);
            let w = a.gray_map().xor(&b.gray_map()).xor(&(a + b).gray_map());
            if w.weight() == 2 {
                return Some((i, j, w));
            }
        }
    }
    None
}

/// Hamming distribution of RM(1, m+1), for comparison with the image of the
/// Reed-Muller subcode.
pub fn rm1_distribution(m: u32) -> Result<Vec<u64>> {
    reed_muller(1, m + 1).weight_distribution(m as usize + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::families::{kerdock_with, octacode, preparata};
    use crate::enumerator::binary_macwilliams;

    #[test]
    fn kerdock_formula_matches_enumeration() {
        for m in [3u32, 4, 5] {
            let ring = GaloisRing::new(m).unwrap();
            let k = kerdock_with(&ring, true).unwrap();
            let d = weight_distribution(&k, Metric::HammingOfImage, 4, 1 << 20).unwrap();
            assert_eq!(d, kerdock_weight_formula(m).unwrap(), "m = {m}");
            assert_eq!(d, weight_distribution(&k, Metric::Lee, 2, 1 << 20).unwrap());
            assert_eq!(d.total(), BigUint::from(1u64 << (2 * m + 2)));
        }
        let f5 = kerdock_weight_formula(5).unwrap();
        assert_eq!(f5.nonzero().iter().map(|(w, _)| *w).collect::<Vec<_>>(), vec![0, 28, 32, 36, 64]);
        assert_eq!(f5.get(28), BigUint::from(1984u32));
        assert_eq!(f5.get(32), BigUint::from(126u32));
    }

    #[test]
    fn zero_code_distribution() {
        let d = weight_distribution(&Z4Code::zero_code(5), Metric::Lee, 1, 10).unwrap();
        assert_eq!(d.nonzero(), vec![(0, BigUint::one())]);
        assert!(weight_distribution(&octacode(), Metric::Lee, 1, 100).is_err());
    }

    #[test]
    fn via_dual_agrees() {
        let ring = GaloisRing::new(5).unwrap();
        let p = preparata(&ring).unwrap();
        let d = weight_distribution_via_dual(&p, 4, 1 << 20).unwrap();
        assert_eq!(d.total(), BigUint::from(1u64) << 52);
        assert_eq!(d.min_nonzero_weight(), Some(6));
        let kd = kerdock_weight_formula(5).unwrap();
        assert_eq!(binary_macwilliams(&kd.0, 64).unwrap(), d.0);
    }

    #[test]
    fn invariance() {
        let img: Vec<BinaryVector> = octacode().codewords(1 << 10).unwrap().iter().map(|c| c.gray_map()).collect();
        let all: Vec<usize> = (0..img.len()).collect();
        assert!(distance_invariance_check(&img, &all).unwrap());
        let bad: Vec<BinaryVector> = ["000", "100", "011"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(!distance_invariance_check(&bad, &[1]).unwrap());
        let sym: Vec<BinaryVector> = ["000", "110", "011"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(distance_invariance_check(&sym, &[0, 1, 2]).unwrap());
        let lin = reed_muller(1, 3).codewords(4).unwrap();
        assert!(distance_invariance_check(&lin, &[3, 7]).unwrap());
    }

    #[test]
    fn designs() {
        let img: Vec<BinaryVector> = octacode().codewords(1 << 10).unwrap().iter().map(|c| c.gray_map()).collect();
        let blocks = blocks_of_weight(&img, 6);
        assert_eq!(blocks.len(), 112);
        assert_eq!(design_check(&blocks, 3, 16, 6), Ok(4));
        let zd = zrm(1, 3).unwrap().dual();
        let img: Vec<BinaryVector> = zd.codewords(1 << 12).unwrap().iter().map(|c| c.gray_map()).collect();
        let blocks = blocks_of_weight(&img, 4);
        assert_eq!(blocks.len(), 140);
        assert_eq!(design_check(&blocks, 3, 16, 4), Ok(1));
        assert!(design_check(&[], 1, 4, 2).is_err());
        let uneven: Vec<BinaryVector> = ["1100", "1010"].iter().map(|s| s.parse().unwrap()).collect();
        let f = design_check(&uneven, 1, 4, 2).unwrap_err();
        assert!(f.witness.is_some());
    }

    #[test]
    fn rm_subcode_image() {
        for m in [3u32, 5] {
            let ring = GaloisRing::new(m).unwrap();
            let c = kerdock_rm_subcode(&ring).unwrap();
            assert!(c.is_subcode_of(&kerdock(&ring).unwrap()));
            let span = gray_span(&c, 1 << 12).unwrap();
            assert_eq!(span.dimension(), m as usize + 2);
            let d = weight_distribution(&c, Metric::HammingOfImage, 1, 1 << 12).unwrap();
            assert_eq!(d, WeightDistribution::from_counts(&rm1_distribution(m).unwrap()));
        }
    }

    #[test]
    fn chain_at_m5() {
        let ring = GaloisRing::new(5).unwrap();
        for (name, ok) in inclusion_chain(&ring).unwrap() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn span_witness() {
        let ring = GaloisRing::new(5).unwrap();
        let (i, j, w) = preparata_span_witness(&ring).unwrap();
        assert_eq!((i, j, w.weight()), (0, 1, 2));
        assert!(preparata_span_witness(&GaloisRing::new(3).unwrap()).is_none());
        let p3 = gray_span(&octacode(), 1 << 10).unwrap();
        assert_eq!(p3.dimension(), 11);
    }
}
