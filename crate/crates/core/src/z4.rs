//! Vectors over ℤ₄ and ℤ₂, the Gray map and the Lee metric.
//!
//! A [`Z4Vector`] keeps its symbols as two packed bit-planes: the α-plane
//! (low bit) and the β-plane (high bit), so `c = α(c) + 2β(c)`. The Gray
//! map and the component maps α, β, γ are then whole-plane operations.
//!
//! ```
//! use z4codes::z4::Z4Vector;
//!
//! let v: Z4Vector = "1230".parse().unwrap();
//! assert_eq!(v.lee_weight(), 4);
//! assert_eq!(v.gray_map().to_string(), "01101100");
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

fn tail_mask(len: usize) -> u64 {
    match len % WORD {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A binary vector of fixed length, packed 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    bits: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        BinaryVector { len, bits: vec![0; words_for(len)] }
    }

    pub fn all_ones(len: usize) -> Self {
        let mut v = BinaryVector { len, bits: vec![u64::MAX; words_for(len)] };
        v.clear_tail();
        v
    }

    /// Builds a vector from 0/1 values; any other value is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut v = BinaryVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => v.set(i, true),
                _ => {
                    return Err(Error::InvalidSymbol {
                        position: i,
                        symbol: char::from_digit(u32::from(b).min(35), 36).unwrap_or('?'),
                    })
                }
            }
        }
        Ok(v)
    }

    /// Builds a vector of length `len` from the low `len` bits of `word`.
    pub fn from_u64(word: u64, len: usize) -> Self {
        assert!(len <= WORD);
        let mut v = BinaryVector { len, bits: vec![word; words_for(len)] };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.bits.last_mut() {
            *last &= tail_mask(self.len);
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.bits[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.bits[i / WORD] |= mask;
        } else {
            self.bits[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.bits[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        check_len(self.len, other.len)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// Componentwise product `u ∗ v`.
    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len);
        BinaryVector {
            len: self.len,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len);
        BinaryVector {
            len: self.len,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = BinaryVector::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len);
        let mut out = BinaryVector::zeros(end - start);
        for i in start..end {
            if self.get(i) {
                out.set(i - start, true);
            }
        }
        out
    }

    /// Splits an even-length vector into its left and right halves.
    pub fn halves(&self) -> Result<(Self, Self)> {
        if self.len % 2 != 0 {
            return Err(Error::OddLength(self.len));
        }
        let n = self.len / 2;
        Ok((self.slice(0, n), self.slice(n, self.len)))
    }

    /// The swap map σ exchanging left and right halves, i.e. the coordinate
    /// permutation (1, n+1)(2, n+2)…(n, 2n).
    pub fn swap_halves(&self) -> Result<Self> {
        let (l, r) = self.halves()?;
        Ok(r.concat(&l))
    }

    /// Indices of the nonzero coordinates, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    /// Coordinates permuted so that `out[j] = self[perm[j]]`.
    pub fn gather(&self, perm: &[usize]) -> Self {
        let mut out = BinaryVector::zeros(perm.len());
        for (j, &p) in perm.iter().enumerate() {
            if self.get(p) {
                out.set(j, true);
            }
        }
        out
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let mut v = BinaryVector::zeros(s.chars().count());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::InvalidSymbol { position: i, symbol: ch }),
            }
        }
        Ok(v)
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// A vector over ℤ₄ stored as an α-plane and a β-plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Vector {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Z4Vector {
    pub fn zeros(len: usize) -> Self {
        let w = words_for(len);
        Z4Vector { len, lo: vec![0; w], hi: vec![0; w] }
    }

    /// Builds a vector from symbols in `0..4`; anything else is rejected.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        let mut v = Z4Vector::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            if s > 3 {
                return Err(Error::InvalidSymbol {
                    position: i,
                    symbol: char::from_digit(u32::from(s).min(35), 36).unwrap_or('?'),
                });
            }
            v.set(i, s);
        }
        Ok(v)
    }

    /// Reduces arbitrary integers mod 4.
    pub fn from_ints(values: &[i64]) -> Self {
        let mut v = Z4Vector::zeros(values.len());
        for (i, &x) in values.iter().enumerate() {
            v.set(i, x.rem_euclid(4) as u8);
        }
        v
    }

    /// `alpha + 2·beta`, i.e. the inverse of the 2-adic expansion.
    pub fn from_planes(alpha: &BinaryVector, beta: &BinaryVector) -> Result<Self> {
        check_len(alpha.len, beta.len)?;
        Ok(Z4Vector { len: alpha.len, lo: alpha.bits.clone(), hi: beta.bits.clone() })
    }

    /// Lifts a binary vector to ℤ₄ with entries 0 and 1.
    pub fn from_binary(b: &BinaryVector) -> Self {
        Z4Vector { len: b.len, lo: b.bits.clone(), hi: vec![0; b.bits.len()] }
    }

    /// `2·b` for a binary vector `b`.
    pub fn twice_binary(b: &BinaryVector) -> Self {
        Z4Vector { len: b.len, lo: vec![0; b.bits.len()], hi: b.bits.clone() }
    }

    pub fn unit(len: usize, position: usize, value: u8) -> Self {
        let mut v = Z4Vector::zeros(len);
        v.set(position, value & 3);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let (w, b) = (i / WORD, i % WORD);
        ((self.lo[w] >> b & 1) | (self.hi[w] >> b & 1) << 1) as u8
    }

    pub fn set(&mut self, i: usize, value: u8) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        assert!(value < 4, "symbol {value} not in Z4");
        let (w, mask) = (i / WORD, 1u64 << (i % WORD));
        if value & 1 == 1 {
            self.lo[w] |= mask;
        } else {
            self.lo[w] &= !mask;
        }
        if value & 2 == 2 {
            self.hi[w] |= mask;
        } else {
            self.hi[w] &= !mask;
        }
    }

    pub fn symbols(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&w| w == 0)
    }

    /// α(c): the low bit of each symbol (reduction mod 2).
    pub fn alpha(&self) -> BinaryVector {
        BinaryVector { len: self.len, bits: self.lo.clone() }
    }

    /// β(c): the high bit of each symbol.
    pub fn beta(&self) -> BinaryVector {
        BinaryVector { len: self.len, bits: self.hi.clone() }
    }

    /// γ(c) = α(c) + β(c).
    pub fn gamma(&self) -> BinaryVector {
        BinaryVector {
            len: self.len,
            bits: self.lo.iter().zip(&self.hi).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn alpha_beta_gamma(&self) -> (BinaryVector, BinaryVector, BinaryVector) {
        (self.alpha(), self.beta(), self.gamma())
    }

    /// The Gray map φ(c) = (β(c), γ(c)), of length 2n.
    pub fn gray_map(&self) -> BinaryVector {
        self.beta().concat(&self.gamma())
    }

    /// Inverse of the Gray map.
    pub fn gray_inverse(b: &BinaryVector) -> Result<Self> {
        let (beta, gamma) = b.halves()?;
        if beta.is_empty() {
            return Err(Error::Empty);
        }
        let alpha = beta.xor(&gamma);
        Z4Vector::from_planes(&alpha, &beta)
    }

    /// Counts `(n₀, n₁, n₂, n₃)` of symbols equal to 0, 1, 2, 3.
    pub fn composition(&self) -> [usize; 4] {
        let mut n = [0usize; 4];
        for (&a, &b) in self.lo.iter().zip(&self.hi) {
            n[1] += (a & !b).count_ones() as usize;
            n[2] += (!a & b).count_ones() as usize;
            n[3] += (a & b).count_ones() as usize;
        }
        n[0] = self.len - n[1] - n[2] - n[3];
        n
    }

    /// Lee weight: symbol weights 0, 1, 2, 1 summed over coordinates.
    pub fn lee_weight(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| (a.count_ones() + 2 * (b & !a).count_ones()) as usize)
            .sum()
    }

    pub fn hamming_weight(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    pub fn lee_distance(&self, other: &Self) -> Result<usize> {
        check_len(self.len, other.len)?;
        Ok((self - other).lee_weight())
    }

    /// Inner product Σ aᵢbᵢ mod 4.
    pub fn dot(&self, other: &Self) -> u8 {
        assert_eq!(self.len, other.len);
        let mut odd = 0u32;
        let mut even = 0u32;
        for i in 0..self.lo.len() {
            let (a0, a1, b0, b1) = (self.lo[i], self.hi[i], other.lo[i], other.hi[i]);
            odd += (a0 & b0).count_ones();
            even += (a0 & b1).count_ones() + (a1 & b0).count_ones();
        }
        ((odd + 2 * even) % 4) as u8
    }

    /// Multiplication by a scalar in ℤ₄.
    pub fn scale(&self, k: u8) -> Self {
        match k & 3 {
            0 => Z4Vector::zeros(self.len),
            1 => self.clone(),
            2 => Z4Vector { len: self.len, lo: vec![0; self.lo.len()], hi: self.lo.clone() },
            _ => -self,
        }
    }

    /// Componentwise product with a binary vector (zeroes coordinates outside its support).
    pub fn mask(&self, keep: &BinaryVector) -> Self {
        assert_eq!(self.len, keep.len);
        Z4Vector {
            len: self.len,
            lo: self.lo.iter().zip(&keep.bits).map(|(a, m)| a & m).collect(),
            hi: self.hi.iter().zip(&keep.bits).map(|(a, m)| a & m).collect(),
        }
    }

    /// Support of the vector as a binary vector.
    pub fn support(&self) -> BinaryVector {
        BinaryVector {
            len: self.len,
            bits: self.lo.iter().zip(&self.hi).map(|(a, b)| a | b).collect(),
        }
    }

    /// Coordinates permuted so that `out[j] = self[perm[j]]`.
    pub fn gather(&self, perm: &[usize]) -> Self {
        let mut out = Z4Vector::zeros(perm.len());
        for (j, &p) in perm.iter().enumerate() {
            let s = self.get(p);
            if s != 0 {
                out.set(j, s);
            }
        }
        out
    }

    /// Coordinates permuted so that `out[perm[j]] = self[j]`.
    pub fn scatter(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len);
        let mut out = Z4Vector::zeros(self.len);
        for (j, &p) in perm.iter().enumerate() {
            let s = self.get(j);
            if s != 0 {
                out.set(p, s);
            }
        }
        out
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Z4Vector::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    /// Nonzero coordinates as `(position, value)` pairs.
    pub fn nonzeros(&self) -> Vec<(usize, u8)> {
        self.support().ones().map(|i| (i, self.get(i))).collect()
    }

    fn add_planes(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "length mismatch in Z4 addition");
        let mut lo = Vec::with_capacity(self.lo.len());
        let mut hi = Vec::with_capacity(self.hi.len());
        for i in 0..self.lo.len() {
            let (a0, a1, b0, b1) = (self.lo[i], self.hi[i], other.lo[i], other.hi[i]);
            lo.push(a0 ^ b0);
            hi.push(a1 ^ b1 ^ (a0 & b0));
        }
        Z4Vector { len: self.len, lo, hi }
    }
}

impl Add for &Z4Vector {
    type Output = Z4Vector;
    fn add(self, rhs: &Z4Vector) -> Z4Vector {
        self.add_planes(rhs)
    }
}

impl Add for Z4Vector {
    type Output = Z4Vector;
    fn add(self, rhs: Z4Vector) -> Z4Vector {
        self.add_planes(&rhs)
    }
}

impl AddAssign<&Z4Vector> for Z4Vector {
    fn add_assign(&mut self, rhs: &Z4Vector) {
        assert_eq!(self.len, rhs.len, "length mismatch in Z4 addition");
        for i in 0..self.lo.len() {
            let carry = self.lo[i] & rhs.lo[i];
            self.lo[i] ^= rhs.lo[i];
            self.hi[i] ^= rhs.hi[i] ^ carry;
        }
    }
}

impl Neg for &Z4Vector {
    type Output = Z4Vector;
    fn neg(self) -> Z4Vector {
        Z4Vector {
            len: self.len,
            lo: self.lo.clone(),
            hi: self.lo.iter().zip(&self.hi).map(|(a, b)| a ^ b).collect(),
        }
    }
}

impl Neg for Z4Vector {
    type Output = Z4Vector;
    fn neg(self) -> Z4Vector {
        -&self
    }
}

impl Sub for &Z4Vector {
    type Output = Z4Vector;
    fn sub(self, rhs: &Z4Vector) -> Z4Vector {
        self.add_planes(&-rhs)
    }
}

impl Sub for Z4Vector {
    type Output = Z4Vector;
    fn sub(self, rhs: Z4Vector) -> Z4Vector {
        &self - &rhs
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector({self})")
    }
}

impl FromStr for Z4Vector {
    type Err = Error;

    /// One character per symbol, coordinate 0 (∞ when present) first.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let mut v = Z4Vector::zeros(s.chars().count());
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d < 4 => v.set(i, d as u8),
                _ => return Err(Error::InvalidSymbol { position: i, symbol: ch }),
            }
        }
        Ok(v)
    }
}

/// Hamming distance between Gray images, computed through the binary side.
pub fn gray_distance(a: &Z4Vector, b: &Z4Vector) -> Result<usize> {
    a.gray_map().hamming_distance(&b.gray_map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_z4(len: usize) -> impl Strategy<Value = Z4Vector> {
        proptest::collection::vec(0u8..4, len).prop_map(|s| Z4Vector::from_symbols(&s).unwrap())
    }

    #[test]
    fn gray_table() {
        let expect = ["00", "01", "11", "10"];
        for (c, e) in expect.iter().enumerate() {
            let v = Z4Vector::from_symbols(&[c as u8]).unwrap();
            assert_eq!(v.gray_map().to_string(), *e);
        }
    }

    #[test]
    fn gray_of_1230() {
        let v: Z4Vector = "1230".parse().unwrap();
        assert_eq!(v.gray_map().to_string(), "01101100");
        assert_eq!(v.lee_weight(), 4);
    }

    #[test]
    fn gray_zero() {
        let z = Z4Vector::zeros(70);
        let g = z.gray_map();
        assert_eq!(g.len(), 140);
        assert!(g.is_zero());
    }

    #[test]
    fn gray_inverse_cases() {
        let b: BinaryVector = "00".parse().unwrap();
        assert_eq!(Z4Vector::gray_inverse(&b).unwrap().to_string(), "0");
        let b: BinaryVector = "10".parse().unwrap();
        assert_eq!(Z4Vector::gray_inverse(&b).unwrap().to_string(), "3");
        let b: BinaryVector = "101".parse().unwrap();
        assert_eq!(Z4Vector::gray_inverse(&b), Err(Error::OddLength(3)));
    }

    #[test]
    fn component_maps_of_three() {
        let v = Z4Vector::from_symbols(&[3, 0]).unwrap();
        let (a, b, g) = v.alpha_beta_gamma();
        assert_eq!((a.get(0), b.get(0), g.get(0)), (true, true, false));
        assert_eq!((a.get(1), b.get(1), g.get(1)), (false, false, false));
    }

    #[test]
    fn parse_rejects_bad_symbols() {
        assert!(matches!("0124".parse::<Z4Vector>(), Err(Error::InvalidSymbol { position: 3, .. })));
        assert!(matches!("".parse::<Z4Vector>(), Err(Error::Empty)));
        assert!("012".parse::<BinaryVector>().is_err());
    }

    #[test]
    fn lee_distance_length_mismatch() {
        let a = Z4Vector::zeros(3);
        let b = Z4Vector::zeros(4);
        assert_eq!(a.lee_distance(&b), Err(Error::LengthMismatch { expected: 3, actual: 4 }));
    }

    #[test]
    fn isometry_exhaustive_small() {
        for n in 1..=3usize {
            let total = 4usize.pow(n as u32);
            let vecs: Vec<Z4Vector> = (0..total)
                .map(|mut x| {
                    let mut s = vec![0u8; n];
                    for d in s.iter_mut() {
                        *d = (x % 4) as u8;
                        x /= 4;
                    }
                    Z4Vector::from_symbols(&s).unwrap()
                })
                .collect();
            for a in &vecs {
                for b in &vecs {
                    assert_eq!(gray_distance(a, b).unwrap(), a.lee_distance(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn composition_counts() {
        let v: Z4Vector = "0112233300".parse().unwrap();
        assert_eq!(v.composition(), [3, 2, 2, 3]);
    }

    proptest! {
        #[test]
        fn gray_round_trip(v in arb_z4(97)) {
            prop_assert_eq!(Z4Vector::gray_inverse(&v.gray_map()).unwrap(), v);
        }

        #[test]
        fn two_adic_and_gamma(v in arb_z4(131)) {
            let (a, b, g) = v.alpha_beta_gamma();
            prop_assert!(a.xor(&b).xor(&g).is_zero());
            let back = Z4Vector::from_binary(&a) + Z4Vector::twice_binary(&b);
            prop_assert_eq!(back, v);
        }

        #[test]
        fn lee_weight_is_gray_weight(v in arb_z4(200)) {
            prop_assert_eq!(v.lee_weight(), v.gray_map().weight());
        }

        #[test]
        fn lee_distance_is_gray_distance(a in arb_z4(70), b in arb_z4(70)) {
            prop_assert_eq!(a.lee_distance(&b).unwrap(), gray_distance(&a, &b).unwrap());
        }

        #[test]
        fn arithmetic_matches_symbolwise(a in arb_z4(67), b in arb_z4(67), k in 0u8..4) {
            let sum = &a + &b;
            let diff = &a - &b;
            let sc = a.scale(k);
            let mut dot = 0u32;
            for i in 0..67 {
                prop_assert_eq!(sum.get(i), (a.get(i) + b.get(i)) % 4);
                prop_assert_eq!(diff.get(i), (4 + a.get(i) - b.get(i)) % 4);
                prop_assert_eq!(sc.get(i), (k * a.get(i)) % 4);
                dot += u32::from(a.get(i)) * u32::from(b.get(i));
            }
            prop_assert_eq!(u32::from(a.dot(&b)), dot % 4);
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn text_round_trip(v in arb_z4(40)) {
            prop_assert_eq!(v.to_string().parse::<Z4Vector>().unwrap(), v);
        }
    }
}
