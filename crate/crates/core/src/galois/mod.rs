//! The Galois ring GR(4^m) and its residue field.
//!
//! Elements are held in additive coordinates `b₀ + b₁ξ + … + b_{m−1}ξ^{m−1}`
//! with `bᵢ ∈ ℤ₄`, packed as two bit-planes like [`crate::z4::Z4Vector`].
//!
//! ```
//! use z4codes::galois::GaloisRing;
//!
//! let r = GaloisRing::new(3).unwrap();
//! assert_eq!(r.h().to_string(), "3121");
//! assert_eq!(r.format(r.xi_pow(3)), "132");
//! ```

pub mod field;
pub mod poly;
pub mod props;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;

use crate::error::{Error, Result};
use field::{FieldElement, GaloisField};
use poly::Z4Poly;

/// Default primitive polynomials h₂, indexed by m.
pub const DEFAULT_H2: [(u32, u64); 14] = [
    (2, 0b111),
    (3, 0b1011),
    (4, 0b10011),
    (5, 0b100101),
    (6, 0b1000011),
    (7, 0b10000011),
    (8, 0b1_0001_1101),
    (9, 0b10_0001_0001),
    (10, 0b100_0000_1001),
    (11, 0b1000_0000_0101),
    (12, 0b1_0000_0101_0011),
    (13, 0b10_0000_0001_1011),
    (14, 0b100_0100_0100_0011),
    (15, 0b1000_0000_0000_0011),
];

pub fn default_h2(m: u32) -> Result<u64> {
    DEFAULT_H2
        .iter()
        .find(|&&(d, _)| d == m)
        .map(|&(_, p)| p)
        .ok_or(Error::DegreeOutOfRange(m))
}

/// An element of GR(4^m) in additive coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElement {
    lo: u32,
    hi: u32,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { lo: 0, hi: 0 };
    pub const ONE: RingElement = RingElement { lo: 1, hi: 0 };

    pub fn from_planes(lo: u32, hi: u32) -> Self {
        RingElement { lo, hi }
    }

    /// The image of an integer in ℤ₄ ⊂ R.
    pub fn from_z4(k: u8) -> Self {
        RingElement { lo: u32::from(k & 1), hi: u32::from(k >> 1 & 1) }
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    pub fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// Coordinate bᵢ ∈ ℤ₄.
    pub fn coord(self, i: u32) -> u8 {
        ((self.lo >> i & 1) | (self.hi >> i & 1) << 1) as u8
    }

    pub fn from_coords(coords: &[u8]) -> Self {
        let mut e = RingElement::ZERO;
        for (i, &c) in coords.iter().enumerate() {
            e.lo |= u32::from(c & 1) << i;
            e.hi |= u32::from(c >> 1 & 1) << i;
        }
        e
    }

    /// Multiplication by 2.
    pub fn double(self) -> Self {
        RingElement { lo: 0, hi: self.lo }
    }

    pub fn scale(self, k: u8) -> Self {
        match k & 3 {
            0 => RingElement::ZERO,
            1 => self,
            2 => self.double(),
            _ => -self,
        }
    }

    /// Reduction modulo 2, μ: R → GF(2^m).
    pub fn mu(self) -> FieldElement {
        FieldElement(self.lo)
    }

    /// True iff the element lies in 2R.
    pub fn is_zero_divisor(self) -> bool {
        self.lo == 0
    }

    fn to_string_m(self, m: u32) -> String {
        (0..m).map(|i| char::from(b'0' + self.coord(i))).collect()
    }
}

impl std::ops::Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        RingElement { lo: self.lo ^ rhs.lo, hi: self.hi ^ rhs.hi ^ (self.lo & rhs.lo) }
    }
}

impl std::ops::AddAssign for RingElement {
    fn add_assign(&mut self, rhs: RingElement) {
        *self = *self + rhs;
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { lo: self.lo, hi: self.hi ^ self.lo }
    }
}

impl std::ops::Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        self + -rhs
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = 32 - (self.lo | self.hi).leading_zeros();
        write!(f, "RingElement({})", self.to_string_m(width.max(1)))
    }
}

/// A ring element paired with its degree for printing as `b₀b₁…b_{m−1}`.
pub struct Coords(pub RingElement, pub u32);

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_string_m(self.1))
    }
}

/// The Galois ring GR(4^m) = ℤ₄[X]/(h(X)), with ξ a root of h of order 2^m − 1.
#[derive(Clone, Debug)]
pub struct GaloisRing {
    m: u32,
    n: u32,
    h: Z4Poly,
    h2: u64,
    field: GaloisField,
    // ξ^m = neg_h_low in additive coordinates.
    neg_h_low: RingElement,
    pow: Vec<RingElement>,
    // T(ξ^i) for the basis 1, ξ, …, ξ^{m−1}.
    basis_trace: Vec<u8>,
    coord_mask: u32,
}

impl GaloisRing {
    /// GR(4^m) from the default primitive polynomial for `m`.
    pub fn new(m: u32) -> Result<Self> {
        GaloisRing::with_h2(default_h2(m)?)
    }

    /// GR(4^m) from a chosen primitive binary polynomial (bit i = coefficient of Xⁱ).
    pub fn with_h2(h2: u64) -> Result<Self> {
        let m = poly::binary_degree(h2).unwrap_or(0);
        if !(2..=15).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let h = poly::graeffe_lift(h2)?;
        let field = GaloisField::new(h2)?;
        let n = (1u32 << m) - 1;
        let neg_h_low = RingElement::from_coords(
            &(0..m as usize).map(|i| (4 - h.coeff(i)) & 3).collect::<Vec<_>>(),
        );
        let mut ring = GaloisRing {
            m,
            n,
            h,
            h2,
            field,
            neg_h_low,
            pow: Vec::with_capacity(n as usize),
            basis_trace: Vec::new(),
            coord_mask: (1u32 << m) - 1,
        };
        let xi = ring.xi();
        let mut x = RingElement::ONE;
        for _ in 0..n {
            ring.pow.push(x);
            x = ring.mul(x, xi);
        }
        if x != RingElement::ONE {
            return Err(Error::LiftFailed(format!("ξ^{n} ≠ 1")));
        }
        for (k, p) in ring.pow.iter().enumerate() {
            if p.mu() != ring.field.exp(k as i64) {
                return Err(Error::LiftFailed(format!("μ(ξ^{k}) ≠ θ^{k}")));
            }
        }
        ring.basis_trace = (0..m).map(|i| ring.trace_slow(ring.basis(i))).collect();
        Ok(ring)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// n = 2^m − 1.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn h(&self) -> &Z4Poly {
        &self.h
    }

    pub fn h2(&self) -> u64 {
        self.h2
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn xi(&self) -> RingElement {
        self.basis(1 % self.m)
    }

    /// The basis element ξ^i for i < m.
    pub fn basis(&self, i: u32) -> RingElement {
        RingElement { lo: 1 << i, hi: 0 }
    }

    /// ξ^k for any integer k.
    pub fn xi_pow(&self, k: i64) -> RingElement {
        self.pow[k.rem_euclid(i64::from(self.n)) as usize]
    }

    pub fn powers(&self) -> &[RingElement] {
        &self.pow
    }

    /// Prints an element as its coordinate string `b₀b₁…b_{m−1}`.
    pub fn format(&self, c: RingElement) -> String {
        c.to_string_m(self.m)
    }

    pub fn parse(&self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        if s.chars().count() != self.m as usize {
            return Err(Error::LengthMismatch { expected: self.m as usize, actual: s.chars().count() });
        }
        let mut coords = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d < 4 => coords.push(d as u8),
                _ => return Err(Error::InvalidSymbol { position: i, symbol: ch }),
            }
        }
        Ok(RingElement::from_coords(&coords))
    }

    /// All 4^m elements.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let size = 1u32 << self.m;
        (0..size).flat_map(move |lo| (0..size).map(move |hi| RingElement { lo, hi }))
    }

    fn times_xi(&self, c: RingElement) -> RingElement {
        let top = self.m - 1;
        let overflow = c.coord(top);
        let shifted = RingElement {
            lo: (c.lo << 1) & self.coord_mask,
            hi: (c.hi << 1) & self.coord_mask,
        };
        shifted + self.neg_h_low.scale(overflow)
    }

    /// Product reduced modulo h(X), by Horner's rule in ξ.
    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        let mut acc = RingElement::ZERO;
        for i in (0..self.m).rev() {
            acc = self.times_xi(acc) + a.scale(b.coord(i));
        }
        acc
    }

    pub fn pow(&self, a: RingElement, e: u64) -> RingElement {
        let mut result = RingElement::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// The Teichmüller representative of a residue: 0 ↦ 0, θ^k ↦ ξ^k.
    pub fn teichmuller(&self, x: FieldElement) -> RingElement {
        match self.field.log(x) {
            None => RingElement::ZERO,
            Some(k) => self.pow[k as usize],
        }
    }

    pub fn is_teichmuller(&self, c: RingElement) -> bool {
        self.teichmuller(c.mu()) == c
    }

    /// Index k with c = ξ^k for c ∈ 𝒯∖{0}.
    pub fn log_teichmuller(&self, c: RingElement) -> Option<u32> {
        let k = self.field.log(c.mu())?;
        (self.pow[k as usize] == c).then_some(k)
    }

    /// τ(c) = c^{2^m}, computed as the Teichmüller lift of μ(c).
    pub fn tau(&self, c: RingElement) -> RingElement {
        self.teichmuller(c.mu())
    }

    /// The 2-adic representation c = a + 2b with a, b ∈ 𝒯.
    pub fn two_adic(&self, c: RingElement) -> (RingElement, RingElement) {
        let a = self.tau(c);
        let d = c - a;
        debug_assert_eq!(d.lo, 0);
        (a, self.teichmuller(FieldElement(d.hi)))
    }

    /// Frobenius f(a + 2b) = a² + 2b².
    pub fn frobenius(&self, c: RingElement) -> RingElement {
        let (a, b) = self.two_adic(c);
        self.mul(a, a) + self.mul(b, b).double()
    }

    /// Relative trace T(c) = c + f(c) + … + f^{m−1}(c), by definition.
    pub fn trace_slow(&self, c: RingElement) -> u8 {
        let mut acc = RingElement::ZERO;
        let mut x = c;
        for _ in 0..self.m {
            acc += x;
            x = self.frobenius(x);
        }
        debug_assert_eq!(acc.lo >> 1, 0);
        debug_assert_eq!(acc.hi >> 1, 0);
        acc.coord(0)
    }

    /// Relative trace via the ℤ₄-linear functional on coordinates.
    pub fn trace(&self, c: RingElement) -> u8 {
        let mut acc = 0u32;
        for (i, &t) in self.basis_trace.iter().enumerate() {
            acc += u32::from(c.coord(i as u32)) * u32::from(t);
        }
        (acc & 3) as u8
    }

    /// T(ξ^i) for the coordinate basis.
    pub fn basis_trace(&self) -> &[u8] {
        &self.basis_trace
    }

    pub fn mu(&self, c: RingElement) -> FieldElement {
        c.mu()
    }

    pub fn is_unit(&self, c: RingElement) -> bool {
        !c.is_zero_divisor()
    }

    /// Inverse of a unit. For c = ξ^r(1 + 2t), c² = ξ^{2r}, so c⁻¹ = c·ξ^{−2r}.
    pub fn inverse(&self, c: RingElement) -> Result<RingElement> {
        let r = self
            .field
            .log(c.mu())
            .ok_or_else(|| Error::ZeroDivisor(self.format(c)))?;
        Ok(self.mul(c, self.xi_pow(-2 * i64::from(r))))
    }

    /// Exact sum Σ_{ν ∈ R*} i^{T(ν)} as a Gaussian integer.
    pub fn unit_character_sum(&self) -> Complex<BigInt> {
        let mut counts = [0i64; 4];
        for c in self.elements().filter(|c| self.is_unit(*c)) {
            counts[self.trace(c) as usize] += 1;
        }
        Complex::new(BigInt::from(counts[0] - counts[2]), BigInt::from(counts[1] - counts[3]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ring3() -> GaloisRing {
        GaloisRing::new(3).unwrap()
    }

    #[test]
    fn additive_table_m3() {
        let expect = ["100", "010", "001", "132", "233", "331", "121"];
        let doubled = ["200", "020", "002", "220", "022", "222", "202"];
        let r = ring3();
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(r.format(r.xi_pow(k as i64)), *e, "ξ^{k}");
            assert_eq!(r.format(r.xi_pow(k as i64).double()), doubled[k]);
        }
        assert_eq!(r.mul(r.xi_pow(6), r.xi()), RingElement::ONE);
        assert_eq!(r.mul(r.xi(), r.xi_pow(2)), r.xi_pow(3));
    }

    #[test]
    fn mu_of_xi_cubed() {
        let r = ring3();
        let x = r.xi_pow(3).mu();
        assert_eq!(x, FieldElement(0b011));
    }

    #[test]
    fn every_default_ring_builds() {
        for m in 2..=10 {
            let r = GaloisRing::new(m).unwrap();
            assert_eq!(r.powers().len() as u32, r.n());
            let distinct: std::collections::HashSet<_> = r.powers().iter().collect();
            assert_eq!(distinct.len() as u32, r.n());
        }
        assert!(matches!(GaloisRing::new(1), Err(Error::DegreeOutOfRange(1))));
        assert!(matches!(GaloisRing::new(16), Err(Error::DegreeOutOfRange(16))));
    }

    #[test]
    fn tau_is_power_two_to_m() {
        let r = ring3();
        for c in r.elements() {
            assert_eq!(r.tau(c), r.pow(c, 1 << r.m()));
        }
    }

    #[test]
    fn tau_multiplicative_and_two_adic_m3() {
        let r = ring3();
        for c in r.elements() {
            let (a, b) = r.two_adic(c);
            assert!(r.is_teichmuller(a) && r.is_teichmuller(b));
            assert_eq!(a + b.double(), c);
            for d in r.elements() {
                assert_eq!(r.tau(r.mul(c, d)), r.mul(r.tau(c), r.tau(d)));
            }
        }
        assert_eq!(r.two_adic(RingElement::from_z4(3)), (RingElement::ONE, RingElement::ONE));
    }

    #[test]
    fn tau_twisted_additivity() {
        // τ(a + b) = τ(a) + τ(b) + 2(τ(a)τ(b))^{2^{m−1}}.
        let r = ring3();
        for c in r.elements() {
            for d in r.elements() {
                let (tc, td) = (r.tau(c), r.tau(d));
                let cross = r.pow(r.mul(tc, td), 1 << (r.m() - 1));
                assert_eq!(r.tau(c + d), tc + td + cross.double());
            }
        }
    }

    #[test]
    fn frobenius_automorphism_m3() {
        let r = ring3();
        assert_eq!(r.frobenius(r.xi()), r.xi_pow(2));
        for k in 0..4 {
            let z = RingElement::from_z4(k);
            assert_eq!(r.frobenius(z), z);
        }
        let mut fixed = 0;
        for c in r.elements() {
            let mut x = c;
            for _ in 0..r.m() {
                x = r.frobenius(x);
            }
            assert_eq!(x, c);
            if r.frobenius(c) == c {
                fixed += 1;
            }
            assert_eq!(r.frobenius(c).mu(), r.field().square(c.mu()));
            for d in r.elements() {
                assert_eq!(r.frobenius(c + d), r.frobenius(c) + r.frobenius(d));
                assert_eq!(r.frobenius(r.mul(c, d)), r.mul(r.frobenius(c), r.frobenius(d)));
            }
        }
        assert_eq!(fixed, 4);
    }

    #[test]
    fn trace_properties() {
        for m in [3, 4, 5] {
            let r = GaloisRing::new(m).unwrap();
            let mut hits = [0usize; 4];
            for c in r.elements() {
                let t = r.trace(c);
                assert_eq!(t, r.trace_slow(c));
                assert_eq!(t & 1 == 1, r.field().trace(c.mu()));
                hits[t as usize] += 1;
            }
            assert_eq!(hits, [1usize << (2 * m - 2); 4]);
            assert_eq!(r.trace(RingElement::ONE), (m % 4) as u8);
            assert_eq!(r.trace(RingElement::ZERO), 0);
        }
    }

    #[test]
    fn inverse_of_units() {
        let r = ring3();
        for c in r.elements() {
            match r.inverse(c) {
                Ok(inv) => assert_eq!(r.mul(c, inv), RingElement::ONE),
                Err(Error::ZeroDivisor(_)) => assert!(c.is_zero_divisor()),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn sum_of_powers_vanishes() {
        for m in [3, 5, 7] {
            let r = GaloisRing::new(m).unwrap();
            let s = r.powers().iter().fold(RingElement::ZERO, |a, &b| a + b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn unit_character_sum_is_zero() {
        for m in [3, 4, 5] {
            assert!(GaloisRing::new(m).unwrap().unit_character_sum().is_zero());
        }
    }

    #[test]
    fn mu_is_homomorphism_m3() {
        let r = ring3();
        for c in r.elements() {
            assert!(c.double().mu().is_zero());
            for d in r.elements() {
                assert_eq!(r.mul(c, d).mu(), r.field().mul(c.mu(), d.mu()));
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let r = ring3();
        for c in r.elements() {
            assert_eq!(r.parse(&r.format(c)).unwrap(), c);
        }
        assert!(r.parse("12").is_err());
        assert!(r.parse("124").is_err());
    }
}
