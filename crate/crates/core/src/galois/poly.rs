//! Polynomials over ℤ₄ and ℤ₂, Graeffe lifting and the Kerdock generator polynomial.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial over ℤ₄ with coefficients in `{0,1,2,3}`, lowest degree first.
///
/// The text form lists coefficients low-degree first, so `X³+2X²+X+3`
/// prints as `"3121"`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    pub fn zero() -> Self {
        Z4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Z4Poly { coeffs: vec![1] }
    }

    pub fn new(coeffs: Vec<u8>) -> Self {
        let mut p = Z4Poly { coeffs: coeffs.into_iter().map(|c| c & 3).collect() };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Z4Poly::new(coeffs.iter().map(|c| c.rem_euclid(4) as u8).collect())
    }

    /// `X^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0u8; n + 1];
        c[0] = 3;
        c[n] = 1;
        Z4Poly::new(c)
    }

    /// Lifts a binary polynomial given as a bitmask (bit i is the coefficient of Xⁱ).
    pub fn from_binary_mask(mask: u64) -> Self {
        Z4Poly::new((0..64).map(|i| (mask >> i & 1) as u8).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Z4Poly::new((0..len).map(|i| (self.coeff(i) + other.coeff(i)) & 3).collect())
    }

    pub fn neg(&self) -> Self {
        Z4Poly::new(self.coeffs.iter().map(|&c| (4 - c) & 3).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u8) -> Self {
        Z4Poly::new(self.coeffs.iter().map(|&c| (c * (k & 3)) & 3).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += u32::from(a) * u32::from(b);
            }
        }
        Z4Poly::new(out.into_iter().map(|c| (c & 3) as u8).collect())
    }

    /// Division with remainder by a polynomial whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidParameters("division by zero polynomial".into()))?;
        let lead = divisor.leading();
        if lead % 2 == 0 {
            return Err(Error::ZeroDivisor(format!("leading coefficient {lead}")));
        }
        // 1 and 3 are their own inverses mod 4.
        let inv = lead;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = (rem[i] * inv) & 3;
            if q == 0 {
                continue;
            }
            quot[i - dd] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = (rem[i - dd + j] + 4 * 4 - q * d) & 3;
            }
        }
        Ok((Z4Poly::new(quot), Z4Poly::new(rem)))
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidParameters(format!("{divisor} does not divide {self}")))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Coefficients reversed: `X^d p(1/X)` for `d = deg p`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Z4Poly::new(c)
    }

    /// Reduction mod 2 as a bitmask.
    pub fn mod2_mask(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | u64::from(c & 1) << i)
    }

    /// Evaluates at an integer point, mod 4.
    pub fn eval_z4(&self, x: u8) -> u8 {
        self.coeffs.iter().rev().fold(0u8, |acc, &c| (acc * x + c) & 3)
    }

    /// Keeps every coefficient of even index and halves the exponents.
    fn even_part_halved(&self) -> Result<Self> {
        let mut out = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                out.push(c);
            } else if c != 0 {
                return Err(Error::LiftFailed(format!("odd-degree term X^{i} survives in {self}")));
            }
        }
        Ok(Z4Poly::new(out))
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for c in &self.coeffs {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Poly({self})")
    }
}

impl FromStr for Z4Poly {
    type Err = Error;

    /// Parses a low-degree-first coefficient string such as `"323001"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let mut c = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d < 4 => c.push(d as u8),
                _ => return Err(Error::InvalidSymbol { position: i, symbol: ch }),
            }
        }
        Ok(Z4Poly::new(c))
    }
}

/// Parses a binary polynomial written low-degree first (`"1101"` is `1 + X + X³`).
pub fn parse_binary_poly(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Empty);
    }
    if s.len() > 64 {
        return Err(Error::Parse(format!("binary polynomial of length {} too long", s.len())));
    }
    let mut mask = 0u64;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => mask |= 1 << i,
            _ => return Err(Error::InvalidSymbol { position: i, symbol: ch }),
        }
    }
    Ok(mask)
}

pub fn binary_degree(mask: u64) -> Option<u32> {
    (mask != 0).then(|| 63 - mask.leading_zeros())
}

/// `a·b mod p` over GF(2), all as bitmasks.
fn gf2_mulmod(a: u64, b: u64, p: u64, deg: u32) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> deg & 1 == 1 {
            a ^= p;
        }
    }
    acc
}

fn gf2_x_pow(e: u64, p: u64, deg: u32) -> u64 {
    let mut result = 1u64;
    let mut base = if deg == 1 { 2 ^ p } else { 2 };
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = gf2_mulmod(result, base, p, deg);
        }
        base = gf2_mulmod(base, base, p, deg);
        e >>= 1;
    }
    result
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff the binary polynomial of degree `m` is primitive, i.e. X has
/// multiplicative order exactly `2^m − 1` modulo it.
pub fn is_primitive_binary(mask: u64) -> bool {
    let Some(m) = binary_degree(mask) else { return false };
    if m == 0 || m > 32 || mask & 1 == 0 {
        return false;
    }
    let n = (1u64 << m) - 1;
    if gf2_x_pow(n, mask, m) != 1 {
        return false;
    }
    prime_factors(n).into_iter().all(|p| gf2_x_pow(n / p, mask, m) != 1)
}

/// Lifts a primitive binary polynomial to the monic basic irreducible
/// `h ∈ ℤ₄[X]` whose roots are the squares of the roots of `h₂` lifted,
/// via `h(X²) = ±(e(X)² − d(X)²)` with `h₂ = e − d`.
///
/// ```
/// use z4codes::galois::poly::graeffe_lift;
///
/// assert_eq!(graeffe_lift(0b1011).unwrap().to_string(), "3121");
/// assert_eq!(graeffe_lift(0b100101).unwrap().to_string(), "323001");
/// ```
pub fn graeffe_lift(h2: u64) -> Result<Z4Poly> {
    if !is_primitive_binary(h2) {
        return Err(Error::NotPrimitive(format!("{:b}", h2)));
    }
    let m = binary_degree(h2).unwrap_or(0) as usize;
    let even = Z4Poly::from_binary_mask(h2 & 0x5555_5555_5555_5555);
    let odd = Z4Poly::from_binary_mask(h2 & 0xAAAA_AAAA_AAAA_AAAA);
    // d = −odd, and d² = odd².
    let diff = even.mul(&even).sub(&odd.mul(&odd));
    let mut h = diff.even_part_halved()?;
    if h.degree() != Some(m) {
        return Err(Error::LiftFailed(format!("lift {h} has the wrong degree")));
    }
    if !h.is_monic() {
        h = h.neg();
    }
    if h.mod2_mask() != h2 {
        return Err(Error::LiftFailed(format!("{h} does not reduce to {h2:b}")));
    }
    let n = (1usize << m) - 1;
    if !h.divides(&Z4Poly::x_pow_minus_one(n)) {
        return Err(Error::LiftFailed(format!("{h} does not divide X^{n} - 1")));
    }
    Ok(h)
}

/// The Kerdock generator polynomial: the reciprocal of `(Xⁿ−1)/((X−1)h(X))`,
/// signed so that the parity coordinate `−g(1)` equals 1.
///
/// ```
/// use z4codes::galois::poly::{graeffe_lift, kerdock_generator_poly};
///
/// let h = graeffe_lift(0b1011).unwrap();
/// assert_eq!(kerdock_generator_poly(&h).unwrap().to_string(), "3121");
/// ```
pub fn kerdock_generator_poly(h: &Z4Poly) -> Result<Z4Poly> {
    let m = h.degree().ok_or(Error::Empty)?;
    let n = (1usize << m) - 1;
    let xm1 = Z4Poly::from_ints(&[-1, 1]);
    let q = Z4Poly::x_pow_minus_one(n).exact_div(&xm1.mul(h))?;
    let g = q.reverse();
    Ok(if g.eval_z4(1) == 3 { g } else { g.neg() })
}

/// Reciprocal polynomial of `p`, normalized so the leading coefficient is 1.
pub fn reciprocal_monic(p: &Z4Poly) -> Result<Z4Poly> {
    let r = p.reverse();
    match r.leading() {
        1 => Ok(r),
        3 => Ok(r.neg()),
        c => Err(Error::ZeroDivisor(format!("reciprocal of {p} has leading coefficient {c}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graeffe_m3() {
        let h = graeffe_lift(0b1011).unwrap();
        assert_eq!(h, Z4Poly::from_ints(&[-1, 1, 2, 1]));
    }

    #[test]
    fn graeffe_m5() {
        assert_eq!(graeffe_lift(0b100101).unwrap().to_string(), "323001");
    }

    #[test]
    fn graeffe_m7_divides() {
        let h2 = 0b1000_0011;
        let h = graeffe_lift(h2).unwrap();
        assert_eq!(h.mod2_mask(), h2);
        let (_, r) = Z4Poly::x_pow_minus_one(127).div_rem(&h).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn graeffe_rejects_non_primitive() {
        // X⁴+X³+X²+X+1 is irreducible but X has order 5.
        assert!(matches!(graeffe_lift(0b11111), Err(Error::NotPrimitive(_))));
        // X³+X²+X+1 = (X+1)³.
        assert!(graeffe_lift(0b1111).is_err());
    }

    #[test]
    fn generator_poly_m5() {
        let h = graeffe_lift(0b100101).unwrap();
        let g = kerdock_generator_poly(&h).unwrap();
        assert_eq!(g.to_string(), "11120122010303133013212213");
    }

    #[test]
    fn primitive_detection() {
        for &(mask, ok) in &[(0b111u64, true), (0b1011, true), (0b1101, true), (0b11001, true), (0b10101, false)] {
            assert_eq!(is_primitive_binary(mask), ok, "{mask:b}");
        }
    }

    #[test]
    fn parse_and_display() {
        let p: Z4Poly = "3121".parse().unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "3121");
        assert!("3141".parse::<Z4Poly>().is_err());
        assert_eq!(parse_binary_poly("1101").unwrap(), 0b1011);
        assert!(parse_binary_poly("12").is_err());
    }

    #[test]
    fn reciprocal_of_h() {
        let h = graeffe_lift(0b1011).unwrap();
        // 3 + X + 2X² + X³ reversed is 1 + 2X + X² + 3X³; negated to monic.
        assert_eq!(reciprocal_monic(&h).unwrap().to_string(), "3231");
    }

    fn arb_poly() -> impl Strategy<Value = Z4Poly> {
        proptest::collection::vec(0u8..4, 0..12).prop_map(Z4Poly::new)
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly(), lead in prop_oneof![Just(1u8), Just(3u8)]) {
            let mut bc = b.coeffs().to_vec();
            bc.push(lead);
            let b = Z4Poly::new(bc);
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&a.neg()), Z4Poly::zero());
        }
    }
}
