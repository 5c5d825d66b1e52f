//! Galois-ring and finite-field transforms, the half-convolution, and
//! transform-domain membership tests.
//!
//! Spectra exclude the ∞ coordinate; words of length `n + 1` carry it first.

use serde_json::Value;

use crate::code::families::exponent_weight;
use crate::error::{Error, Result};
use crate::galois::field::{FieldElement, GaloisField};
use crate::galois::{GaloisRing, RingElement};
use crate::z4::{BinaryVector, Z4Vector};

/// ĉ(λ) = Σ_t c_t ξ^{λt}, λ = 0…n−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpectrum(pub Vec<RingElement>);

/// ã(λ) = Σ_t a_t θ^{λt}, λ = 0…n−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpectrum(pub Vec<FieldElement>);

impl RingSpectrum {
    pub fn to_json(&self, ring: &GaloisRing) -> Value {
        Value::Array(self.0.iter().map(|&x| Value::String(ring.format(x))).collect())
    }
}

impl FieldSpectrum {
    pub fn get(&self, lambda: usize) -> FieldElement {
        self.0[lambda % self.0.len()]
    }

    pub fn to_json(&self, field: &GaloisField) -> Value {
        let m = field.m();
        Value::Array(
            self.0
                .iter()
                .map(|x| Value::String((0..m).map(|i| if x.0 >> i & 1 == 1 { '1' } else { '0' }).collect()))
                .collect(),
        )
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// ĉ(λ) for a single λ.
pub fn ring_coefficient(ring: &GaloisRing, c: &Z4Vector, lambda: u64) -> RingElement {
    let n = u64::from(ring.n());
    let mut acc = RingElement::ZERO;
    for (t, s) in c.nonzeros() {
        acc += ring.xi_pow((lambda * t as u64 % n) as i64).scale(s);
    }
    acc
}

pub fn ring_transform(ring: &GaloisRing, c: &Z4Vector) -> Result<RingSpectrum> {
    check_len(ring.n() as usize, c.len())?;
    Ok(RingSpectrum((0..u64::from(ring.n())).map(|l| ring_coefficient(ring, c, l)).collect()))
}

/// Inversion c_t = −Σ_λ ĉ(λ) ξ^{−λt}; fails if a value leaves ℤ₄.
pub fn inverse_ring_transform(ring: &GaloisRing, spectrum: &RingSpectrum) -> Result<Z4Vector> {
    let n = ring.n() as usize;
    check_len(n, spectrum.0.len())?;
    let mut out = Z4Vector::zeros(n);
    for t in 0..n {
        let mut acc = RingElement::ZERO;
        for (l, &v) in spectrum.0.iter().enumerate() {
            if !v.is_zero() {
                acc += ring.mul(v, ring.xi_pow(-((l * t % n) as i64)));
            }
        }
        let x = -acc;
        if x.lo() >> 1 != 0 || x.hi() >> 1 != 0 {
            return Err(Error::NonIntegralSpectrum(format!("value {} at t = {t}", ring.format(x))));
        }
        out.set(t, x.coord(0));
    }
    Ok(out)
}

/// ã(λ) for a single λ.
pub fn field_coefficient(field: &GaloisField, a: &BinaryVector, lambda: u64) -> FieldElement {
    let n = u64::from(field.n());
    a.ones().fold(FieldElement::ZERO, |acc, t| acc + field.exp((lambda * t as u64 % n) as i64))
}

pub fn field_transform(field: &GaloisField, a: &BinaryVector) -> Result<FieldSpectrum> {
    check_len(field.n() as usize, a.len())?;
    Ok(FieldSpectrum((0..u64::from(field.n())).map(|l| field_coefficient(field, a, l)).collect()))
}

/// 𝓗(ã, λ) = Σ ã(λ₁)ã(λ₂) over λ₁ ≤ λ₂ in [0, n−1] with λ₁ + λ₂ ≡ λ (mod n).
pub fn half_convolution(field: &GaloisField, spectrum: &FieldSpectrum, lambda: usize) -> FieldElement {
    let n = spectrum.0.len();
    let lambda = lambda % n;
    let mut acc = FieldElement::ZERO;
    for l1 in 0..n {
        let l2 = (lambda + n - l1) % n;
        if l1 <= l2 {
            acc += field.mul(spectrum.0[l1], spectrum.0[l2]);
        }
    }
    acc
}

/// 𝓗(ã, λ) as the square root of the half-sum at lag 2λ.
pub fn half_convolution_via_square(field: &GaloisField, spectrum: &FieldSpectrum, lambda: usize) -> FieldElement {
    let n = spectrum.0.len();
    field.sqrt(half_convolution(field, spectrum, 2 * lambda % n))
}

/// 𝓗(ã, λ) as μ(f_λ), where the ring transform of the 0/1 lift of `a` is e_λ + 2f_λ.
pub fn half_convolution_via_ring(ring: &GaloisRing, a: &BinaryVector, lambda: usize) -> FieldElement {
    let c = Z4Vector::from_binary(a);
    let (_, f) = ring.two_adic(ring_coefficient(ring, &c, lambda as u64));
    f.mu()
}

fn split_inf(c: &Z4Vector, n: usize) -> Result<(u8, Z4Vector)> {
    check_len(n + 1, c.len())?;
    let body = Z4Vector::from_symbols(&c.symbols()[1..]).expect("symbols are in range");
    Ok((c.get(0), body))
}

fn split_inf_bin(b: &BinaryVector, n: usize) -> Result<(bool, BinaryVector)> {
    check_len(n + 1, b.len())?;
    Ok((b.get(0), b.slice(1, n + 1)))
}

/// c_∞ + ĉ(0) = 0 and ĉ(1) = 0.
pub fn preparata_member_z4(ring: &GaloisRing, c: &Z4Vector) -> Result<bool> {
    let (inf, body) = split_inf(c, ring.n() as usize)?;
    let c0 = ring_coefficient(ring, &body, 0) + RingElement::from_z4(inf);
    Ok(c0.is_zero() && ring_coefficient(ring, &body, 1).is_zero())
}

/// Goethals-type ℤ₄ conditions: the Preparata conditions plus 2ĉ(1+2^j) = 0 for j = 1…r.
pub fn dg_dual_member_z4(ring: &GaloisRing, c: &Z4Vector, r: u32) -> Result<bool> {
    if !preparata_member_z4(ring, c)? {
        return Ok(false);
    }
    let (_, body) = split_inf(c, ring.n() as usize)?;
    Ok((1..=r).all(|j| ring_coefficient(ring, &body, 1 + (1u64 << j)).double().is_zero()))
}

pub fn goethals_member_z4(ring: &GaloisRing, c: &Z4Vector) -> Result<bool> {
    dg_dual_member_z4(ring, c, 1)
}

struct BinaryParts {
    a_inf: bool,
    b_inf: bool,
    a: BinaryVector,
    b: BinaryVector,
}

fn binary_parts(field: &GaloisField, b: &BinaryVector, ab: &BinaryVector) -> Result<BinaryParts> {
    let n = field.n() as usize;
    check_len(b.len(), ab.len())?;
    let a_full = b.xor(ab);
    let (a_inf, a) = split_inf_bin(&a_full, n)?;
    let (b_inf, b) = split_inf_bin(b, n)?;
    Ok(BinaryParts { a_inf, b_inf, a, b })
}

fn bit(x: bool) -> FieldElement {
    FieldElement(u32::from(x))
}

/// Binary-side conditions on a Gray image `(b, a+b)`.
pub fn preparata_member_binary(field: &GaloisField, b: &BinaryVector, ab: &BinaryVector) -> Result<bool> {
    let p = binary_parts(field, b, ab)?;
    let at = field_transform(field, &p.a)?;
    let a0 = at.get(0);
    let a1 = at.get(1);
    let b0 = field_coefficient(field, &p.b, 0);
    let b1 = field_coefficient(field, &p.b, 1);
    Ok(a0 + bit(p.a_inf) == FieldElement::ZERO
        && a1.is_zero()
        && b0 + bit(p.b_inf) == half_convolution(field, &at, 0) + bit(p.a_inf)
        && b1 == half_convolution(field, &at, 1))
}

/// The classical conditions: ã(0) + a_∞ = 0, ã(1) = 0, b̃(0) + b_∞ = 0, b̃(1)³ = ã(3).
pub fn preparata_member_classical(field: &GaloisField, b: &BinaryVector, ab: &BinaryVector) -> Result<bool> {
    let p = binary_parts(field, b, ab)?;
    let a0 = field_coefficient(field, &p.a, 0);
    let a1 = field_coefficient(field, &p.a, 1);
    let a3 = field_coefficient(field, &p.a, 3);
    let b0 = field_coefficient(field, &p.b, 0);
    let b1 = field_coefficient(field, &p.b, 1);
    Ok(a0 + bit(p.a_inf) == FieldElement::ZERO
        && a1.is_zero()
        && b0 + bit(p.b_inf) == FieldElement::ZERO
        && field.pow(b1, 3) == a3)
}

/// Binary-side Goethals conditions: the Preparata conditions plus ã(1+2^i) = 0 for i = 1…r.
pub fn dg_dual_member_binary(field: &GaloisField, b: &BinaryVector, ab: &BinaryVector, r: u32) -> Result<bool> {
    if !preparata_member_binary(field, b, ab)? {
        return Ok(false);
    }
    let p = binary_parts(field, b, ab)?;
    Ok((1..=r).all(|i| field_coefficient(field, &p.a, 1 + (1u64 << i)).is_zero()))
}

pub fn goethals_member_binary(field: &GaloisField, b: &BinaryVector, ab: &BinaryVector) -> Result<bool> {
    dg_dual_member_binary(field, b, ab, 1)
}

/// Spectral description of QRM(r, m): c_∞ + ĉ(0) = 0 (for r < m) and
/// ĉ(λ) = 0 whenever 1 ≤ wt(λ) ≤ m − 1 − r.
pub fn qrm_member_spectral(ring: &GaloisRing, c: &Z4Vector, r: u32) -> Result<bool> {
    let m = ring.m();
    let (inf, body) = split_inf(c, ring.n() as usize)?;
    if r >= m {
        return Ok(true);
    }
    if !(ring_coefficient(ring, &body, 0) + RingElement::from_z4(inf)).is_zero() {
        return Ok(false);
    }
    let w = m - 1 - r;
    Ok((1..ring.n())
        .filter(|&l| exponent_weight(l, m) <= w)
        .all(|l| ring_coefficient(ring, &body, u64::from(l)).is_zero()))
}

/// Check rows expressing [`qrm_member_spectral`] as a ℤ₄ parity-check matrix.
pub fn qrm_spectral_checks(ring: &GaloisRing, r: u32) -> Vec<Z4Vector> {
    let m = ring.m();
    let n = ring.n() as usize;
    let mut rows = Vec::new();
    if r >= m {
        return rows;
    }
    rows.push(Z4Vector::from_symbols(&vec![1; n + 1]).expect("ones are symbols"));
    let w = m - 1 - r;
    for l in (1..ring.n()).filter(|&l| exponent_weight(l, m) <= w) {
        for i in 0..m {
            let mut row = Z4Vector::zeros(n + 1);
            for t in 0..n {
                row.set(t + 1, ring.xi_pow(i64::from(l) * t as i64).coord(i));
            }
            rows.push(row);
        }
    }
    rows
}
