//! Coordinate permutations of extended cyclic codes indexed by x ∈ 𝒯, with
//! position 0 ↔ x = 0 and position j+1 ↔ ξ^j.

use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::galois::{GaloisRing, RingElement};

/// Position of a Teichmüller element.
pub fn position(ring: &GaloisRing, x: RingElement) -> Result<usize> {
    if x.is_zero() {
        return Ok(0);
    }
    ring.log_teichmuller(x)
        .map(|j| j as usize + 1)
        .ok_or_else(|| Error::InvalidParameters(format!("{} is not a Teichmüller element", ring.format(x))))
}

fn element(ring: &GaloisRing, pos: usize) -> RingElement {
    if pos == 0 {
        RingElement::ZERO
    } else {
        ring.xi_pow(pos as i64 - 1)
    }
}

/// The map x ↦ τ(ax + b) as a position map: `out[p]` is where position p goes.
pub fn affine_permutation(ring: &GaloisRing, a: RingElement, b: RingElement) -> Result<Vec<usize>> {
    if a.is_zero() {
        return Err(Error::InvalidParameters("a must be nonzero".into()));
    }
    position(ring, a)?;
    position(ring, b)?;
    (0..=ring.n() as usize)
        .map(|p| position(ring, ring.tau(ring.mul(a, element(ring, p)) + b)))
        .collect()
}

/// x ↦ x².
pub fn frobenius_permutation(ring: &GaloisRing) -> Vec<usize> {
    let n = ring.n() as usize;
    (0..=n).map(|p| if p == 0 { 0 } else { 2 * (p - 1) % n + 1 }).collect()
}

/// All pairs (a, b) with a ∈ 𝒯∖{0}, b ∈ 𝒯.
pub fn affine_group(ring: &GaloisRing) -> Vec<(RingElement, RingElement)> {
    let t: Vec<RingElement> = std::iter::once(RingElement::ZERO).chain(ring.powers().iter().copied()).collect();
    let mut out = Vec::with_capacity(t.len() * (t.len() - 1));
    for &a in &t[1..] {
        for &b in &t {
            out.push((a, b));
        }
    }
    out
}

/// Whether moving each position p to `map[p]` preserves the code.
pub fn invariant_under(code: &Z4Code, map: &[usize]) -> Result<bool> {
    if map.len() != code.len() {
        return Err(Error::LengthMismatch { expected: code.len(), actual: map.len() });
    }
    Ok(code.generator().iter().all(|g| code.contains(&g.scatter(map))))
}

pub fn affine_automorphism_check(code: &Z4Code, ring: &GaloisRing, a: RingElement, b: RingElement) -> Result<bool> {
    invariant_under(code, &affine_permutation(ring, a, b)?)
}

pub fn frobenius_invariant(code: &Z4Code, ring: &GaloisRing) -> Result<bool> {
    invariant_under(code, &frobenius_permutation(ring))
}

pub fn negation_invariant(code: &Z4Code) -> bool {
    code.generator().iter().all(|g| code.contains(&-g))
}

/// Number of (a, b) pairs under which the code is invariant.
pub fn count_affine_automorphisms(code: &Z4Code, ring: &GaloisRing) -> Result<usize> {
    let mut k = 0;
    for (a, b) in affine_group(ring) {
        if affine_automorphism_check(code, ring, a, b)? {
            k += 1;
        }
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::families::{goethals, kerdock, preparata};

    #[test]
    fn group_order_and_identity() {
        let ring = GaloisRing::new(3).unwrap();
        assert_eq!(affine_group(&ring).len(), 56);
        let id = affine_permutation(&ring, RingElement::ONE, RingElement::ZERO).unwrap();
        assert_eq!(id, (0..8).collect::<Vec<_>>());
        assert!(affine_permutation(&ring, RingElement::ZERO, RingElement::ONE).is_err());
        for (a, b) in affine_group(&ring) {
            let mut p = affine_permutation(&ring, a, b).unwrap();
            p.sort();
            assert_eq!(p, (0..8).collect::<Vec<_>>());
        }
    }

    #[test]
    fn families_invariant_m3() {
        let ring = GaloisRing::new(3).unwrap();
        for code in [kerdock(&ring).unwrap(), preparata(&ring).unwrap(), goethals(&ring).unwrap()] {
            assert_eq!(count_affine_automorphisms(&code, &ring).unwrap(), 56);
            assert!(frobenius_invariant(&code, &ring).unwrap());
            assert!(negation_invariant(&code));
        }
    }

    #[test]
    fn transposition_breaks_kerdock() {
        let ring = GaloisRing::new(3).unwrap();
        let k = kerdock(&ring).unwrap();
        let mut swap: Vec<usize> = (0..8).collect();
        swap.swap(1, 2);
        assert!(!invariant_under(&k, &swap).unwrap());
    }

    #[test]
    fn kerdock_m5_sample() {
        let ring = GaloisRing::new(5).unwrap();
        let k = kerdock(&ring).unwrap();
        for (a, b) in affine_group(&ring).into_iter().step_by(37) {
            assert!(affine_automorphism_check(&k, &ring, a, b).unwrap());
        }
        assert!(frobenius_invariant(&k, &ring).unwrap());
    }
}
