//! ℤ₄-linearity conditions for binary codes, in a fixed coordinate arrangement
//! where the swap σ pairs coordinate i with i + n.

use std::collections::HashSet;

use crate::code::binary::BinaryCode;
use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::z4::{BinaryVector, Z4Vector};

/// (u + σ(u)) ∗ (v + σ(v)).
pub fn swap_product(u: &BinaryVector, v: &BinaryVector) -> Result<BinaryVector> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { expected: u.len(), actual: v.len() });
    }
    let du = u.xor(&u.swap_halves()?);
    let dv = v.xor(&v.swap_halves()?);
    Ok(du.and(&dv))
}

/// u + v + (u + σ(u)) ∗ (v + σ(v)).
pub fn z4_sum(u: &BinaryVector, v: &BinaryVector) -> Result<BinaryVector> {
    Ok(u.xor(v).xor(&swap_product(u, v)?))
}

/// Checks closure of an arbitrary binary set under [`z4_sum`]; returns the
/// first violating pair of indices.
pub fn z4_linearity_condition(words: &[BinaryVector]) -> Result<Option<(usize, usize)>> {
    let Some(first) = words.first() else { return Ok(None) };
    if first.len() % 2 == 1 {
        return Err(Error::OddLength(first.len()));
    }
    let set: HashSet<&BinaryVector> = words.iter().collect();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate().skip(i) {
            if !set.contains(&z4_sum(u, v)?) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Linear-code variant: (u + σ(u)) ∗ (v + σ(v)) ∈ C. The map is bilinear, so
/// basis pairs suffice.
pub fn linear_z4_linearity_condition(code: &BinaryCode) -> Result<Option<(BinaryVector, BinaryVector)>> {
    if code.len() % 2 == 1 {
        return Err(Error::OddLength(code.len()));
    }
    let basis: Vec<&BinaryVector> = code.basis().collect();
    for (i, u) in basis.iter().enumerate() {
        for v in &basis[i..] {
            if !code.contains(&swap_product(u, v)?) {
                return Ok(Some(((*u).clone(), (*v).clone())));
            }
        }
    }
    Ok(None)
}

/// 2α(a) ∗ α(b) as a quaternary vector.
pub fn twice_alpha_product(a: &Z4Vector, b: &Z4Vector) -> Result<Z4Vector> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    Ok(Z4Vector::twice_binary(&a.alpha().and(&b.alpha())))
}

/// Whether φ(𝒞) is binary linear: 2α(a) ∗ α(b) ∈ 𝒞 for all a, b. Returns a
/// violating pair of generator rows.
pub fn gray_image_linearity(code: &Z4Code) -> Option<(Z4Vector, Z4Vector)> {
    let rows = code.generator();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i..] {
            let p = twice_alpha_product(a, b).expect("generator rows share a length");
            if !code.contains(&p) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// φ(a + b) = φ(a) + φ(b) + (φ(a) + σφ(a)) ∗ (φ(b) + σφ(b)).
pub fn check_gray_sum_identity(a: &Z4Vector, b: &Z4Vector) -> Result<bool> {
    let lhs = (a + b).gray_map();
    Ok(lhs == z4_sum(&a.gray_map(), &b.gray_map())?)
}

/// φ(a) + φ(b) + φ(a + b) = φ(2α(a) ∗ α(b)).
pub fn check_gray_defect_identity(a: &Z4Vector, b: &Z4Vector) -> Result<bool> {
    let lhs = a.gray_map().xor(&b.gray_map()).xor(&(a + b).gray_map());
    Ok(lhs == twice_alpha_product(a, b)?.gray_map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::binary::reed_muller;
    use crate::code::families::{octacode, zrm};
    use proptest::prelude::*;

    fn all_words(n: usize) -> Vec<Z4Vector> {
        (0..1u32 << (2 * n))
            .map(|x| Z4Vector::from_symbols(&(0..n).map(|i| (x >> (2 * i) & 3) as u8).collect::<Vec<_>>()).unwrap())
            .collect()
    }

    #[test]
    fn identities_exhaustive_small() {
        for n in 1..=2 {
            let w = all_words(n);
            for a in &w {
                for b in &w {
                    assert!(check_gray_sum_identity(a, b).unwrap());
                    assert!(check_gray_defect_identity(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn gray_images_pass() {
        for code in [octacode(), zrm(1, 3).unwrap(), zrm(2, 3).unwrap()] {
            let img: Vec<BinaryVector> = code.codewords(1 << 20).unwrap().iter().map(|c| c.gray_map()).collect();
            assert_eq!(z4_linearity_condition(&img).unwrap(), None);
        }
    }

    #[test]
    fn repetition_and_failures() {
        let rep: Vec<BinaryVector> = vec!["00".parse().unwrap(), "11".parse().unwrap()];
        assert_eq!(z4_linearity_condition(&rep).unwrap(), None);
        let bad: Vec<BinaryVector> = vec!["0000".parse().unwrap(), "1000".parse().unwrap(), "0100".parse().unwrap()];
        assert!(z4_linearity_condition(&bad).unwrap().is_some());
        let odd: Vec<BinaryVector> = vec!["000".parse().unwrap()];
        assert!(z4_linearity_condition(&odd).is_err());
    }

    #[test]
    fn reed_muller_linear_condition() {
        assert_eq!(linear_z4_linearity_condition(&reed_muller(1, 4)).unwrap(), None);
        let img = zrm(1, 3).unwrap();
        let bin = BinaryCode::from_generators(
            &img.codewords(1 << 10).unwrap().iter().map(|c| c.gray_map()).collect::<Vec<_>>(),
            16,
        )
        .unwrap();
        assert!(bin.same_code(&reed_muller(1, 4)));
        assert_eq!(linear_z4_linearity_condition(&bin).unwrap(), None);
        let e = BinaryCode::from_generators(&["1000".parse().unwrap(), "0100".parse().unwrap()], 4).unwrap();
        assert!(linear_z4_linearity_condition(&e).unwrap().is_some());
    }

    #[test]
    fn octacode_image_nonlinear() {
        assert!(gray_image_linearity(&octacode()).is_some());
        assert!(gray_image_linearity(&zrm(1, 3).unwrap()).is_none());
    }

    proptest! {
        #[test]
        fn identities_random(a in proptest::collection::vec(0u8..4, 8), b in proptest::collection::vec(0u8..4, 8)) {
            let a = Z4Vector::from_symbols(&a).unwrap();
            let b = Z4Vector::from_symbols(&b).unwrap();
            prop_assert!(check_gray_sum_identity(&a, &b).unwrap());
            prop_assert!(check_gray_defect_identity(&a, &b).unwrap());
        }
    }
}
