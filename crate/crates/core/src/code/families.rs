//! Kerdock, Preparata, octacode, ZRM, QRM, Delsarte-Goethals and Goethals codes.
//!
//! Extended cyclic codes use coordinates `(∞, 0, 1, …, n−1)`, with ∞ first.

use crate::code::binary::{monomial_vector, monomials};
use crate::code::{CodeInfo, Family, Z4Code};
use crate::error::{Error, Result};
use crate::galois::field::FieldElement;
use crate::galois::poly::{kerdock_generator_poly, Z4Poly};
use crate::galois::{GaloisRing, RingElement};
use crate::z4::{BinaryVector, Z4Vector};

/// Largest m accepted by the family constructors.
pub const MAX_M: u32 = 9;

fn check_m(m: u32, allow_even: bool) -> Result<()> {
    if !(2..=MAX_M).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    if !allow_even && m % 2 == 0 {
        return Err(Error::InvalidParameters(format!("m = {m} must be odd")));
    }
    if m < 3 && !allow_even {
        return Err(Error::InvalidParameters("m must be at least 3".into()));
    }
    Ok(())
}

/// The word `(c_∞, c_0, …, c_{n−1})` with `c_t = T(λξ^t) + ε` and `c_∞ = ε`.
pub fn kerdock_codeword(ring: &GaloisRing, lambda: RingElement, eps: u8) -> Z4Vector {
    let n = ring.n() as usize;
    let mut w = Z4Vector::zeros(n + 1);
    w.set(0, eps & 3);
    for (t, &x) in ring.powers().iter().enumerate() {
        w.set(t + 1, (ring.trace(ring.mul(lambda, x)) + eps) & 3);
    }
    w
}

/// All-ones row followed by the m coordinate rows of `ξ^t`.
pub fn kerdock_trace_rows(ring: &GaloisRing) -> Vec<Z4Vector> {
    let n = ring.n() as usize;
    let mut rows = vec![Z4Vector::from_symbols(&vec![1; n + 1]).expect("ones are symbols")];
    for i in 0..ring.m() {
        let mut row = Z4Vector::zeros(n + 1);
        for (t, x) in ring.powers().iter().enumerate() {
            row.set(t + 1, x.coord(i));
        }
        rows.push(row);
    }
    rows
}

/// The m + 1 cyclic shifts of `(g_∞, g_0, …, g_δ)` with `g_∞ = −g(1)`.
pub fn kerdock_shift_rows(ring: &GaloisRing) -> Result<Vec<Z4Vector>> {
    let g = kerdock_generator_poly(ring.h())?;
    Ok(shift_rows(&g, ring.n() as usize, ring.m() as usize + 1))
}

/// `count` rows `(p_∞, 0…0, p_0, …, p_d, 0…0)` with `p_∞ = −p(1)`, shifted by 0, 1, ….
fn shift_rows(p: &Z4Poly, n: usize, count: usize) -> Vec<Z4Vector> {
    let inf = (4 - p.eval_z4(1)) & 3;
    let d = p.degree().unwrap_or(0);
    (0..count)
        .map(|s| {
            let mut row = Z4Vector::zeros(n + 1);
            row.set(0, inf);
            for i in 0..=d {
                row.set(1 + s + i, p.coeff(i));
            }
            row
        })
        .collect()
}

/// Rows generating the Preparata code: `n − m` shifts of `(h_∞, h_0, …, h_m)`.
pub fn preparata_shift_rows(ring: &GaloisRing) -> Vec<Z4Vector> {
    let n = ring.n() as usize;
    shift_rows(ring.h(), n, n - ring.m() as usize)
}

/// The Kerdock code of length 2^m (m odd unless `allow_even`).
///
/// Both generator forms are built and checked to span the same code.
pub fn kerdock_with(ring: &GaloisRing, allow_even: bool) -> Result<Z4Code> {
    let m = ring.m();
    check_m(m, allow_even)?;
    let n = ring.n() as usize + 1;
    let info = CodeInfo::new(Family::Kerdock, Some(m), None);
    let trace_form = Z4Code::from_generators(&kerdock_trace_rows(ring), n, info.clone())?;
    let shift_form = Z4Code::from_generators(&kerdock_shift_rows(ring)?, n, info)?;
    if !trace_form.same_code(&shift_form) {
        return Err(Error::LiftFailed("the two Kerdock generator forms disagree".into()));
    }
    if (trace_form.k1(), trace_form.k2()) != (m as usize + 1, 0) {
        return Err(Error::LiftFailed(format!("Kerdock code has type {}", trace_form.type_string())));
    }
    Ok(trace_form)
}

pub fn kerdock(ring: &GaloisRing) -> Result<Z4Code> {
    kerdock_with(ring, false)
}

/// The octacode: the Kerdock code at m = 3.
pub fn octacode() -> Z4Code {
    let ring = GaloisRing::new(3).expect("m = 3 ring");
    kerdock(&ring)
        .expect("m = 3 Kerdock code")
        .with_info(CodeInfo::new(Family::Octacode, Some(3), None))
}

/// The Preparata code, the dual of the Kerdock code; checked against the `h` shift rows.
pub fn preparata(ring: &GaloisRing) -> Result<Z4Code> {
    let k = kerdock(ring)?;
    let p = k.dual().with_info(CodeInfo::new(Family::Preparata, Some(ring.m()), None));
    let n = ring.n() as usize;
    let expect = n - ring.m() as usize;
    if (p.k1(), p.k2()) != (expect, 0) {
        return Err(Error::LiftFailed(format!("Preparata code has type {}", p.type_string())));
    }
    if !preparata_shift_rows(ring).iter().all(|r| p.contains(r)) {
        return Err(Error::LiftFailed("h shift rows are not in the dual of the Kerdock code".into()));
    }
    Ok(p)
}

/// 2-adic pieces of `λ = ξ^r + 2ξ^s` in residue form: (μ(ξ^r), μ(ξ^s)).
fn residues(ring: &GaloisRing, lambda: RingElement) -> (FieldElement, FieldElement) {
    let (a, b) = ring.two_adic(lambda);
    (a.mu(), b.mu())
}

/// Q(x) = Σ_{j=1}^{(m−1)/2} tr(x^{1+2^j}).
pub fn kerdock_q(ring: &GaloisRing, x: FieldElement) -> bool {
    let f = ring.field();
    (1..=(ring.m() - 1) / 2).fold(false, |acc, j| acc ^ f.trace(f.pow(x, 1 + (1i64 << j))))
}

/// The binary pair `(a, b)` with `a_t = tr(πθ^t) + A`, `b_t = tr(ηθ^t) + Q(πθ^t) + B`,
/// where π = μ(ξ^r), η = μ(εξ^r + ξ^s), A = α(ε), B = β(ε) for λ = ξ^r + 2ξ^s.
pub fn kerdock_binary_form(
    ring: &GaloisRing,
    lambda: RingElement,
    eps: u8,
) -> Result<(BinaryVector, BinaryVector)> {
    if ring.m() % 2 == 0 {
        return Err(Error::InvalidParameters("binary form requires odd m".into()));
    }
    let f = ring.field();
    let (pi, s) = residues(ring, lambda);
    let big_a = eps & 1 == 1;
    let big_b = eps >> 1 & 1 == 1;
    let eta = if big_a { pi + s } else { s };
    let n = ring.n() as usize;
    let mut a = BinaryVector::zeros(n + 1);
    let mut b = BinaryVector::zeros(n + 1);
    a.set(0, big_a);
    b.set(0, big_b);
    for t in 0..n {
        let th = f.exp(t as i64);
        let x = f.mul(pi, th);
        a.set(t + 1, f.trace(x) ^ big_a);
        b.set(t + 1, f.trace(f.mul(eta, th)) ^ kerdock_q(ring, x) ^ big_b);
    }
    Ok((a, b))
}

/// ZRM(r, m) of length 2^m: monomials of degree < r as 0/1 rows plus twice those of degree r.
///
/// Its Gray image is RM(r, m+1) for r ∈ {0, 1, 2, m, m+1}; other r are built but
/// carry an "unproven image" note.
pub fn zrm(r: u32, m: u32) -> Result<Z4Code> {
    if !(1..=MAX_M + 1).contains(&m) || r > m + 1 {
        return Err(Error::InvalidParameters(format!("ZRM({r},{m}) out of range")));
    }
    let mut rows = Vec::new();
    for mono in monomials(m, r) {
        let v = monomial_vector(m, &mono);
        if (mono.len() as u32) < r {
            rows.push(Z4Vector::from_binary(&v));
        } else {
            rows.push(Z4Vector::twice_binary(&v));
        }
    }
    let mut info = CodeInfo::new(Family::Zrm, Some(m), Some(r));
    if !(r <= 2 || r >= m) {
        info.note = Some("unproven image".into());
    }
    Z4Code::from_generators(&rows, 1 << m, info)
}

/// Smallest representatives of the cyclotomic cosets of 2 modulo n, increasing.
pub fn cyclotomic_representatives(n: u32) -> Vec<u32> {
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for j in 0..n {
        if seen[j as usize] {
            continue;
        }
        reps.push(j);
        let mut x = j;
        loop {
            seen[x as usize] = true;
            x = (2 * x) % n;
            if x == j {
                break;
            }
        }
    }
    reps
}

/// Binary weight of an exponent, with 0 ≡ n counted as weight m.
pub fn exponent_weight(j: u32, m: u32) -> u32 {
    if j == 0 {
        m
    } else {
        j.count_ones()
    }
}

/// QRM(r, m): the repetition code plus `(0, T(λξ^{jt}))_t` for every coset
/// representative j with weight ≤ r.
pub fn qrm(ring: &GaloisRing, r: u32) -> Result<Z4Code> {
    let m = ring.m();
    if r > m {
        return Err(Error::InvalidParameters(format!("QRM({r},{m}) needs r ≤ m")));
    }
    let n = ring.n() as usize;
    let mut rows = vec![Z4Vector::from_symbols(&vec![1; n + 1]).expect("ones are symbols")];
    for j in cyclotomic_representatives(ring.n()) {
        if exponent_weight(j, m) > r {
            continue;
        }
        for i in 0..m {
            let lam = ring.basis(i);
            let mut row = Z4Vector::zeros(n + 1);
            for t in 0..n {
                let x = ring.mul(lam, ring.xi_pow(i64::from(j) * t as i64));
                row.set(t + 1, ring.trace(x));
            }
            rows.push(row);
        }
    }
    Z4Code::from_generators(&rows, n + 1, CodeInfo::new(Family::Qrm, Some(m), Some(r)))
}

/// Generator of DG(m, r): the Kerdock rows and `2ξ^{(1+2^j)t}` rows for j = 1…r.
pub fn delsarte_goethals_rows(ring: &GaloisRing, r: u32) -> Vec<Z4Vector> {
    let n = ring.n() as usize;
    let mut rows = kerdock_trace_rows(ring);
    for j in 1..=r {
        let e = 1 + (1i64 << j);
        for i in 0..ring.m() {
            let mut row = Z4Vector::zeros(n + 1);
            for t in 0..n {
                row.set(t + 1, (ring.xi_pow(e * t as i64).coord(i) & 1) * 2);
            }
            rows.push(row);
        }
    }
    rows
}

pub fn delsarte_goethals(ring: &GaloisRing, r: u32) -> Result<Z4Code> {
    let m = ring.m();
    check_m(m, false)?;
    if r < 1 || r > (m - 1) / 2 {
        return Err(Error::InvalidParameters(format!("DG({m},{r}) needs 1 ≤ r ≤ {}", (m - 1) / 2)));
    }
    let code = Z4Code::from_generators(
        &delsarte_goethals_rows(ring, r),
        ring.n() as usize + 1,
        CodeInfo::new(Family::Dg, Some(m), Some(r)),
    )?;
    let expect = (m as usize + 1, (r * m) as usize);
    if (code.k1(), code.k2()) != expect {
        return Err(Error::LiftFailed(format!("DG({m},{r}) has type {}", code.type_string())));
    }
    Ok(code)
}

/// The Goethals code, the dual of DG(m, 1).
pub fn goethals(ring: &GaloisRing) -> Result<Z4Code> {
    Ok(delsarte_goethals(ring, 1)?
        .dual()
        .with_info(CodeInfo::new(Family::Goethals, Some(ring.m()), None)))
}

/// Builds a code by family name and parameters.
pub fn build(family: Family, m: u32, r: Option<u32>, allow_even: bool) -> Result<Z4Code> {
    let need_r = || r.ok_or_else(|| Error::InvalidParameters(format!("{family} needs --r")));
    match family {
        Family::Octacode => {
            if m != 3 {
                return Err(Error::InvalidParameters("the octacode has m = 3".into()));
            }
            Ok(octacode())
        }
        Family::Zrm => zrm(need_r()?, m),
        Family::Generic => Err(Error::InvalidParameters("generic codes are given by generator rows".into())),
        _ => {
            check_m(m, allow_even || family == Family::Qrm)?;
            let ring = GaloisRing::new(m)?;
            match family {
                Family::Kerdock => kerdock_with(&ring, allow_even),
                Family::Preparata => preparata(&ring),
                Family::Qrm => qrm(&ring, need_r()?),
                Family::Dg => delsarte_goethals(&ring, need_r()?),
                Family::Goethals => goethals(&ring),
                _ => unreachable!(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: u32) -> GaloisRing {
        GaloisRing::new(m).unwrap()
    }

    #[test]
    fn kerdock_m3_matrices() {
        let r = ring(3);
        let shift: Vec<String> = kerdock_shift_rows(&r).unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(shift, ["13121000", "10312100", "10031210", "10003121"]);
        let trace: Vec<String> = kerdock_trace_rows(&r).iter().map(|v| v.to_string()).collect();
        assert_eq!(trace, ["11111111", "01001231", "00103332", "00012311"]);
    }

    #[test]
    fn kerdock_type_and_codewords() {
        for m in [3, 5] {
            let r = ring(m);
            let k = kerdock(&r).unwrap();
            assert_eq!(k.log2_size(), 2 * (m as usize + 1));
            let mut from_trace = std::collections::BTreeSet::new();
            for lam in r.elements() {
                for eps in 0..4 {
                    let w = kerdock_codeword(&r, lam, eps);
                    assert!(k.contains(&w));
                    from_trace.insert(w);
                }
            }
            assert_eq!(from_trace.len(), 1 << (2 * (m + 1)));
        }
    }

    #[test]
    fn kerdock_zero_lambda() {
        let r = ring(3);
        assert_eq!(kerdock_codeword(&r, RingElement::ZERO, 1).to_string(), "11111111");
    }

    #[test]
    fn binary_form_matches_gray_image() {
        for m in [3, 5] {
            let r = ring(m);
            for lam in r.elements().step_by(7) {
                for eps in 0..4 {
                    let w = kerdock_codeword(&r, lam, eps);
                    let (a, b) = kerdock_binary_form(&r, lam, eps).unwrap();
                    assert_eq!(w.alpha(), a);
                    assert_eq!(w.beta(), b);
                    assert_eq!(w.gray_map(), b.concat(&a.xor(&b)));
                }
            }
        }
    }

    #[test]
    fn preparata_m3_is_octacode() {
        let r = ring(3);
        let p = preparata(&r).unwrap();
        assert!(p.same_code(&octacode()));
    }

    #[test]
    fn preparata_m5_type() {
        let p = preparata(&ring(5)).unwrap();
        assert_eq!((p.k1(), p.k2()), (26, 0));
    }

    #[test]
    fn zrm_m3_rows() {
        let c = zrm(1, 3).unwrap();
        let expect = Z4Code::from_strings(&["11111111", "00002222", "00220022", "02020202"], CodeInfo::generic()).unwrap();
        assert!(c.same_code(&expect));
        let c2 = zrm(2, 3).unwrap();
        let expect2 = Z4Code::from_strings(
            &["11111111", "00001111", "00110011", "01010101", "00000022", "00000202", "00020002"],
            CodeInfo::generic(),
        )
        .unwrap();
        assert!(c2.same_code(&expect2));
        assert_eq!(zrm(3, 5).unwrap().info().note.as_deref(), Some("unproven image"));
    }

    #[test]
    fn qrm_small_cases() {
        let r = ring(3);
        assert!(qrm(&r, 1).unwrap().same_code(&kerdock(&r).unwrap()));
        let rep = qrm(&r, 0).unwrap();
        assert_eq!(rep.log2_size(), 2);
        assert_eq!(qrm(&r, 3).unwrap().log2_size(), 16);
    }

    #[test]
    fn dg_and_goethals_sizes() {
        let r = ring(3);
        let dg = delsarte_goethals(&r, 1).unwrap();
        assert_eq!(dg.log2_size(), 11);
        let g = goethals(&r).unwrap();
        assert_eq!(g.log2_size(), 5);
        assert!(delsarte_goethals(&r, 2).is_err());
    }

    #[test]
    fn cyclotomic_cosets() {
        assert_eq!(cyclotomic_representatives(7), vec![0, 1, 3]);
        assert_eq!(cyclotomic_representatives(15), vec![0, 1, 3, 5, 7]);
    }

    #[test]
    fn build_dispatch() {
        assert!(build(Family::Kerdock, 4, None, false).is_err());
        assert!(build(Family::Kerdock, 4, None, true).is_ok());
        assert!(build(Family::Dg, 3, None, false).is_err());
        assert!(build(Family::Octacode, 5, None, false).is_err());
        assert!(build(Family::Zrm, 3, Some(1), false).is_ok());
    }
}
