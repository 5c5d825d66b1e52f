//! The residue field GF(2^m) with log/antilog tables.

use std::fmt;

use crate::error::{Error, Result};

/// An element of GF(2^m), coordinates over the basis `1, θ, …, θ^{m−1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn bits(self) -> u32 {
        self.0
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:#b})", self.0)
    }
}

/// GF(2^m) defined by a primitive polynomial, with θ its root.
#[derive(Clone, Debug)]
pub struct GaloisField {
    m: u32,
    n: u32,
    poly: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace_mask: u32,
    // Rows (image, preimage) in echelon form for solving w² + w = c.
    as_rows: Vec<(u32, u32)>,
}

impl GaloisField {
    /// Builds the field from a primitive binary polynomial given as a bitmask.
    pub fn new(poly: u64) -> Result<Self> {
        if !super::poly::is_primitive_binary(poly) {
            return Err(Error::NotPrimitive(format!("{poly:b}")));
        }
        let m = super::poly::binary_degree(poly).unwrap_or(0);
        if !(2..=15).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let n = (1u32 << m) - 1;
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; 1 << m];
        let mut x = 1u32;
        for k in 0..n {
            exp.push(x);
            log[x as usize] = k;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly as u32;
            }
        }
        let mut f = GaloisField { m, n, poly, exp, log, trace_mask: 0, as_rows: Vec::new() };
        f.trace_mask = (0..m)
            .filter(|&i| f.trace_slow(FieldElement(1 << i)))
            .fold(0, |acc, i| acc | 1 << i);
        f.as_rows = f.artin_schreier_rows();
        Ok(f)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Multiplicative order `2^m − 1`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poly(&self) -> u64 {
        self.poly
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// θ^k for any integer k.
    pub fn exp(&self, k: i64) -> FieldElement {
        FieldElement(self.exp[k.rem_euclid(i64::from(self.n)) as usize])
    }

    /// Discrete log base θ; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    pub fn theta(&self) -> FieldElement {
        self.exp(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..1u32 << self.m).map(FieldElement)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let k = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElement(self.exp[(k % self.n) as usize])
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let k = i64::from(self.log[a.0 as usize]) * e.rem_euclid(i64::from(self.n));
        self.exp(k)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroDivisor("0".into()));
        }
        Ok(self.exp(-i64::from(self.log[a.0 as usize])))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root, `a^{2^{m−1}}`.
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        if a.is_zero() {
            return a;
        }
        let half = (self.n + 1) / 2;
        let k = u64::from(self.log[a.0 as usize]) * u64::from(half);
        FieldElement(self.exp[(k % u64::from(self.n)) as usize])
    }

    /// Frobenius x ↦ x².
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.square(a)
    }

    /// Absolute trace tr(x) = x + x² + … + x^{2^{m−1}}, by definition.
    pub fn trace_slow(&self, a: FieldElement) -> bool {
        let mut acc = FieldElement::ZERO;
        let mut x = a;
        for _ in 0..self.m {
            acc += x;
            x = self.square(x);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 == 1
    }

    /// Absolute trace via a precomputed linear functional.
    pub fn trace(&self, a: FieldElement) -> bool {
        (a.0 & self.trace_mask).count_ones() & 1 == 1
    }

    fn artin_schreier_rows(&self) -> Vec<(u32, u32)> {
        // Echelon basis of the image of L(w) = w² + w, tracking preimages.
        let mut rows: Vec<(u32, u32)> = Vec::new();
        for i in 0..self.m {
            let w = FieldElement(1 << i);
            let mut img = (self.square(w) + w).0;
            let mut pre = w.0;
            for &(ri, rp) in &rows {
                let top = 31 - ri.leading_zeros();
                if img >> top & 1 == 1 {
                    img ^= ri;
                    pre ^= rp;
                }
            }
            if img != 0 {
                rows.push((img, pre));
                rows.sort_by_key(|r| r.0.leading_zeros());
            }
        }
        rows
    }

    /// A solution of w² + w = c, or `None` when tr(c) = 1.
    pub fn solve_w2_plus_w(&self, c: FieldElement) -> Option<FieldElement> {
        let mut rem = c.0;
        let mut pre = 0u32;
        for &(ri, rp) in &self.as_rows {
            let top = 31 - ri.leading_zeros();
            if rem >> top & 1 == 1 {
                rem ^= ri;
                pre ^= rp;
            }
        }
        (rem == 0).then_some(FieldElement(pre))
    }

    /// Roots of u² + a·u + k = 0 for a ≠ 0: either none or two distinct roots.
    ///
    /// ```
    /// use z4codes::galois::field::{FieldElement, GaloisField};
    ///
    /// let f = GaloisField::new(0b1011).unwrap();
    /// let a = f.theta();
    /// let roots = f.solve_artin_schreier(a, FieldElement::ZERO).unwrap();
    /// assert_eq!(roots, vec![FieldElement::ZERO, a]);
    /// ```
    pub fn solve_artin_schreier(&self, a: FieldElement, k: FieldElement) -> Result<Vec<FieldElement>> {
        if a.is_zero() {
            return Err(Error::DegenerateQuadratic);
        }
        let c = self.div(k, self.square(a))?;
        Ok(match self.solve_w2_plus_w(c) {
            None => Vec::new(),
            Some(w) => {
                let mut roots = vec![self.mul(a, w), self.mul(a, w + FieldElement::ONE)];
                roots.sort();
                roots
            }
        })
    }
}
